#pragma once

// The Bennequin fiber surface of a positive braid as a ribbon graph.
//
// Seifert disks S_1..S_w are the vertices; letter j of type i contributes the
// band b_j between S_i and S_{i+1}. Around every disk the attached bands
// appear in letter order, which is what stacking the Seifert disks of a
// braid closure produces. The boundary of the ribbon graph is the closure K;
// it is traced as a cyclic sequence of corners, a corner being the free
// stretch of a disk boundary between two consecutive band attachments.
//
// Product disk arcs are chords of a single Seifert disk. A chord is stored as
// the run of consecutive attachments (positions in the disk's rotation) that
// it cuts off; its endpoints sit in the corners just before and just after
// that run. The run is the chord's "interval side", the rest of the disk its
// "center side".

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tautbraid/braid.hpp"

namespace tautbraid {

/// Corner `pos` of disk `disk` lies between rotation[disk][pos] and the next
/// attachment (cyclically).
struct Corner {
  int disk = 0;
  int pos = 0;
  bool operator==(const Corner&) const = default;
};

struct FiberSurface {
  int disk_count = 0;
  std::vector<int> band_type;                  ///< per letter: generator index i (bands join disks i-1, i, 0-based)
  std::vector<std::vector<int>> rotation;      ///< per disk: incident letters in increasing order
  std::vector<std::vector<int>> position;      ///< per letter: {position at lower disk, position at upper disk}
  std::vector<Corner> boundary_order;          ///< first boundary circle, starting at the top corner of S_1
  std::vector<std::vector<int>> corner_index;  ///< [disk][pos] -> index in boundary_order, -1 if on another circle
  int boundary_components = 0;

  int band_count() const { return static_cast<int>(band_type.size()); }
  int lower_disk(int letter) const { return band_type[static_cast<std::size_t>(letter)] - 1; }
  int upper_disk(int letter) const { return band_type[static_cast<std::size_t>(letter)]; }
  int rotation_size(int disk) const { return static_cast<int>(rotation[static_cast<std::size_t>(disk)].size()); }
  int pos_in(int disk, int letter) const {
    const auto& p = position[static_cast<std::size_t>(letter)];
    return disk == lower_disk(letter) ? p[0] : p[1];
  }
};

namespace detail {

/// Walk one boundary circle from `start`; after corner (d, p) the boundary
/// runs along band rotation[d][p+1] to the far disk.
inline std::vector<Corner> trace_boundary(const FiberSurface& f, Corner start) {
  std::vector<Corner> out;
  Corner c = start;
  do {
    out.push_back(c);
    const auto& rot = f.rotation[static_cast<std::size_t>(c.disk)];
    int e = rot[static_cast<std::size_t>((c.pos + 1) % static_cast<int>(rot.size()))];
    int other = f.lower_disk(e) == c.disk ? f.upper_disk(e) : f.lower_disk(e);
    c = Corner{other, f.pos_in(other, e)};
  } while (!(c == start));
  return out;
}

}  // namespace detail

/// Ribbon-graph surface without the knot requirement; `boundary_components`
/// counts the boundary circles.
inline FiberSurface build_ribbon_surface(const BraidWord& braid) {
  validate(braid);
  FiberSurface f;
  f.disk_count = braid.strand_count;
  f.band_type = braid.letters;
  f.rotation.assign(static_cast<std::size_t>(f.disk_count), {});
  f.position.assign(braid.size(), {0, 0});
  for (std::size_t j = 0; j < braid.size(); ++j) {
    int lo = braid.letters[j] - 1;
    f.position[j][0] = static_cast<int>(f.rotation[static_cast<std::size_t>(lo)].size());
    f.rotation[static_cast<std::size_t>(lo)].push_back(static_cast<int>(j));
    f.position[j][1] = static_cast<int>(f.rotation[static_cast<std::size_t>(lo + 1)].size());
    f.rotation[static_cast<std::size_t>(lo + 1)].push_back(static_cast<int>(j));
  }
  for (int d = 0; d < f.disk_count; ++d)
    if (f.rotation[static_cast<std::size_t>(d)].empty())
      throw Error(ErrorKind::NotKnot, "Seifert disk S_" + std::to_string(d + 1) + " carries no band (split closure)");

  f.corner_index.assign(static_cast<std::size_t>(f.disk_count), {});
  for (int d = 0; d < f.disk_count; ++d) f.corner_index[static_cast<std::size_t>(d)].assign(f.rotation[static_cast<std::size_t>(d)].size(), -1);

  // The top corner of S_1 precedes its first attachment.
  Corner top{0, f.rotation_size(0) - 1};
  f.boundary_order = detail::trace_boundary(f, top);
  for (std::size_t i = 0; i < f.boundary_order.size(); ++i) {
    const Corner& c = f.boundary_order[i];
    f.corner_index[static_cast<std::size_t>(c.disk)][static_cast<std::size_t>(c.pos)] = static_cast<int>(i);
  }
  // Count the remaining circles.
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(f.disk_count));
  for (int d = 0; d < f.disk_count; ++d)
    for (int p = 0; p < f.rotation_size(d); ++p)
      seen[static_cast<std::size_t>(d)].push_back(f.corner_index[static_cast<std::size_t>(d)][static_cast<std::size_t>(p)] >= 0);
  f.boundary_components = 1;
  for (int d = 0; d < f.disk_count; ++d)
    for (int p = 0; p < f.rotation_size(d); ++p) {
      if (seen[static_cast<std::size_t>(d)][static_cast<std::size_t>(p)]) continue;
      ++f.boundary_components;
      for (const Corner& c : detail::trace_boundary(f, Corner{d, p})) seen[static_cast<std::size_t>(c.disk)][static_cast<std::size_t>(c.pos)] = 1;
    }
  return f;
}

inline FiberSurface build_fiber_surface(const BraidWord& braid) {
  FiberSurface f = build_ribbon_surface(braid);
  if (f.boundary_components != 1)
    throw Error(ErrorKind::NotKnot, "closure has " + std::to_string(f.boundary_components) + " components");
  return f;
}

// ---------------------------------------------------------------------------
// Chords and product disks

struct Chord {
  int disk = 0;
  int first = 0;  ///< first cut-off rotation position
  int last = 0;   ///< last cut-off rotation position (inclusive)
  int size() const { return last - first + 1; }
  bool operator==(const Chord&) const = default;
};

/// Two chords of one disk cross iff their cut-off runs overlap without nesting.
inline bool chords_cross(const Chord& x, const Chord& y) {
  if (x.disk != y.disk) return false;
  bool overlap = x.first <= y.last && y.first <= x.last;
  bool nested = (x.first <= y.first && y.last <= x.last) || (y.first <= x.first && x.last <= y.last);
  return overlap && !nested;
}

struct ProductDiskArc {
  int letter = 0;  ///< j (0-based): the disk D_j
  int next = 0;    ///< k: the next band of the same type
  int type = 1;    ///< generator index of both bands
  Chord minus;     ///< alpha_j^-, in the lower disk S_i
  Chord plus;      ///< alpha_j^+, in the upper disk S_{i+1} once standardized
  bool standardized = false;  ///< before standardization alpha_j^+ also runs through b_k
};

/// One disk per band that has a later band of the same type.
inline std::vector<ProductDiskArc> product_disks(const FiberSurface& f) {
  std::vector<ProductDiskArc> out;
  const int n = f.band_count();
  for (int j = 0; j < n; ++j) {
    int k = j + 1;
    while (k < n && f.band_type[static_cast<std::size_t>(k)] != f.band_type[static_cast<std::size_t>(j)]) ++k;
    if (k >= n) continue;
    ProductDiskArc a;
    a.letter = j;
    a.next = k;
    a.type = f.band_type[static_cast<std::size_t>(j)];
    const int lo = f.lower_disk(j), hi = f.upper_disk(j);
    // alpha^- cuts off b_j and the bands met before b_k on S_i.
    a.minus = Chord{lo, f.pos_in(lo, j), f.pos_in(lo, k) - 1};
    // alpha^+ cuts off the bands met after b_j up to and including b_k on S_{i+1}.
    a.plus = Chord{hi, f.pos_in(hi, j) + 1, f.pos_in(hi, k)};
    out.push_back(a);
  }
  return out;
}

/// Disk list restricted to the given letters (order of `all` is kept).
inline std::vector<ProductDiskArc> select_disks(const std::vector<ProductDiskArc>& all, const std::vector<int>& letters) {
  std::vector<ProductDiskArc> out;
  for (const auto& a : all)
    if (std::find(letters.begin(), letters.end(), a.letter) != letters.end()) out.push_back(a);
  return out;
}

struct Standardization {
  std::vector<ProductDiskArc> disks;
  std::vector<int> isotopy_order;  ///< letters, in the order their alpha^+ are moved
};

/// Scan from the bottom of the surface upwards: the pre-standardized
/// alpha_j^+ reaches lowest at its second band b_k, so disks are moved in
/// decreasing order of k. Each move drops the passage through b_k.
inline Standardization standardize(const FiberSurface& /*surface*/, std::vector<ProductDiskArc> disks) {
  Standardization s;
  std::vector<std::size_t> idx(disks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return disks[x].next > disks[y].next; });
  for (std::size_t i : idx) {
    disks[i].standardized = true;
    s.isotopy_order.push_back(disks[i].letter);
  }
  s.disks = std::move(disks);
  return s;
}

// ---------------------------------------------------------------------------
// Intersection census

enum class Stage { Pre, Post };

struct IntersectionPoint {
  int plus_letter = 0;   ///< j of alpha_j^+
  int minus_letter = 0;  ///< l of alpha_l^-
  int type = 2;          ///< 1: l is the next band of the same type as j
  auto operator<=>(const IntersectionPoint&) const = default;
};

struct IntersectionCensus {
  int type1_count = 0;
  int type2_count = 0;
  std::vector<IntersectionPoint> points;  ///< sorted
  std::vector<std::pair<int, int>> type2_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : points)
      if (p.type == 2) out.emplace_back(p.plus_letter, p.minus_letter);
    return out;
  }
};

/// Crossings between alpha^+ and alpha^- arcs. Chords inside a disk cross by
/// the run-overlap rule; before standardization every alpha_j^+ in addition
/// crosses the co-core alpha_k^- of its second band when D_k is present.
inline IntersectionCensus intersection_census(const FiberSurface& /*surface*/, const std::vector<ProductDiskArc>& disks,
                                              Stage stage) {
  IntersectionCensus c;
  std::map<int, const ProductDiskArc*> by_letter;
  for (const auto& d : disks) by_letter[d.letter] = &d;
  for (const auto& p : disks) {
    for (const auto& m : disks) {
      if (p.letter == m.letter) continue;
      bool through_band = stage == Stage::Pre && !p.standardized && m.letter == p.next;
      if (through_band || chords_cross(p.plus, m.minus))
        c.points.push_back({p.letter, m.letter, m.letter == p.next ? 1 : 2});
    }
  }
  std::sort(c.points.begin(), c.points.end());
  for (const auto& p : c.points) (p.type == 1 ? c.type1_count : c.type2_count)++;
  return c;
}

// ---------------------------------------------------------------------------
// Stations: chord endpoints placed on the disk boundaries and on K

enum class StationKind { Attachment, Upper, Lower };

struct Station {
  StationKind kind = StationKind::Attachment;
  int ref = 0;     ///< letter for attachments, chord id otherwise
  int corner = -1; ///< rotation position of the corner holding an endpoint
};

/// Position of a point on K: boundary_order index of its corner, then order
/// within the corner in the direction of K.
struct KPosition {
  int corner = 0;
  int sub = 0;
  auto operator<=>(const KPosition&) const = default;
};

struct StationLayout {
  std::vector<std::vector<Station>> disk_stations;  ///< per disk, counter-clockwise from the top corner
  std::vector<int> upper_station;                   ///< per chord: index in its disk's list
  std::vector<int> lower_station;
  std::vector<KPosition> upper_k;
  std::vector<KPosition> lower_k;
  std::vector<std::vector<int>> attachment_station; ///< [disk][rotation position]
};

/// Within a corner, endpoints of chords ending just before it come first
/// (smaller runs nearer the attachment), then endpoints of chords starting
/// just after it (larger runs first). Nested and disjoint chords therefore
/// never meet; identical runs are drawn parallel.
inline StationLayout layout_stations(const FiberSurface& f, const std::vector<Chord>& chords) {
  StationLayout L;
  const std::size_t nc = chords.size();
  L.upper_station.assign(nc, -1);
  L.lower_station.assign(nc, -1);
  L.upper_k.assign(nc, {});
  L.lower_k.assign(nc, {});
  L.disk_stations.assign(static_cast<std::size_t>(f.disk_count), {});
  L.attachment_station.assign(static_cast<std::size_t>(f.disk_count), {});

  for (int d = 0; d < f.disk_count; ++d) {
    const int m = f.rotation_size(d);
    std::vector<std::vector<int>> lowers(static_cast<std::size_t>(m)), uppers(static_cast<std::size_t>(m));
    for (std::size_t c = 0; c < nc; ++c) {
      if (chords[c].disk != d) continue;
      lowers[static_cast<std::size_t>(chords[c].last)].push_back(static_cast<int>(c));
      uppers[static_cast<std::size_t>(chords[c].first)].push_back(static_cast<int>(c));
    }
    for (auto& v : lowers)
      std::sort(v.begin(), v.end(), [&](int x, int y) {
        return std::pair(chords[static_cast<std::size_t>(x)].size(), x) < std::pair(chords[static_cast<std::size_t>(y)].size(), y);
      });
    for (auto& v : uppers)
      std::sort(v.begin(), v.end(), [&](int x, int y) {
        return std::pair(chords[static_cast<std::size_t>(x)].size(), x) > std::pair(chords[static_cast<std::size_t>(y)].size(), y);
      });

    auto& S = L.disk_stations[static_cast<std::size_t>(d)];
    auto& A = L.attachment_station[static_cast<std::size_t>(d)];
    A.assign(static_cast<std::size_t>(m), -1);
    auto k_of = [&](int corner) { return f.corner_index[static_cast<std::size_t>(d)][static_cast<std::size_t>(corner)]; };
    // Sub-positions within corner p: lowers(p) in order, then uppers(p+1).
    auto emit_upper = [&](int c, int corner, int sub) {
      L.upper_station[static_cast<std::size_t>(c)] = static_cast<int>(S.size());
      L.upper_k[static_cast<std::size_t>(c)] = {k_of(corner), sub};
      S.push_back({StationKind::Upper, c, corner});
    };
    auto emit_lower = [&](int c, int corner, int sub) {
      L.lower_station[static_cast<std::size_t>(c)] = static_cast<int>(S.size());
      L.lower_k[static_cast<std::size_t>(c)] = {k_of(corner), sub};
      S.push_back({StationKind::Lower, c, corner});
    };
    const int wrap_lowers = static_cast<int>(lowers[static_cast<std::size_t>(m - 1)].size());
    {
      int sub = wrap_lowers;
      for (int c : uppers[0]) emit_upper(c, m - 1, sub++);
    }
    for (int p = 0; p < m; ++p) {
      A[static_cast<std::size_t>(p)] = static_cast<int>(S.size());
      S.push_back({StationKind::Attachment, f.rotation[static_cast<std::size_t>(d)][static_cast<std::size_t>(p)], -1});
      int sub = 0;
      for (int c : lowers[static_cast<std::size_t>(p)]) emit_lower(c, p, sub++);
      if (p + 1 < m)
        for (int c : uppers[static_cast<std::size_t>(p + 1)]) emit_upper(c, p, sub++);
    }
  }
  return L;
}

/// Arc naming used in reports: alpha_j^- / alpha_j^+ with 1-based j.
inline std::string arc_name(int letter, bool plus) {
  return "alpha_" + std::to_string(letter + 1) + (plus ? "^+" : "^-");
}

}  // namespace tautbraid
