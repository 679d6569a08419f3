#pragma once

// Cusp assignments, the cusping schemas for 3-braids and 1-bridge braids,
// the sector decomposition of the branched surface, and the sink disk check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautbraid/arrangement.hpp"
#include "tautbraid/braid.hpp"
#include "tautbraid/normal_form.hpp"
#include "tautbraid/surface.hpp"

namespace tautbraid {

enum class Cusp { Uncusped, Left, Right };

struct CuspAssignment {
  std::vector<Cusp> letters;

  int cusped_count() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](Cusp c) { return c != Cusp::Uncusped; }));
  }
  std::vector<int> cusped_letters() const {
    std::vector<int> out;
    for (std::size_t j = 0; j < letters.size(); ++j)
      if (letters[j] != Cusp::Uncusped) out.push_back(static_cast<int>(j));
    return out;
  }
  bool operator==(const CuspAssignment&) const = default;
};

/// Arrow notation, one parenthesized entry per letter: (←), (→) or ( ).
inline std::string to_string(const CuspAssignment& a) {
  std::string out;
  for (Cusp c : a.letters) out += c == Cusp::Left ? "(←)" : c == Cusp::Right ? "(→)" : "( )";
  return out;
}

/// Compact code: L, R, and U (or '.') per letter.
inline std::string to_code(const CuspAssignment& a) {
  std::string out;
  for (Cusp c : a.letters) out += c == Cusp::Left ? 'L' : c == Cusp::Right ? 'R' : 'U';
  return out;
}

inline CuspAssignment cusping_from_code(std::string_view code) {
  CuspAssignment a;
  for (char ch : code) {
    if (ch == 'L') a.letters.push_back(Cusp::Left);
    else if (ch == 'R') a.letters.push_back(Cusp::Right);
    else if (ch == 'U' || ch == '.') a.letters.push_back(Cusp::Uncusped);
    else if (ch == ' ' || ch == '|') continue;
    else throw Error(ErrorKind::Parse, std::string("bad cusp code character '") + ch + "'");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Schemas

namespace detail {
inline void append(CuspAssignment& a, Cusp c, int count) {
  for (int i = 0; i < count; ++i) a.letters.push_back(c);
}
}  // namespace detail

/// Schema for a classified 3-braid. The assignment refers to the word of
/// `rotate_blocks(normal.blocks, cls.rotation)`; for ReducedTorus it refers
/// to s1^n on two strands.
inline CuspAssignment schema_cusping(const Classification& cls, const NormalizedThreeBraid& normal) {
  using detail::append;
  CuspAssignment a;
  const Cusp L = Cusp::Left, R = Cusp::Right, U = Cusp::Uncusped;
  switch (cls.cls) {
    case BraidClass::Unknot:
      throw Error(ErrorKind::Degenerate, "the unknot has no cusping schema");
    case BraidClass::ReducedTorus:
      append(a, R, normal.torus_n - 2);
      append(a, L, 1);
      append(a, U, 1);
      return a;
    case BraidClass::TypeA: {
      const Block& B = normal.blocks[0];
      append(a, R, B.a - 1);
      append(a, U, 1);
      append(a, R, B.b - 2);
      append(a, L, 1);
      append(a, U, 1);
      return a;
    }
    case BraidClass::TypeB: {
      const auto& B = normal.blocks;
      append(a, L, B[0].a);
      append(a, L, 1);
      append(a, R, B[1].a - 1);
      append(a, U, 2);
      return a;
    }
    case BraidClass::TypeC: {
      const auto B = rotate_blocks(normal.blocks, cls.rotation);
      const std::size_t k = B.size();
      append(a, L, B[0].a);
      append(a, R, 1);
      append(a, L, B[0].b - 1);
      for (std::size_t t = 1; t + 1 < k; ++t) {
        append(a, R, B[t].a);
        append(a, L, B[t].b);
      }
      append(a, R, B[k - 1].a - 1);
      append(a, U, 1);
      append(a, L, B[k - 1].b - 1);
      append(a, U, 1);
      return a;
    }
  }
  return a;
}

/// Odd generators outside the last full twist are cusped: the first
/// occurrence of each generator pointing left, later ones right.
inline CuspAssignment schema_cusping_1bridge(const OneBridgeBraid& p) {
  BraidWord w = braid_of_1bridge(p);
  CuspAssignment a;
  std::set<int> seen;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    int g = w.letters[j];
    if (g % 2 == 0 || slice_of_letter(p, static_cast<int>(j)) == p.t) {
      a.letters.push_back(Cusp::Uncusped);
      continue;
    }
    a.letters.push_back(seen.insert(g).second ? Cusp::Left : Cusp::Right);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Cusped arcs

struct CuspedArc {
  ProductDiskArc arc;
  Cusp cusp = Cusp::Left;
  int minus_direction = 1;  ///< pairing of the cusp co-orientation with alpha^-
  int plus_direction = -1;  ///< pairing with alpha^+

  int letter() const { return arc.letter; }
  /// Side of each chord that its cusp points into.
  bool minus_points_to_interval() const { return cusp == Cusp::Right; }
  bool plus_points_to_interval() const { return cusp == Cusp::Left; }
};

inline std::vector<CuspedArc> propagate_cusps(const CuspAssignment& assignment, const std::vector<ProductDiskArc>& disks) {
  std::map<int, const ProductDiskArc*> by_letter;
  for (const auto& d : disks) by_letter[d.letter] = &d;
  std::vector<CuspedArc> out;
  for (std::size_t j = 0; j < assignment.letters.size(); ++j) {
    Cusp c = assignment.letters[j];
    if (c == Cusp::Uncusped) continue;
    auto it = by_letter.find(static_cast<int>(j));
    if (it == by_letter.end())
      throw Error(ErrorKind::Range, "letter " + std::to_string(j + 1) + " is cusped but has no product disk");
    CuspedArc a;
    a.arc = *it->second;
    a.cusp = c;
    a.minus_direction = c == Cusp::Left ? 1 : -1;
    a.plus_direction = -a.minus_direction;
    out.push_back(a);
  }
  return out;
}

/// Chord list with chord 2i = alpha^- and 2i+1 = alpha^+ of arc i.
inline std::vector<Chord> arc_chords(const std::vector<CuspedArc>& arcs) {
  std::vector<Chord> out;
  for (const auto& a : arcs) {
    out.push_back(a.arc.minus);
    out.push_back(a.arc.plus);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sectors

enum class SectorKind { Disk, Band, Polygon, ProductDisk };
enum class PolygonPosition { None, Single, Upper, Lower };

inline const char* to_string(SectorKind k) {
  switch (k) {
    case SectorKind::Disk: return "disk";
    case SectorKind::Band: return "band";
    case SectorKind::Polygon: return "polygon";
    case SectorKind::ProductDisk: return "product_disk";
  }
  return "?";
}

inline const char* to_string(PolygonPosition p) {
  switch (p) {
    case PolygonPosition::None: return "none";
    case PolygonPosition::Single: return "single";
    case PolygonPosition::Upper: return "upper";
    case PolygonPosition::Lower: return "lower";
  }
  return "?";
}

struct SectorIncidence {
  int arc = 0;  ///< index into the cusped arc list
  bool plus = false;
  bool interval_side = false;
  bool inward = false;
  auto operator<=>(const SectorIncidence&) const = default;
};

struct BranchSector {
  SectorKind kind = SectorKind::Band;
  std::vector<int> disks;  ///< Seifert disks (0-based) whose center lies in the sector
  std::vector<int> bands;  ///< letters whose band lies in the sector
  PolygonPosition position = PolygonPosition::None;
  int home_disk = -1;      ///< polygons: the disk containing it
  int crossing = -1;       ///< polygons: index into SectorDecomposition::crossings
  int product_disk = -1;   ///< product disk sectors: letter
  std::vector<SectorIncidence> incidences;
  bool meets_boundary = false;
  int euler_characteristic = 1;
};

struct CrossingRecord {
  int disk = 0;
  int arc_a = 0, arc_b = 0;
  bool plus_a = false, plus_b = false;
};

struct SectorDecomposition {
  std::vector<BranchSector> sectors;
  std::vector<CrossingRecord> crossings;
  int face_count = 0;  ///< bounded faces of the arrangement over all disks

  int count(SectorKind k) const {
    return static_cast<int>(std::count_if(sectors.begin(), sectors.end(), [k](const BranchSector& s) { return s.kind == k; }));
  }
};

namespace detail {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};
}  // namespace detail

/// Faces of the arc arrangement in every Seifert disk, glued across bands.
/// A sector holding the center of a disk is a disk sector; otherwise it is a
/// band sector if it contains a band, and a polygon sector if it contains
/// neither. Each cusped product disk adds its own sector.
inline SectorDecomposition sector_decomposition(const FiberSurface& f, const std::vector<CuspedArc>& arcs) {
  SectorDecomposition D;
  const std::vector<Chord> chords = arc_chords(arcs);
  const StationLayout L = layout_stations(f, chords);

  struct FaceInfo {
    int disk;
    ArrangementFace face;
    bool center;
    std::vector<int> attachments;  // letters
    int min_station;
  };
  std::vector<FaceInfo> faces;
  std::vector<std::vector<int>> face_at_attachment(static_cast<std::size_t>(f.disk_count));
  std::vector<int> crossing_offset(static_cast<std::size_t>(f.disk_count), 0);

  for (int d = 0; d < f.disk_count; ++d) {
    const auto& S = L.disk_stations[static_cast<std::size_t>(d)];
    std::vector<int> local;  // local chord -> global chord
    std::vector<std::pair<int, int>> ends;
    for (std::size_t c = 0; c < chords.size(); ++c)
      if (chords[c].disk == d) {
        local.push_back(static_cast<int>(c));
        ends.emplace_back(L.upper_station[c], L.lower_station[c]);
      }
    Arrangement A = build_arrangement(static_cast<int>(S.size()), ends);
    crossing_offset[static_cast<std::size_t>(d)] = static_cast<int>(D.crossings.size());
    for (const auto& X : A.crossings) {
      int ga = local[static_cast<std::size_t>(X.chord_a)], gb = local[static_cast<std::size_t>(X.chord_b)];
      D.crossings.push_back({d, ga / 2, gb / 2, ga % 2 == 1, gb % 2 == 1});
    }
    const int base = static_cast<int>(faces.size());
    for (auto& F : A.faces) {
      FaceInfo info{d, F, false, {}, 1 << 30};
      for (auto& cs : info.face.chord_sides) cs.chord = local[static_cast<std::size_t>(cs.chord)];
      for (auto& x : info.face.crossings) x += crossing_offset[static_cast<std::size_t>(d)];
      if (!F.circle_edges.empty()) {
        int s = F.circle_edges.front();
        info.min_station = s;
        info.center = std::none_of(ends.begin(), ends.end(), [s](auto e) { return e.first <= s && s < e.second; });
      }
      for (int s : F.circle_edges)
        if (S[static_cast<std::size_t>(s)].kind == StationKind::Attachment) info.attachments.push_back(S[static_cast<std::size_t>(s)].ref);
      faces.push_back(std::move(info));
    }
    auto& fa = face_at_attachment[static_cast<std::size_t>(d)];
    fa.assign(static_cast<std::size_t>(f.rotation_size(d)), -1);
    for (int p = 0; p < f.rotation_size(d); ++p)
      fa[static_cast<std::size_t>(p)] = base + A.face_of_circle_edge[static_cast<std::size_t>(L.attachment_station[static_cast<std::size_t>(d)][static_cast<std::size_t>(p)])];
  }
  D.face_count = static_cast<int>(faces.size());

  detail::UnionFind uf(static_cast<int>(faces.size()));
  for (int e = 0; e < f.band_count(); ++e) {
    int lo = f.lower_disk(e), hi = f.upper_disk(e);
    uf.unite(face_at_attachment[static_cast<std::size_t>(lo)][static_cast<std::size_t>(f.pos_in(lo, e))],
             face_at_attachment[static_cast<std::size_t>(hi)][static_cast<std::size_t>(f.pos_in(hi, e))]);
  }

  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) classes[uf.find(i)].push_back(i);

  // Order sectors by their first face, which follows disk and station order.
  std::vector<std::vector<int>> groups;
  for (auto& [root, members] : classes) groups.push_back(members);
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

  auto cusp_interval = [&](int chord) {
    const CuspedArc& a = arcs[static_cast<std::size_t>(chord / 2)];
    return chord % 2 == 1 ? a.plus_points_to_interval() : a.minus_points_to_interval();
  };

  std::vector<int> sector_of_face(faces.size(), -1);
  for (const auto& g : groups) {
    BranchSector s;
    std::set<int> disks, bands;
    std::set<SectorIncidence> inc;
    for (int fi : g) {
      const FaceInfo& F = faces[static_cast<std::size_t>(fi)];
      if (F.center) disks.insert(F.disk);
      for (int e : F.attachments) bands.insert(e);
      if (!F.face.circle_edges.empty()) s.meets_boundary = true;
      for (const auto& cs : F.face.chord_sides)
        inc.insert({cs.chord / 2, cs.chord % 2 == 1, cs.interval_side, cs.interval_side == cusp_interval(cs.chord)});
      sector_of_face[static_cast<std::size_t>(fi)] = static_cast<int>(D.sectors.size());
    }
    s.disks.assign(disks.begin(), disks.end());
    s.bands.assign(bands.begin(), bands.end());
    s.incidences.assign(inc.begin(), inc.end());
    s.euler_characteristic = static_cast<int>(g.size()) - static_cast<int>(bands.size());
    if (!disks.empty()) s.kind = SectorKind::Disk;
    else if (!bands.empty()) s.kind = SectorKind::Band;
    else {
      s.kind = SectorKind::Polygon;
      s.home_disk = faces[static_cast<std::size_t>(g.front())].disk;
      s.position = PolygonPosition::Single;
    }
    D.sectors.push_back(std::move(s));
  }

  // Polygons around a crossing: the one nearer the top corner is the upper one.
  for (int x = 0; x < static_cast<int>(D.crossings.size()); ++x) {
    std::vector<std::pair<int, int>> around;  // (min station, sector)
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      const auto& cr = faces[fi].face.crossings;
      int sid = sector_of_face[fi];
      if (D.sectors[static_cast<std::size_t>(sid)].kind != SectorKind::Polygon) continue;
      if (std::find(cr.begin(), cr.end(), x) == cr.end()) continue;
      if (D.sectors[static_cast<std::size_t>(sid)].crossing >= 0) continue;
      around.emplace_back(faces[fi].min_station, sid);
    }
    std::sort(around.begin(), around.end());
    for (std::size_t i = 0; i < around.size(); ++i) {
      auto& s = D.sectors[static_cast<std::size_t>(around[i].second)];
      s.crossing = x;
      s.position = i == 0 ? PolygonPosition::Upper : PolygonPosition::Lower;
    }
  }

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    BranchSector s;
    s.kind = SectorKind::ProductDisk;
    s.product_disk = arcs[i].letter();
    s.meets_boundary = true;
    s.incidences.push_back({static_cast<int>(i), false, false, arcs[i].minus_direction < 0});
    s.incidences.push_back({static_cast<int>(i), true, false, arcs[i].plus_direction < 0});
    D.sectors.push_back(std::move(s));
  }
  return D;
}

// ---------------------------------------------------------------------------
// Sink disks

struct SinkViolation {
  int sector = 0;
  std::string reason;
  bool sector_is_disk = false;  ///< Euler characteristic 1
};

struct SinkReport {
  std::vector<SinkViolation> violations;
  std::vector<std::string> witnesses;  ///< per sector: an arc whose cusp points out, empty if none
  bool verdict = true;
};

inline std::string incidence_name(const std::vector<CuspedArc>& arcs, const SectorIncidence& inc) {
  return arc_name(arcs[static_cast<std::size_t>(inc.arc)].letter(), inc.plus);
}

/// A sector is flagged when it meets at least one cusped arc and every such
/// cusp points into it. Diskness is not required for a flag; it is reported.
inline SinkReport sink_disk_check(const SectorDecomposition& D, const std::vector<CuspedArc>& arcs) {
  SinkReport r;
  for (std::size_t i = 0; i < D.sectors.size(); ++i) {
    const auto& s = D.sectors[i];
    std::string witness;
    for (const auto& inc : s.incidences)
      if (!inc.inward) {
        witness = incidence_name(arcs, inc);
        break;
      }
    r.witnesses.push_back(witness);
    if (s.kind == SectorKind::ProductDisk) continue;
    if (!s.incidences.empty() && witness.empty())
      r.violations.push_back({static_cast<int>(i), "every incident cusp points inward", s.euler_characteristic == 1});
  }
  r.verdict = r.violations.empty();
  return r;
}

}  // namespace tautbraid
