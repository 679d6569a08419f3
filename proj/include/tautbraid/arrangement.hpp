#pragma once

// Faces of a chord arrangement inside one disk, traced from an exact planar
// rotation system. Stations are placed in convex position on the parabola
// y = x^2 (counter-clockwise in station order), chords are straight
// segments between them, and every crossing is a vertex of degree four.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace tautbraid {

struct ChordSide {
  int chord = 0;
  bool interval_side = false;  ///< true: the side containing the stations strictly between the endpoints
  auto operator<=>(const ChordSide&) const = default;
};

struct ArrangementFace {
  std::vector<int> circle_edges;     ///< stations s whose boundary edge s -> s+1 lies on this face
  std::vector<ChordSide> chord_sides;
  std::vector<int> crossings;        ///< crossing ids at corners of this face
};

struct ArrangementCrossing {
  int chord_a = 0;
  int chord_b = 0;
};

struct Arrangement {
  std::vector<ArrangementFace> faces;       ///< bounded faces only
  std::vector<int> face_of_circle_edge;     ///< per station s: face on the inner side of edge s -> s+1
  std::vector<ArrangementCrossing> crossings;
};

namespace detail {

struct Pt {
  std::int64_t x, y;
};

inline Pt station_point(std::int64_t x) { return {x, x * x}; }
inline Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline __int128 cross(Pt a, Pt b) { return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x; }

inline bool endpoints_alternate(std::pair<int, int> a, std::pair<int, int> b) {
  auto [a0, a1] = std::minmax(a.first, a.second);
  auto [b0, b1] = std::minmax(b.first, b.second);
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

}  // namespace detail

namespace detail {

/// Station s sits at x = xs[s] on the parabola. Returns nothing when three
/// chords meet in one point, so that the caller can move the stations.
inline std::optional<Arrangement> arrangement_at(const std::vector<std::int64_t>& xs,
                                                 const std::vector<std::pair<int, int>>& chords) {
  Arrangement A;
  const int N = static_cast<int>(xs.size());
  const std::size_t nc = chords.size();
  auto P = [&](std::size_t c) { return station_point(xs[static_cast<std::size_t>(chords[c].second)]); };  // lower end
  auto Q = [&](std::size_t c) { return station_point(xs[static_cast<std::size_t>(chords[c].first)]); };   // upper end

  // Crossings, and their order along each chord from lower to upper end.
  std::vector<std::vector<int>> on_chord(nc);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a + 1; b < nc; ++b)
      if (detail::endpoints_alternate(chords[a], chords[b])) {
        int id = static_cast<int>(A.crossings.size());
        A.crossings.push_back({static_cast<int>(a), static_cast<int>(b)});
        on_chord[a].push_back(id);
        on_chord[b].push_back(id);
      }
  for (std::size_t c = 0; c < nc; ++c) {
    // parameter t = num/den along P->Q where the other chord R->S meets it
    auto param = [&](int x) {
      std::size_t d = static_cast<std::size_t>(A.crossings[static_cast<std::size_t>(x)].chord_a) == c
                          ? static_cast<std::size_t>(A.crossings[static_cast<std::size_t>(x)].chord_b)
                          : static_cast<std::size_t>(A.crossings[static_cast<std::size_t>(x)].chord_a);
      Pt R = P(d), S = Q(d);
      __int128 num = detail::cross(detail::sub(R, P(c)), detail::sub(S, R));
      __int128 den = detail::cross(detail::sub(Q(c), P(c)), detail::sub(S, R));
      if (den < 0) num = -num, den = -den;
      return std::pair<__int128, __int128>(num, den);
    };
    std::sort(on_chord[c].begin(), on_chord[c].end(), [&](int x, int y) {
      auto [n1, d1] = param(x);
      auto [n2, d2] = param(y);
      return n1 * d2 < n2 * d1;
    });
    for (std::size_t i = 0; i + 1 < on_chord[c].size(); ++i) {
      auto [n1, d1] = param(on_chord[c][i]);
      auto [n2, d2] = param(on_chord[c][i + 1]);
      if (n1 * d2 == n2 * d1) return std::nullopt;
    }
  }

  // Half-edges.
  struct HalfEdge {
    int from, to;
    int chord;     // -1 for boundary edges
    bool forward;  // chord: towards the upper end; boundary: s -> s+1
    int twin;
  };
  std::vector<HalfEdge> he;
  auto add_pair = [&](int u, int v, int chord, bool fwd) {
    int i = static_cast<int>(he.size());
    he.push_back({u, v, chord, fwd, i + 1});
    he.push_back({v, u, chord, !fwd, i});
    return i;
  };
  const int V = N + static_cast<int>(A.crossings.size());
  std::vector<int> next_out(static_cast<std::size_t>(N), -1), prev_out(static_cast<std::size_t>(N), -1),
      chord_out(static_cast<std::size_t>(N), -1);
  for (int s = 0; s < N; ++s) {
    int i = add_pair(s, (s + 1) % N, -1, true);
    next_out[static_cast<std::size_t>(s)] = i;
    prev_out[static_cast<std::size_t>((s + 1) % N)] = i + 1;
  }
  // At a crossing: outgoing forward/backward half-edge per chord.
  std::vector<std::vector<int>> at_cross(A.crossings.size(), std::vector<int>(4, -1));  // a_fwd, a_back, b_fwd, b_back
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<int> path;
    path.push_back(chords[c].second);
    for (int x : on_chord[c]) path.push_back(N + x);
    path.push_back(chords[c].first);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      int e = add_pair(path[i], path[i + 1], static_cast<int>(c), true);
      auto slot = [&](int v, int h, bool fwd) {
        if (v < N) {
          chord_out[static_cast<std::size_t>(v)] = h;
          return;
        }
        const auto& X = A.crossings[static_cast<std::size_t>(v - N)];
        int base = X.chord_a == static_cast<int>(c) ? 0 : 2;
        at_cross[static_cast<std::size_t>(v - N)][static_cast<std::size_t>(base + (fwd ? 0 : 1))] = h;
      };
      slot(path[i], e, true);
      slot(path[i + 1], e + 1, false);
    }
  }
  // Counter-clockwise rotation of outgoing half-edges per vertex.
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(V));
  for (int s = 0; s < N; ++s) {
    auto& r = rot[static_cast<std::size_t>(s)];
    r.push_back(next_out[static_cast<std::size_t>(s)]);
    if (chord_out[static_cast<std::size_t>(s)] >= 0) r.push_back(chord_out[static_cast<std::size_t>(s)]);
    r.push_back(prev_out[static_cast<std::size_t>(s)]);
  }
  for (std::size_t x = 0; x < A.crossings.size(); ++x) {
    const auto& X = A.crossings[x];
    Pt da = detail::sub(Q(static_cast<std::size_t>(X.chord_a)), P(static_cast<std::size_t>(X.chord_a)));
    Pt db = detail::sub(Q(static_cast<std::size_t>(X.chord_b)), P(static_cast<std::size_t>(X.chord_b)));
    const auto& o = at_cross[x];
    bool b_fwd_first = detail::cross(da, db) > 0;
    rot[static_cast<std::size_t>(N) + x] = {o[0], b_fwd_first ? o[2] : o[3], o[1], b_fwd_first ? o[3] : o[2]};
  }
  std::vector<int> rot_index(he.size(), -1);
  for (const auto& r : rot)
    for (std::size_t i = 0; i < r.size(); ++i) rot_index[static_cast<std::size_t>(r[i])] = static_cast<int>(i);

  auto face_next = [&](int h) {
    int t = he[static_cast<std::size_t>(h)].twin;
    const auto& r = rot[static_cast<std::size_t>(he[static_cast<std::size_t>(t)].from)];
    int i = rot_index[static_cast<std::size_t>(t)];
    return r[static_cast<std::size_t>((i + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size()))];
  };

  std::vector<int> face_of(he.size(), -1);
  A.face_of_circle_edge.assign(static_cast<std::size_t>(N), -1);
  for (std::size_t h0 = 0; h0 < he.size(); ++h0) {
    if (face_of[h0] != -1) continue;
    // The outer face is the one running backwards along the boundary.
    std::vector<int> cycle;
    int h = static_cast<int>(h0);
    bool outer = false;
    do {
      cycle.push_back(h);
      const auto& e = he[static_cast<std::size_t>(h)];
      if (e.chord < 0 && !e.forward) outer = true;
      h = face_next(h);
    } while (h != static_cast<int>(h0));
    int id = outer ? -2 : static_cast<int>(A.faces.size());
    for (int x : cycle) face_of[static_cast<std::size_t>(x)] = id;
    if (outer) continue;
    ArrangementFace F;
    for (int x : cycle) {
      const auto& e = he[static_cast<std::size_t>(x)];
      if (e.chord < 0) {
        F.circle_edges.push_back(e.from);
        A.face_of_circle_edge[static_cast<std::size_t>(e.from)] = id;
      } else {
        F.chord_sides.push_back({e.chord, e.forward});
      }
      if (e.to >= N) F.crossings.push_back(e.to - N);
    }
    std::sort(F.circle_edges.begin(), F.circle_edges.end());
    std::sort(F.chord_sides.begin(), F.chord_sides.end());
    F.chord_sides.erase(std::unique(F.chord_sides.begin(), F.chord_sides.end()), F.chord_sides.end());
    std::sort(F.crossings.begin(), F.crossings.end());
    F.crossings.erase(std::unique(F.crossings.begin(), F.crossings.end()), F.crossings.end());
    A.faces.push_back(std::move(F));
  }
  return A;
}

}  // namespace detail

/// `chords[c]` = (upper station, lower station) with upper < lower. Chords
/// may not share stations. Stations start at x = s; if that puts three
/// chords through one point they are nudged along the parabola, which keeps
/// their cyclic order, until the chords are in general position.
inline Arrangement build_arrangement(int station_count, const std::vector<std::pair<int, int>>& chords) {
  std::vector<std::int64_t> xs(static_cast<std::size_t>(station_count));
  for (int s = 0; s < station_count; ++s) xs[static_cast<std::size_t>(s)] = s;
  if (auto A = detail::arrangement_at(xs, chords)) return *A;
  std::mt19937_64 rng(0x5eed);
  for (;;) {
    for (int s = 0; s < station_count; ++s)
      xs[static_cast<std::size_t>(s)] = 64 * static_cast<std::int64_t>(s) + static_cast<std::int64_t>(rng() % 64);
    if (auto A = detail::arrangement_at(xs, chords)) return *A;
  }
}

}  // namespace tautbraid
