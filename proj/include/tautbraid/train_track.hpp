#pragma once

// Boundary train track: maximal endpoints, linking of arcs along K, the
// largest pairwise-unlinked family, and the carried slope interval.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tautbraid/branched.hpp"
#include "tautbraid/surface.hpp"

namespace tautbraid {

struct BoundarySector {
  int letter = 0;
  bool upper = true;       ///< which endpoint pair bounds the sector
  KPosition minus_end;     ///< endpoint of alpha^- on K
  KPosition plus_end;      ///< corresponding endpoint of alpha^+ on K
  bool maximal = true;
};

/// One maximal endpoint per cusped arc: the upper endpoint of alpha^- for a
/// left cusp, the lower endpoint for a right cusp, paired with the matching
/// endpoint of alpha^+.
inline std::vector<BoundarySector> maximal_endpoints(const FiberSurface& f, const std::vector<CuspedArc>& arcs) {
  const StationLayout L = layout_stations(f, arc_chords(arcs));
  std::vector<BoundarySector> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    BoundarySector s;
    s.letter = arcs[i].letter();
    s.upper = arcs[i].cusp == Cusp::Left;
    const std::size_t m = 2 * i, p = 2 * i + 1;
    s.minus_end = s.upper ? L.upper_k[m] : L.lower_k[m];
    s.plus_end = s.upper ? L.upper_k[p] : L.lower_k[p];
    out.push_back(s);
  }
  return out;
}

inline bool sectors_linked(const BoundarySector& x, const BoundarySector& y) {
  auto [a0, a1] = std::minmax(x.minus_end, x.plus_end);
  auto inside = [&](const KPosition& q) { return a0 < q && q < a1; };
  return inside(y.minus_end) != inside(y.plus_end);
}

/// Pairs of indices into `sectors` whose endpoint pairs interleave on K.
inline std::vector<std::pair<int, int>> linked_pairs(const std::vector<BoundarySector>& sectors) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < sectors.size(); ++i)
    for (std::size_t j = i + 1; j < sectors.size(); ++j)
      if (sectors[i].maximal && sectors[j].maximal && sectors_linked(sectors[i], sectors[j]))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int popcount(const Bits& b) {
  int n = 0;
  for (auto w : b) n += std::popcount(w);
  return n;
}

class MaxIndependentSet {
 public:
  MaxIndependentSet(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), adj_(static_cast<std::size_t>(n), Bits(words_, 0)) {
    for (auto [a, b] : edges) {
      set(adj_[static_cast<std::size_t>(a)], b);
      set(adj_[static_cast<std::size_t>(b)], a);
    }
  }

  int solve() {
    Bits all(words_, 0);
    for (int v = 0; v < n_; ++v) set(all, v);
    best_ = 0;
    search(all, 0);
    return best_;
  }

 private:
  static void set(Bits& b, int v) { b[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
  static void clear(Bits& b, int v) { b[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  static bool test(const Bits& b, int v) { return (b[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U; }

  void search(Bits cand, int size) {
    // A vertex of degree <= 1 belongs to some maximum independent set, so
    // take it without branching; otherwise branch on the highest degree.
    int pick = -1, deg = -1;
    for (bool reduced = true; reduced;) {
      reduced = false;
      pick = -1, deg = -1;
      for (int v = 0; v < n_; ++v) {
        if (!test(cand, v)) continue;
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(cand[w] & adj_[static_cast<std::size_t>(v)][w]);
        if (d <= 1) {
          clear(cand, v);
          for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~adj_[static_cast<std::size_t>(v)][w];
          ++size;
          reduced = true;
          break;
        }
        if (d > deg) pick = v, deg = d;
      }
    }
    if (size + popcount(cand) <= best_) return;
    if (pick < 0) {
      best_ = std::max(best_, size);
      return;
    }
    Bits with = cand;
    clear(with, pick);
    for (std::size_t w = 0; w < words_; ++w) with[w] &= ~adj_[static_cast<std::size_t>(pick)][w];
    search(std::move(with), size + 1);
    clear(cand, pick);
    search(std::move(cand), size);
  }

  int n_;
  std::size_t words_;
  std::vector<Bits> adj_;
  int best_ = 0;
};

}  // namespace detail

/// Exact maximum independent set of a graph on vertices 0..n-1.
inline int max_independent_set(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return 0;
  return detail::MaxIndependentSet(n, edges).solve();
}

/// Largest family of pairwise unlinked maximal arcs.
inline int max_unlinked(const std::vector<BoundarySector>& sectors) {
  return max_independent_set(static_cast<int>(sectors.size()), linked_pairs(sectors));
}

/// Carried slopes (-inf, k), open at k.
struct SlopeInterval {
  int upper_bound = 0;
  std::string to_string() const { return "(-inf, " + std::to_string(upper_bound) + ")"; }
};

inline SlopeInterval slope_interval(const std::vector<BoundarySector>& sectors, int k) {
  if (sectors.empty()) throw Error(ErrorKind::Degenerate, "no cusped arcs: the slope interval is undefined");
  if (k < 0 || k > static_cast<int>(sectors.size())) throw Error(ErrorKind::Range, "slope bound out of range");
  return SlopeInterval{k};
}

/// Number of product disks the 1-bridge schema uses, by parity of w and b.
inline int gamma_count(const OneBridgeBraid& p) {
  validate(p);
  const int w = p.w, b = p.b, t = p.t;
  if (w % 2 == 0) return b % 2 == 0 ? (w * t + b - w) / 2 : (w * t - w + b + 1) / 2;
  return b % 2 == 0 ? (w * t - w - t + b + 1) / 2 : (w * t - w - t + b + 2) / 2;
}

}  // namespace tautbraid
