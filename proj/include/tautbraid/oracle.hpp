#pragma once

// Brute-force cross-checks, written independently of the main pipeline:
// a plain rewrite search for normal forms, exhaustive enumeration of cusp
// assignments, a naive chord crossing scan, and subset-enumeration MIS.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tautbraid/pipeline.hpp"

namespace tautbraid {

// ---------------------------------------------------------------------------
// Rewrite search

struct RewriteStep {
  std::string move;  ///< "rotate", "relation@i", "destabilize"
  int strand_count = 0;
  std::vector<int> letters;
};

struct RewriteReport {
  bool found = false;
  int strand_count = 0;
  std::vector<int> letters;            ///< final word
  std::vector<RewriteStep> steps;      ///< excluding the start
  std::vector<std::string> violations; ///< invariant failures observed while replaying
};

namespace detail {

/// Normal form test done directly on the letters: s1^a1 s2^b1 ... with every
/// a_i >= 2, b_i >= 1, at least two s1-runs or a single run with b >= 2; or
/// s1^n (n odd >= 3) on two strands; or the empty word on one strand.
inline bool oracle_terminal(int strands, const std::vector<int>& w) {
  if (strands == 1) return w.empty();
  if (strands == 2) return w.size() >= 3 && w.size() % 2 == 1;
  if (strands != 3 || w.empty() || w.front() != 1 || w.back() != 2) return false;
  int runs = 0, last_b = 0;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == 1) ++j;
    if (j - i < 2) return false;
    std::size_t k = j;
    while (k < w.size() && w[k] == 2) ++k;
    if (k == j) return false;
    last_b = static_cast<int>(k - j);
    ++runs;
    i = k;
  }
  return runs >= 2 || last_b >= 2;
}

/// Run lengths of a terminal word, read as (s1-run, s2-run) pairs.
inline std::vector<std::pair<int, int>> oracle_runs(const std::vector<int>& w) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == 1) ++j;
    std::size_t k = j;
    while (k < w.size() && w[k] == 2) ++k;
    out.emplace_back(static_cast<int>(j - i), static_cast<int>(k - j));
    i = k;
  }
  return out;
}

/// Among terminal words at the same depth: three strands before two before
/// one, then the larger run sequence, then the smaller word.
inline bool oracle_prefer(const std::pair<int, std::vector<int>>& x, const std::pair<int, std::vector<int>>& y) {
  if (x.first != y.first) return x.first > y.first;
  auto rx = oracle_runs(x.second), ry = oracle_runs(y.second);
  if (rx != ry) return rx > ry;
  return x.second < y.second;
}

inline int oracle_exponent_sum(const std::vector<int>& w) { return static_cast<int>(w.size()); }

}  // namespace detail

/// Breadth-first search with moves {rotate by one letter, braid relation at
/// i, destabilize an outer generator occurring once}, stopping at the first
/// depth holding a normal form (ties broken by `oracle_prefer`). Every step is replayed and checked: rotations and relations
/// keep the letter count, exponent sum, strand count and the cycle type of
/// the strand permutation; destabilization drops strands and letters by one
/// and keeps the closure a knot.
inline RewriteReport rewrite_bfs(const BraidWord& braid, int depth) {
  using State = std::pair<int, std::vector<int>>;
  RewriteReport rep;
  State start{braid.strand_count, braid.letters};
  std::map<State, std::pair<State, std::string>> parent;
  std::map<State, int> dist;
  std::queue<State> q;
  dist[start] = 0;
  q.push(start);
  // Conjugation is free: a state is final if some cyclic rotation of it is.
  std::optional<State> goal, goal_rotated;
  int goal_depth = -1, goal_shift = 0;
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    int d = dist[s];
    if (goal && d > goal_depth) break;
    bool final_state = false;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, s.second.size()); ++r) {
      State rot{s.first, s.second};
      std::rotate(rot.second.begin(), rot.second.begin() + static_cast<long>(r), rot.second.end());
      if (!detail::oracle_terminal(rot.first, rot.second)) continue;
      final_state = true;
      if (!goal_rotated || detail::oracle_prefer(rot, *goal_rotated)) {
        goal = s;
        goal_rotated = rot;
        goal_shift = static_cast<int>(r);
      }
    }
    if (final_state) {
      goal_depth = d;
      continue;
    }
    if (goal || d >= depth) continue;
    std::vector<std::pair<State, std::string>> nexts;
    const auto& w = s.second;
    if (w.size() >= 2) {
      std::vector<int> r(w.begin() + 1, w.end());
      r.push_back(w.front());
      nexts.push_back({{s.first, r}, "rotate"});
    }
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
      if (w[i] == w[i + 2] && (w[i + 1] == w[i] + 1 || w[i + 1] == w[i] - 1)) {
        std::vector<int> r = w;
        r[i] = w[i + 1];
        r[i + 1] = w[i];
        r[i + 2] = w[i + 1];
        nexts.push_back({{s.first, r}, "relation@" + std::to_string(i + 1)});
      }
    for (int g : {s.first - 1, 1}) {
      if (g < 1 || std::count(w.begin(), w.end(), g) != 1) continue;
      std::vector<int> r;
      for (int x : w)
        if (x != g) r.push_back(g == 1 ? x - 1 : x);
      nexts.push_back({{s.first - 1, r}, "destabilize"});
      break;
    }
    for (auto& [n, label] : nexts) {
      if (dist.count(n)) continue;
      dist[n] = d + 1;
      parent.emplace(n, std::make_pair(s, label));
      q.push(n);
    }
  }
  if (!goal) return rep;
  rep.found = true;
  rep.strand_count = goal_rotated->first;
  rep.letters = goal_rotated->second;
  for (State cur = *goal; cur != start;) {
    const auto& [prev, label] = parent.at(cur);
    rep.steps.push_back({label, cur.first, cur.second});
    cur = prev;
  }
  std::reverse(rep.steps.begin(), rep.steps.end());
  State tail = *goal;
  for (int r = 0; r < goal_shift; ++r) {
    std::rotate(tail.second.begin(), tail.second.begin() + 1, tail.second.end());
    rep.steps.push_back({"rotate", tail.first, tail.second});
  }

  // Replay with invariant checks.
  auto perm_type = [](int strands, const std::vector<int>& w) {
    std::vector<int> at(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) at[static_cast<std::size_t>(i)] = i;
    for (int g : w) std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
    std::vector<char> seen(at.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(at[j])) seen[j] = 1, ++len;
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  State cur = start;
  for (const auto& st : rep.steps) {
    const std::vector<int>& w0 = cur.second;
    const std::vector<int>& w1 = st.letters;
    if (st.move == "destabilize") {
      if (st.strand_count != cur.first - 1 || w1.size() + 1 != w0.size())
        rep.violations.push_back("destabilization must drop one strand and one letter");
      if (perm_type(cur.first, w0).size() != perm_type(st.strand_count, w1).size())
        rep.violations.push_back("destabilization changed the component count");
    } else {
      if (st.strand_count != cur.first || w1.size() != w0.size()) rep.violations.push_back(st.move + " changed the size");
      if (detail::oracle_exponent_sum(w0) != detail::oracle_exponent_sum(w1))
        rep.violations.push_back(st.move + " changed the exponent sum");
      if (perm_type(cur.first, w0) != perm_type(st.strand_count, w1))
        rep.violations.push_back(st.move + " changed the permutation class");
    }
    cur = {st.strand_count, st.letters};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Naive chord crossings

/// Chords given by the positions of their two endpoints on one circle. All
/// pairs whose endpoints alternate, by a quadratic scan.
inline std::vector<std::pair<int, int>> chord_crossing_oracle(const std::vector<std::pair<int, int>>& chords) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      int a = std::min(chords[i].first, chords[i].second), b = std::max(chords[i].first, chords[i].second);
      int inside = 0;
      for (int p : {chords[j].first, chords[j].second}) inside += (a < p && p < b) ? 1 : 0;
      if (inside == 1) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

struct CensusCheck {
  bool equal = true;
  std::set<std::pair<int, int>> census;  ///< (plus letter, minus letter)
  std::set<std::pair<int, int>> oracle;
  int same_kind_crossings = 0;
};

/// Compares the post-standardization census with crossings found by placing
/// every arc endpoint on its disk boundary and scanning for alternation.
inline CensusCheck check_census_against_oracle(const FiberSurface& f, const std::vector<ProductDiskArc>& standardized) {
  CensusCheck r;
  for (const auto& p : intersection_census(f, standardized, Stage::Post).points) r.census.insert({p.plus_letter, p.minus_letter});
  std::vector<Chord> chords;
  for (const auto& d : standardized) {
    chords.push_back(d.minus);
    chords.push_back(d.plus);
  }
  const StationLayout L = layout_stations(f, chords);
  for (int disk = 0; disk < f.disk_count; ++disk) {
    std::vector<int> ids;
    std::vector<std::pair<int, int>> ends;
    for (std::size_t c = 0; c < chords.size(); ++c)
      if (chords[c].disk == disk) {
        ids.push_back(static_cast<int>(c));
        ends.emplace_back(L.upper_station[c], L.lower_station[c]);
      }
    for (auto [i, j] : chord_crossing_oracle(ends)) {
      int ci = ids[static_cast<std::size_t>(i)], cj = ids[static_cast<std::size_t>(j)];
      bool pi = ci % 2 == 1, pj = cj % 2 == 1;
      if (pi == pj) {
        ++r.same_kind_crossings;
        continue;
      }
      int plus = pi ? ci : cj, minus = pi ? cj : ci;
      r.oracle.insert({standardized[static_cast<std::size_t>(plus / 2)].letter, standardized[static_cast<std::size_t>(minus / 2)].letter});
    }
  }
  r.equal = r.census == r.oracle && r.same_kind_crossings == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Brute-force MIS

inline int brute_force_mis(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n > 24) throw Error(ErrorKind::Budget, "brute-force MIS is limited to 24 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)] |= 1U << b;
    adj[static_cast<std::size_t>(b)] |= 1U << a;
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v) & 1U) ok = (adj[static_cast<std::size_t>(v)] & s) == 0;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive cusp search

struct SearchReport {
  std::string braid;
  std::string normal;
  std::string schema;           ///< schema code, empty if none
  long long examined = 0;
  long long expected_count = 0; ///< product of per-letter option counts
  long long sink_free = 0;
  int best_k = 0;
  long long best_count = 0;     ///< sink-free assignments reaching best_k
  std::vector<std::string> witnesses;  ///< first few best-k assignments, in enumeration order
  bool schema_sink_free = false;
  int schema_k = -1;
  std::vector<std::string> beats_bound;        ///< sink-free assignments with k > 2g-1
  long long nondisk_rejections = 0;            ///< flagged only by sectors that are not disks
  int bound = 0;                               ///< 2g-1
  int excluded_letters = 0;                    ///< letters without a product disk (Uncusped only)
};

struct SearchOptions {
  int budget = 12;           ///< maximum letter count
  std::size_t max_witnesses = 32;
  unsigned threads = 0;      ///< 0: hardware concurrency
};

/// Enumerates {Uncusped, Left, Right} on every letter owning a product disk,
/// in lexicographic order with U < L < R read from the first letter, and
/// evaluates each assignment on the standardized surface of the analyzed word.
inline SearchReport exhaustive_cusp_search(const BraidWord& braid, const SearchOptions& opt = {}) {
  Analysis a = analyze_3braid(braid);
  if (a.degenerate) throw Error(ErrorKind::Degenerate, "the unknot has no product disks to cusp");
  if (static_cast<int>(a.word.size()) > opt.budget)
    throw Error(ErrorKind::Budget, "word has " + std::to_string(a.word.size()) + " letters, budget is " + std::to_string(opt.budget));
  SearchReport rep;
  rep.braid = to_string(braid);
  rep.normal = to_string(*a.normal);
  rep.schema = to_code(a.cusping);
  rep.bound = a.genus.two_g_minus_one;

  const int n = a.surface.band_count();
  std::vector<int> free_letters;
  for (const auto& d : a.standardized.disks) free_letters.push_back(d.letter);
  std::sort(free_letters.begin(), free_letters.end());
  rep.excluded_letters = n - static_cast<int>(free_letters.size());
  const int m = static_cast<int>(free_letters.size());
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  rep.expected_count = total;

  struct Partial {
    long long examined = 0, sink_free = 0, best_count = 0, nondisk = 0;
    int best_k = -1;
    std::vector<std::pair<long long, std::string>> witnesses;
    std::vector<std::pair<long long, std::string>> beats;
  };
  unsigned T = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  T = static_cast<unsigned>(std::min<long long>(T, total));
  std::vector<Partial> parts(T);
  auto decode = [&](long long idx) {
    CuspAssignment c;
    c.letters.assign(static_cast<std::size_t>(n), Cusp::Uncusped);
    for (int i = m - 1; i >= 0; --i) {
      int digit = static_cast<int>(idx % 3);
      idx /= 3;
      c.letters[static_cast<std::size_t>(free_letters[static_cast<std::size_t>(i)])] =
          digit == 0 ? Cusp::Uncusped : digit == 1 ? Cusp::Left : Cusp::Right;
    }
    return c;
  };
  auto work = [&](unsigned t) {
    Partial& P = parts[t];
    for (long long idx = t; idx < total; idx += T) {
      CuspAssignment c = decode(idx);
      Evaluation e = evaluate_assignment(a.surface, a.standardized.disks, c);
      ++P.examined;
      if (!e.sink.verdict) {
        bool all_nondisk = std::none_of(e.sink.violations.begin(), e.sink.violations.end(),
                                        [](const SinkViolation& v) { return v.sector_is_disk; });
        if (all_nondisk) ++P.nondisk;
        continue;
      }
      ++P.sink_free;
      if (e.k > rep.bound) P.beats.emplace_back(idx, to_code(c));
      if (e.k > P.best_k) {
        P.best_k = e.k;
        P.best_count = 0;
        P.witnesses.clear();
      }
      if (e.k == P.best_k) {
        ++P.best_count;
        if (P.witnesses.size() < opt.max_witnesses) P.witnesses.emplace_back(idx, to_code(c));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();

  rep.best_k = -1;
  std::vector<std::pair<long long, std::string>> wit, beats;
  for (const auto& P : parts) {
    rep.examined += P.examined;
    rep.sink_free += P.sink_free;
    rep.nondisk_rejections += P.nondisk;
    beats.insert(beats.end(), P.beats.begin(), P.beats.end());
    if (P.best_k > rep.best_k) {
      rep.best_k = P.best_k;
      rep.best_count = 0;
      wit.clear();
    }
    if (P.best_k == rep.best_k) {
      rep.best_count += P.best_count;
      wit.insert(wit.end(), P.witnesses.begin(), P.witnesses.end());
    }
  }
  std::sort(wit.begin(), wit.end());
  std::sort(beats.begin(), beats.end());
  for (std::size_t i = 0; i < wit.size() && i < opt.max_witnesses; ++i) rep.witnesses.push_back(wit[i].second);
  for (auto& b : beats) rep.beats_bound.push_back(b.second);

  Evaluation schema_eval = evaluate_assignment(a.surface, a.standardized.disks, a.cusping);
  rep.schema_sink_free = schema_eval.sink.verdict;
  rep.schema_k = schema_eval.k;
  return rep;
}

/// True when the schema is one of the sink-free assignments reaching the
/// search optimum (membership is decided by re-evaluation, so it does not
/// depend on the witness cap).
inline bool schema_among_best(const SearchReport& r) { return r.schema_sink_free && r.schema_k == r.best_k; }

}  // namespace tautbraid
