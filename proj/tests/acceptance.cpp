// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tautbraid/tautbraid.hpp"

using namespace tautbraid;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::vector<Block>> block_sequences(int budget) {
  std::vector<std::vector<Block>> out;
  std::vector<Block> cur;
  std::function<void(int)> rec = [&](int used) {
    if (!cur.empty()) out.push_back(cur);
    for (int a = 2; used + a + 1 <= budget; ++a)
      for (int b = 1; used + a + b <= budget; ++b) {
        cur.push_back({a, b});
        rec(used + a + b);
        cur.pop_back();
      }
  };
  rec(0);
  return out;
}

std::vector<BraidWord> knotted_block_words(int budget) {
  std::vector<BraidWord> out;
  for (const auto& B : block_sequences(budget)) {
    BraidWord w = NormalizedThreeBraid::from_blocks(B).word();
    if (closure_is_knot(w)) out.push_back(w);
  }
  return out;
}

// Criterion 1: the worked example, end to end, within one second.
Outcome pretzel_example() {
  auto t0 = std::chrono::steady_clock::now();
  Analysis a = analyze_3braid(parse_braid("w=3: s1^7 s2^2 s1^2 s2"));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto& D = a.evaluation.sectors;
  bool ok = a.normal && a.normal->blocks == std::vector<Block>{{7, 2}, {2, 1}} && a.classification.cls == BraidClass::TypeC &&
            a.genus.genus == 5 && a.disks.size() == 10 && a.census_pre.type1_count == 8 && a.census_pre.type2_count == 1 &&
            a.census_post.type2_pairs() == std::vector<std::pair<int, int>>{{6, 8}} && D.count(SectorKind::Disk) == 3 &&
            D.count(SectorKind::Band) == 7 && D.count(SectorKind::Polygon) == 2 && D.count(SectorKind::ProductDisk) == 10 &&
            a.evaluation.sink.verdict && a.witnesses_complete() &&
            a.evaluation.linked == std::vector<std::pair<int, int>>{{7, 8}} && a.evaluation.k == 9 && !a.switch_positive &&
            ms < 1000.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "P(-2,3,7): k=%d, linked=%zu, %.1f ms (limit 1000 ms)", a.evaluation.k, a.evaluation.linked.size(), ms);
  return {ok, buf};
}

// Criterion 2: every block sequence with c1+c2 <= 12 passes with exactly one linked pair.
Outcome block_sweep() {
  int total = 0, good = 0;
  std::string first_bad;
  for (const auto& w : knotted_block_words(12)) {
    ++total;
    Analysis a = analyze_3braid(w);
    if (a.passed() && a.evaluation.linked.size() == 1 && a.evaluation.k == a.genus.two_g_minus_one) ++good;
    else if (first_bad.empty()) first_bad = to_string(w);
  }
  return {total > 0 && good == total,
          std::to_string(good) + "/" + std::to_string(total) + " block sequences with c1+c2<=12" +
              (first_bad.empty() ? "" : ", first failure " + first_bad)};
}

// Criterion 3: 1-bridge braids, 4 <= w <= 9, 1 <= t <= 4.
Outcome onebridge_sweep() {
  int total = 0, good = 0, links = 0;
  for (int w = 4; w <= 9; ++w)
    for (int b = 1; b <= w - 2; ++b)
      for (int t = 1; t <= 4; ++t) {
        OneBridgeBraid p{w, b, t};
        if (!closure_is_knot(braid_of_1bridge(p))) {
          ++links;
          continue;
        }
        ++total;
        Analysis a = analyze_1bridge(p);
        bool no_polygons = a.evaluation.sectors.count(SectorKind::Polygon) == 0;
        if (a.passed() && a.evaluation.linked.empty() && no_polygons && a.cusping.cusped_count() == a.gamma &&
            a.gamma >= a.genus.genus)
          ++good;
      }
  return {total > 0 && good == total,
          std::to_string(good) + "/" + std::to_string(total) + " knots (" + std::to_string(links) + " parameter sets close to links, skipped)"};
}

// Criterion 4: the local switch systems admit no positive solution.
Outcome switch_systems() {
  bool ok = true;
  std::string d;
  for (SwitchModel m : {SwitchModel::TorusAnnulus, SwitchModel::TypeA, SwitchModel::OneBridge}) {
    bool pos = positive_solution_exists(local_switch_system(m));
    ok = ok && !pos;
    d += to_string(local_switch_system(m)) + (pos ? " feasible; " : " infeasible; ");
  }
  bool control = positive_solution_exists({2, {{{1}, {2}}}});
  ok = ok && control;
  d += "control {w1=w2} " + std::string(control ? "feasible" : "infeasible");
  return {ok, d};
}

// Criterion 5: exhaustive search, census oracle and MIS oracle.
Outcome oracles() {
  int searched = 0, optimal = 0, beaten = 0, census_ok = 0, census_total = 0;
  for (const auto& w : knotted_block_words(8)) {
    ++searched;
    SearchOptions o;
    o.max_witnesses = 0;
    SearchReport r = exhaustive_cusp_search(w, o);
    if (schema_among_best(r) && r.best_k == r.bound) ++optimal;
    beaten += static_cast<int>(r.beats_bound.size());
  }
  for (const auto& w : knotted_block_words(12)) {
    ++census_total;
    FiberSurface f = build_fiber_surface(w);
    if (check_census_against_oracle(f, standardize(f, product_disks(f)).disks).equal) ++census_ok;
  }
  std::mt19937 rng(20261014);
  int mis_total = 400, mis_ok = 0;
  for (int i = 0; i < mis_total; ++i) {
    int n = 1 + static_cast<int>(rng() % 20);
    std::bernoulli_distribution e(0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0);
    std::vector<std::pair<int, int>> E;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (e(rng)) E.emplace_back(a, b);
    if (max_independent_set(n, E) == brute_force_mis(n, E)) ++mis_ok;
  }
  bool ok = searched > 0 && optimal == searched && beaten == 0 && census_ok == census_total && mis_ok == mis_total;
  return {ok, "search " + std::to_string(optimal) + "/" + std::to_string(searched) + " optimal at 2g-1 (c1+c2<=8), " +
                  std::to_string(beaten) + " beat the bound; census " + std::to_string(census_ok) + "/" +
                  std::to_string(census_total) + "; MIS " + std::to_string(mis_ok) + "/" + std::to_string(mis_total)};
}

// Criterion 6: independent rewriting agrees with normalization.
Outcome rewriting() {
  RewriteReport r = rewrite_bfs(parse_braid("w=3: (s1 s2)^4"), 8);
  bool twist = r.found && r.strand_count == 3 && r.letters == std::vector<int>{1, 1, 1, 2, 1, 1, 1, 2} && r.violations.empty();
  int total = 0, agree = 0;
  for (int len = 1; len <= 10; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      BraidWord b{3, {}};
      for (int i = 0; i < len; ++i) b.letters.push_back(((mask >> i) & 1) + 1);
      if (!closure_is_knot(b)) continue;
      ++total;
      RewriteReport o = rewrite_bfs(b, 10);
      NormalizedThreeBraid n = normalize_search(b).normal;
      bool same = o.found && o.violations.empty();
      if (n.kind == NormalizedThreeBraid::Kind::Unknot) same = same && o.strand_count == 1;
      else same = same && o.strand_count == n.word().strand_count && o.letters.size() == n.word().size();
      agree += same ? 1 : 0;
    }
  return {twist && agree == total, std::string("(s1 s2)^4 -> ") + (twist ? "s1^3 s2 s1^3 s2" : "mismatch") + ", " +
                                       std::to_string(agree) + "/" + std::to_string(total) + " words of length <= 10 agree"};
}

// Criterion 7: pretzel family P(-2,3,q), odd q, k = q+2.
Outcome pretzel_family() {
  int total = 0, good = 0;
  for (int q = 1; q <= 15; q += 2) {
    ++total;
    BraidWord w = parse_braid("w=3: s1^" + std::to_string(q) + " s2^2 s1^2 s2");
    if (q == 1) w = parse_braid("w=3: s1 s2^2 s1^2 s2");
    Analysis a = analyze_3braid(w);
    if (a.passed() && a.evaluation.k == q + 2) ++good;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " odd q in 1..15 with k = q+2"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"worked example", pretzel_example}, {"block sweep", block_sweep}, {"1-bridge sweep", onebridge_sweep},
      {"switch systems", switch_systems},  {"oracles", oracles},         {"rewriting", rewriting},
      {"pretzel family", pretzel_family}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %zu (%s): %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), ms);
  }
  return failures;
}
