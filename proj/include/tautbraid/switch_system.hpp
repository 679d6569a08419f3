#pragma once

// Switch relations of the local branched-surface models and an exact test
// for a strictly positive solution.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tautbraid/normal_form.hpp"

namespace tautbraid {

/// sum(lhs) = sum(rhs), variables 1-based.
struct SwitchEquation {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

struct SwitchSystem {
  int variable_count = 0;
  std::vector<SwitchEquation> equations;
};

inline std::string to_string(const SwitchSystem& s) {
  std::string out;
  auto side = [](const std::vector<int>& v) {
    std::string t;
    for (std::size_t i = 0; i < v.size(); ++i) t += (i ? "+w" : "w") + std::to_string(v[i]);
    return t;
  };
  for (std::size_t i = 0; i < s.equations.size(); ++i)
    out += (i ? ", " : "") + side(s.equations[i].lhs) + "=" + side(s.equations[i].rhs);
  return "{" + out + "}";
}

enum class SwitchModel { TorusAnnulus, TypeA, OneBridge };

inline SwitchSystem local_switch_system(SwitchModel m) {
  SwitchSystem s;
  s.variable_count = 5;
  switch (m) {
    case SwitchModel::TorusAnnulus:
      s.equations = {{{1}, {2, 4}}, {{3}, {2, 4}}, {{1}, {5, 3}}};
      break;
    case SwitchModel::TypeA:
      s.equations = {{{1, 4}, {2}}, {{3, 4}, {2}}, {{1, 5}, {3}}};
      break;
    case SwitchModel::OneBridge:
      s.equations = {{{1}, {2, 4}}, {{3}, {1, 5}}, {{3}, {2, 4}}};
      break;
  }
  return s;
}

inline SwitchSystem local_switch_system(BraidClass c) {
  return local_switch_system(c == BraidClass::TypeA ? SwitchModel::TypeA : SwitchModel::TorusAnnulus);
}

/// Decides whether A w = 0 has a solution with every w_i > 0. By scaling,
/// that is the same as w_i >= 1. Equalities are eliminated by Gaussian
/// elimination over the rationals; the remaining inequalities on the free
/// variables are decided by Fourier-Motzkin elimination.
inline bool positive_solution_exists(const SwitchSystem& sys) {
  using Q = boost::rational<long long>;
  const int n = sys.variable_count;
  std::vector<std::vector<Q>> A;
  for (const auto& e : sys.equations) {
    std::vector<Q> row(static_cast<std::size_t>(n), Q(0));
    for (int v : e.lhs) row[static_cast<std::size_t>(v - 1)] += 1;
    for (int v : e.rhs) row[static_cast<std::size_t>(v - 1)] -= 1;
    A.push_back(row);
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < n && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][static_cast<std::size_t>(c)] == Q(0)) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    Q inv = Q(1) / A[r][static_cast<std::size_t>(c)];
    for (auto& x : A[r]) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][static_cast<std::size_t>(c)] == Q(0)) continue;
      Q f = A[i][static_cast<std::size_t>(c)];
      for (int j = 0; j < n; ++j) A[i][static_cast<std::size_t>(j)] -= f * A[r][static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_cols.push_back(c);

  // Each variable as an affine form in the free variables; require form >= 1.
  // Inequality: coeffs . x >= rhs.
  struct Ineq {
    std::vector<Q> a;
    Q b;
  };
  const std::size_t m = free_cols.size();
  std::vector<Ineq> ineqs;
  for (std::size_t i = 0; i < m; ++i) {
    Ineq q{std::vector<Q>(m, Q(0)), Q(1)};
    q.a[i] = 1;
    ineqs.push_back(q);
  }
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    // w_pivot = - sum_j A[i][free_j] x_j
    Ineq q{std::vector<Q>(m, Q(0)), Q(1)};
    for (std::size_t j = 0; j < m; ++j) q.a[j] = -A[i][static_cast<std::size_t>(free_cols[j])];
    ineqs.push_back(q);
  }

  for (std::size_t v = m; v-- > 0;) {
    std::vector<Ineq> pos, neg, keep;
    for (auto& q : ineqs) {
      if (q.a[v] > Q(0)) pos.push_back(q);
      else if (q.a[v] < Q(0)) neg.push_back(q);
      else keep.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& ng : neg) {
        // p: a x >= b with a_v > 0; ng: c x >= d with c_v < 0.
        Q sp = Q(1) / p.a[v], sn = Q(-1) / ng.a[v];
        Ineq q{std::vector<Q>(m, Q(0)), p.b * sp + ng.b * sn};
        for (std::size_t j = 0; j < m; ++j) q.a[j] = p.a[j] * sp + ng.a[j] * sn;
        q.a[v] = 0;
        keep.push_back(q);
      }
    ineqs = std::move(keep);
  }
  for (const auto& q : ineqs)
    if (q.b > Q(0)) return false;  // 0 >= b must hold
  return true;
}

}  // namespace tautbraid
