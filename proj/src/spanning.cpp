// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "powergin/rng.hpp"

namespace powergin {

namespace {

// weak compositions of total into parts nonnegative slots, lexicographic
void enumerate_compositions(int total, int parts, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    enumerate_compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

// dense real solve with partial pivoting
std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                 std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-280)
      throw IllConditionedSolve("spanning_coefficients: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const double inv = 1.0 / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] * inv;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

std::complex<double> monomial_symmetric_evaluate(
    const std::vector<std::pair<int, int>>& target,
    const std::vector<std::complex<double>>& points) {
  const std::size_t n = target.size();
  if (points.size() != n)
    throw std::invalid_argument("monomial_symmetric_evaluate: size mismatch");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // multiplicity of each distinct pair, to reduce the permutation sum to
  // the sum over distinct assignments
  std::map<std::pair<int, int>, long> mult;
  for (const auto& e : target) ++mult[e];
  double repeat = 1.0;
  for (const auto& [e, m] : mult)
    for (long i = 2; i <= m; ++i) repeat *= static_cast<double>(i);

  std::complex<double> sum(0.0, 0.0);
  do {
    std::complex<double> prod(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = target[i];
      const std::complex<double> z = points[perm[i]];
      const std::complex<double> zb = std::conj(z);
      for (int q = 0; q < a; ++q) prod *= z;
      for (int q = 0; q < b; ++q) prod *= zb;
    }
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / repeat;
}

SpanningResult spanning_coefficients(const std::vector<std::pair<int, int>>& target,
                                     int N, double tol, std::size_t max_system) {
  if (static_cast<int>(target.size()) != N)
    throw std::invalid_argument("spanning_coefficients: target must list N pairs");
  if (N < 1) throw std::invalid_argument("spanning_coefficients: N must be >= 1");

  // distinct pairs (sorted) and the target multiplicity vector alpha*
  std::vector<std::pair<int, int>> pairs = target;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  const int k = static_cast<int>(pairs.size());
  std::vector<int> alpha_star(k, 0);
  for (const auto& e : target) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), e);
    ++alpha_star[it - pairs.begin()];
  }

  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  enumerate_compositions(N, k, cur, comps);
  const std::size_t P = comps.size();
  if (P > max_system)
    throw std::invalid_argument("spanning_coefficients: system of size " +
                                std::to_string(P) + " exceeds the guard");

  // Node for composition beta: x_j = beta_j / N on the simplex lattice.
  // The homogeneous-degree-N monomials restricted to the simplex are
  // unisolvent there, so the system below is square and invertible.
  auto node_coeff = [&](const std::vector<int>& beta, int j) {
    return static_cast<double>(beta[j]) / N;
  };
  // G[alpha][beta] = prod_j x_j(beta)^alpha_j ; solve G w = e_{alpha*}
  std::vector<std::vector<double>> g(P, std::vector<double>(P));
  std::size_t star = P;
  for (std::size_t ai = 0; ai < P; ++ai) {
    if (comps[ai] == alpha_star) star = ai;
    for (std::size_t bi = 0; bi < P; ++bi) {
      double v = 1.0;
      for (int j = 0; j < k; ++j) {
        const int e = comps[ai][j];
        const double x = node_coeff(comps[bi], j);
        for (int q = 0; q < e; ++q) v *= x;
      }
      g[ai][bi] = v;
    }
  }
  std::vector<double> rhs(P, 0.0);
  rhs[star] = 1.0;
  const std::vector<double> w = solve_linear(std::move(g), std::move(rhs));

  SpanningResult out;
  out.terms.reserve(P);
  for (std::size_t bi = 0; bi < P; ++bi) {
    if (w[bi] == 0.0) continue;
    MixedPolynomial q;
    for (int j = 0; j < k; ++j) {
      const double x = node_coeff(comps[bi], j);
      if (x != 0.0) q.add_term(pairs[j].first, pairs[j].second, x);
    }
    if (q.empty()) {
      // all-zero node: the product statistic is identically zero unless N=0
      continue;
    }
    out.terms.push_back({w[bi], std::move(q)});
  }

  // verify by evaluation at 20 random configurations
  RngStream rng(0xC0FFEEu);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::complex<double>> pts(N);
    for (auto& z : pts)
      z = std::polar(rng.uniform(0.4, 1.1), rng.uniform(0.0, 6.283185307179586));
    const std::complex<double> want = monomial_symmetric_evaluate(target, pts);
    std::complex<double> got(0.0, 0.0);
    for (const auto& term : out.terms) {
      std::complex<double> prod(1.0, 0.0);
      for (const auto& z : pts) prod *= term.factor.evaluate(z);
      got += term.weight * prod;
    }
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  out.verification_residual = worst;
  if (worst > tol)
    throw IllConditionedSolve("spanning_coefficients: verification residual " +
                              std::to_string(worst) + " exceeds tolerance");
  return out;
}

}  // namespace powergin
