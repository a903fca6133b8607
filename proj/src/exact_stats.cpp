// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/exact_stats.hpp"

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "powergin/cmatrix.hpp"
#include "powergin/determinant.hpp"
#include "powergin/progression.hpp"
#include "powergin/special.hpp"

namespace powergin {

LogComplex det_from_log_entries(
    std::size_t n, const std::function<LogComplex(std::size_t, std::size_t)>& entry) {
  if (n == 0) return LogComplex::one();
  CMatrix m(n, n);
  double total_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<LogComplex> row(n);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = entry(i, j);
      top = std::max(top, row[j].log_modulus);
    }
    if (std::isinf(top) && top < 0.0) return LogComplex::zero();
    total_scale += top;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j].is_zero()) continue;
      m(i, j) = std::polar(std::exp(row[j].log_modulus - top), row[j].phase);
    }
  }
  LogComplex d = log_det(m);
  d.log_modulus += total_scale;
  return d;
}

namespace {

// Andreief matrix entry over the rotation-invariant table mu:
//   (1/norm_j) sum over terms c * m(i-1+a, j-1+b)
// with 1-based row/column labels i and j and exponent multiplier M
// applied to the polynomial's exponents.
LogComplex andreief_entry(const MomentTable& mu, const MixedPolynomial& g, int i,
                          int j, int mult, double log_col_norm) {
  std::vector<LogComplex> terms;
  for (const auto& [e, c] : g.terms()) {
    const int a = i - 1 + mult * e.first;
    const int b = j - 1 + mult * e.second;
    if (a != b) continue;  // rotation-invariant tables are diagonal
    LogComplex t = mu.log_moment(a, b);
    if (t.is_zero()) continue;
    t *= LogComplex::from_complex(c);
    terms.push_back(t);
  }
  LogComplex s = log_sum(terms);
  s.log_modulus -= log_col_norm;
  return s;
}

}  // namespace

LogComplex ginibre_product_stat_log(int N, const MixedPolynomial& g) {
  if (N < 1) throw std::invalid_argument("ginibre_product_stat: N must be >= 1");
  const MomentTable mu = MomentTable::ginibre_unscaled();
  return det_from_log_entries(N, [&](std::size_t i, std::size_t j) {
    return andreief_entry(mu, g, static_cast<int>(i) + 1, static_cast<int>(j) + 1, 1,
                          log_factorial(static_cast<long>(j)));
  });
}

std::complex<double> ginibre_product_stat(int N, const MixedPolynomial& g) {
  return ginibre_product_stat_log(N, g).to_complex();
}

LogComplex power_ginibre_product_stat_log(int N, int M, int k,
                                          const MixedPolynomial& g) {
  if (N < 1) throw std::invalid_argument("power_ginibre_product_stat: N must be >= 1");
  const ProgressionIndex idx(N, M, k);  // validates 1 <= k <= M
  const MomentTable mu = MomentTable::ginibre_unscaled();
  const auto& ind = idx.indices;
  return det_from_log_entries(ind.size(), [&](std::size_t r, std::size_t c) {
    const int i = ind[r], j = ind[c];
    return andreief_entry(mu, g, i, j, M, log_factorial(j - 1));
  });
}

std::complex<double> power_ginibre_product_stat(int N, int M, int k,
                                                const MixedPolynomial& g) {
  return power_ginibre_product_stat_log(N, M, k, g).to_complex();
}

double decomposition_identity_residual(int N, int M, const MixedPolynomial& P) {
  const LogComplex lhs = ginibre_product_stat_log(N, P.compose_power(M));
  LogComplex rhs = LogComplex::one();
  for (int k = 1; k <= M; ++k) rhs *= power_ginibre_product_stat_log(N, M, k, P);

  if (lhs.is_zero() && rhs.is_zero()) return 0.0;
  if (lhs.is_zero()) return std::exp(rhs.log_modulus);
  // |lhs - rhs| / (1 + |lhs|) = |1 - rhs/lhs| * sigmoid(log|lhs|)
  const LogComplex ratio = rhs / lhs;
  const std::complex<double> q = ratio.to_complex();
  const double sigmoid = 1.0 / (1.0 + std::exp(-lhs.log_modulus));
  return std::abs(std::complex<double>(1.0, 0.0) - q) * sigmoid;
}

LogComplex radial_product_stat_log(int N, const RadialPotential& v,
                                   const MixedPolynomial& g) {
  if (N < 1) throw std::invalid_argument("radial_product_stat: N must be >= 1");
  return det_from_log_entries(N, [&](std::size_t r, std::size_t c) {
    const int i = static_cast<int>(r) + 1, j = static_cast<int>(c) + 1;
    std::vector<LogComplex> terms;
    for (const auto& [e, coeff] : g.terms()) {
      const int a = i - 1 + e.first;
      const int b = j - 1 + e.second;
      if (a != b) continue;
      if (!v.moment_finite(a + 1.0))
        throw std::domain_error("radial_product_stat: Gamma_V(" +
                                std::to_string(a + 1) + ") is infinite");
      LogComplex t{v.log_gamma_v(a + 1.0), 0.0};
      t *= LogComplex::from_complex(coeff);
      terms.push_back(t);
    }
    LogComplex s = log_sum(terms);
    s.log_modulus -= v.log_gamma_v(static_cast<double>(j));
    return s;
  });
}

std::complex<double> radial_product_stat(int N, const RadialPotential& v,
                                         const MixedPolynomial& g) {
  return radial_product_stat_log(N, v, g).to_complex();
}

std::complex<double> cue_product_stat(int N, const LaurentPolynomial& g) {
  if (N < 1) throw std::invalid_argument("cue_product_stat: N must be >= 1");
  CMatrix t(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto it = g.find(i - j);
      if (it != g.end()) t(i, j) = it->second;
    }
  return log_det(t).to_complex();
}

namespace {

double log_binomial(long n, long k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace

CueCharpolyMoment cue_charpoly_moment(int N, int m, int n) {
  if (N < 1 || m < 0 || n < 0)
    throw std::invalid_argument("cue_charpoly_moment: bad arguments");
  // The shifted Pascal matrices are exponentially ill conditioned (a
  // floating-point LU at N=12, m=n=5 is off by ~1e-2 relative), so the
  // minor is evaluated exactly: integer binomial entries and a
  // fraction-free Bareiss elimination.
  std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      mpz_bin_uiui(a[i - 1][j - 1].get_mpz_t(),
                   static_cast<unsigned long>(i + m + j + n - 2),
                   static_cast<unsigned long>(i + m - 1));
  int sign = 1;
  mpz_class prev = 1;
  bool singular = false;
  for (int k = 0; k < N - 1 && !singular; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  CueCharpolyMoment out;
  out.pascal_minor = singular ? 0.0 : sign * a[N - 1][N - 1].get_d();

  double log_prod = 0.0;
  for (int k = 0; k < N; ++k)
    log_prod += log_factorial(k) + log_factorial(k + m + n) - log_factorial(k + m) -
                log_factorial(k + n);
  out.product_formula = std::exp(log_prod);
  return out;
}

namespace {

// log of int x^alpha e^(-x^2/2) dx over R (zero for odd alpha):
// 2^((alpha+1)/2) Gamma((alpha+1)/2).
LogComplex log_line_weight_moment(long alpha) {
  if (alpha % 2 == 1) return LogComplex::zero();
  const double a = static_cast<double>(alpha);
  return {0.5 * (a + 1.0) * std::log(2.0) + log_gamma(0.5 * (a + 1.0)), 0.0};
}

}  // namespace

double gue_log_block_constant(int N, int block_k) {
  const int c1 = ProgressionIndex::cardinality_of(N, 2, 1);
  const int c2 = ProgressionIndex::cardinality_of(N, 2, 2);
  if (block_k == 1) {
    double s = (static_cast<double>(c1) * c1 - 0.5 * c1) * std::log(2.0);
    for (int k = 1; k <= c1; ++k) s += log_gamma(k) + log_gamma(k - 0.5);
    return s;
  }
  if (block_k == 2) {
    double s = (static_cast<double>(c2) * c2 + 0.5 * c2) * std::log(2.0);
    for (int k = 1; k <= c2; ++k) s += log_gamma(k) + log_gamma(k + 0.5);
    return s;
  }
  throw std::invalid_argument("gue_log_block_constant: block_k must be 1 or 2");
}

double gue_product_stat(int N, const std::vector<double>& g) {
  if (N < 1) throw std::invalid_argument("gue_product_stat: N must be >= 1");
  if (g.empty()) return 0.0;
  const LogComplex det = det_from_log_entries(N, [&](std::size_t r, std::size_t c) {
    const long i = static_cast<long>(r) + 1, j = static_cast<long>(c) + 1;
    std::vector<LogComplex> terms;
    for (std::size_t d = 0; d < g.size(); ++d) {
      if (g[d] == 0.0) continue;
      LogComplex t = log_line_weight_moment(i + j - 2 + static_cast<long>(d));
      if (t.is_zero()) continue;
      t *= LogComplex::from_real(g[d]);
      terms.push_back(t);
    }
    return log_sum(terms);
  });
  LogComplex out = det;
  out.log_modulus -= gue_log_block_constant(N, 1) + gue_log_block_constant(N, 2);
  return out.to_complex().real();
}

double gue_det_moment(int N, int m) {
  if (N < 1 || m < 0) throw std::invalid_argument("gue_det_moment: bad arguments");
  const int c1 = ProgressionIndex::cardinality_of(N, 2, 1);
  const int c2 = ProgressionIndex::cardinality_of(N, 2, 2);
  double lg = m * N * std::log(2.0);
  for (int l = 1; l <= c1; ++l) lg += log_gamma(l + m - 0.5) - log_gamma(l - 0.5);
  for (int l = 1; l <= c2; ++l) lg += log_gamma(l + m + 0.5) - log_gamma(l + 0.5);
  return std::exp(lg);
}

double gue_det_moment_power(int N, int s) {
  if (s < 0) throw std::invalid_argument("gue_det_moment_power: s must be >= 0");
  if (s % 2 == 1) return 0.0;
  return gue_det_moment(N, s / 2);
}

double translation_invariance_check(
    const MomentTable& mu, const MixedPolynomial& g, int n,
    const std::vector<std::pair<std::complex<double>, std::complex<double>>>& shifts) {
  if (n < 0) throw std::invalid_argument("translation_invariance_check: n must be >= 0");
  const int dim = n + 1;
  // binomial table
  std::vector<std::vector<double>> binom(dim, std::vector<double>(dim, 0.0));
  for (int i = 0; i < dim; ++i) {
    binom[i][0] = 1.0;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = std::exp(log_binomial(i, j));
  }
  auto det_at = [&](std::complex<double> z1, std::complex<double> z2) {
    CMatrix f(dim, dim);
    const std::complex<double> z2b = std::conj(z2);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        std::complex<double> s(0.0, 0.0);
        for (int r = 0; r <= i; ++r)
          for (int t = 0; t <= j; ++t) {
            std::complex<double> mg(0.0, 0.0);
            for (const auto& [e, c] : g.terms())
              mg += c * mu.moment(r + e.first, t + e.second);
            if (mg == std::complex<double>(0.0, 0.0)) continue;
            std::complex<double> pw1(1.0, 0.0), pw2(1.0, 0.0);
            for (int q = 0; q < i - r; ++q) pw1 *= -z1;
            for (int q = 0; q < j - t; ++q) pw2 *= -z2b;
            s += binom[i][r] * binom[j][t] * pw1 * pw2 * mg;
          }
        f(i, j) = s;
      }
    return log_det(f).to_complex();
  };
  const std::complex<double> base = det_at({0.0, 0.0}, {0.0, 0.0});
  const double scale = std::max(1.0, std::abs(base));
  double worst = 0.0;
  for (const auto& [z1, z2] : shifts)
    worst = std::max(worst, std::abs(det_at(z1, z2) - base) / scale);
  return worst;
}

}  // namespace powergin
