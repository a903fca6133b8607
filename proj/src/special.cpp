// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace powergin {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be > 0");
  return std::lgamma(x);
}

double log_factorial(long n) {
  if (n < 0) throw std::domain_error("log_factorial: n must be >= 0");
  static const auto table = [] {
    std::array<double, 171> t{};
    double acc = 0.0;
    t[0] = 0.0;
    for (long i = 1; i < 171; ++i) {
      acc += std::log(static_cast<double>(i));
      t[i] = acc;
    }
    return t;
  }();
  if (n < 171) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

namespace {

void check_progression_args(int M, int k) {
  if (M < 1) throw std::domain_error("partial_exp_sum: M must be >= 1");
  if (k < 1 || k > M) throw std::domain_error("partial_exp_sum: k out of [1,M]");
}

std::complex<double> first_term(int M, int k, std::complex<double> x) {
  (void)M;
  // x^(k-1)/(k-1)!
  std::complex<double> t(1.0, 0.0);
  for (int i = 1; i < k; ++i) t *= x / static_cast<double>(i);
  return t;
}

}  // namespace

std::complex<double> partial_exp_sum(int M, int k, std::complex<double> x, long n) {
  check_progression_args(M, k);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::domain_error("partial_exp_sum: non-finite x");
  if (n < 0) throw std::domain_error("partial_exp_sum: n must be >= 0");
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> term = first_term(M, k, x);
  long expo = k - 1;
  for (long j = 0; j < n; ++j) {
    sum += term;
    for (int s = 0; s < M; ++s) {
      ++expo;
      term *= x / static_cast<double>(expo);
    }
  }
  return sum;
}

std::complex<double> partial_exp_sum(int M, int k, std::complex<double> x) {
  check_progression_args(M, k);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::domain_error("partial_exp_sum: non-finite x");
  if (std::abs(x) >= 700.0)
    throw std::domain_error("partial_exp_sum: |x| must be < 700 for the full series");
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> term = first_term(M, k, x);
  long expo = k - 1;
  int small_streak = 0;
  // Terms may alternate in sign or phase, so require three consecutive
  // negligible terms before stopping.
  for (long j = 0; j < 100000; ++j) {
    sum += term;
    const double scale = std::max(std::abs(sum), 1e-300);
    if (std::abs(term) < 1e-18 * scale) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
    for (int s = 0; s < M; ++s) {
      ++expo;
      term *= x / static_cast<double>(expo);
    }
  }
  return sum;
}

std::complex<double> roots_of_unity_filter(int M, int k, std::complex<double> x,
                                           int root_index) {
  check_progression_args(M, k);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::domain_error("roots_of_unity_filter: non-finite x");
  if (root_index < 1 || std::gcd(root_index, M) != 1)
    throw std::domain_error("roots_of_unity_filter: root_index must be coprime to M");
  const double two_pi = 2.0 * std::numbers::pi;
  std::complex<double> sum(0.0, 0.0);
  for (int l = 1; l <= M; ++l) {
    const double ang = two_pi * root_index * (l - 1) / M;
    const std::complex<double> zeta_pow = std::polar(1.0, ang);
    const std::complex<double> weight = std::polar(1.0, -ang * (k - 1));
    sum += weight * std::exp(zeta_pow * x);
  }
  return sum / static_cast<double>(M);
}

}  // namespace powergin
