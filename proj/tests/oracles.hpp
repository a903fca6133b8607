// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

// Test-only reference implementations, deliberately independent of the
// library's computation paths: brute-force determinants by cofactor
// expansion and direct quadrature oracles.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "powergin/cmatrix.hpp"
#include "powergin/quadrature.hpp"

namespace oracles {

using powergin::cd;
using powergin::CMatrix;

/// Cofactor-expansion determinant, O(n!); fine for n <= 6.
inline cd cofactor_det(const CMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return {1.0, 0.0};
  if (n == 1) return a(0, 0);
  cd sum(0.0, 0.0);
  double sign = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    CMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    }
    sum += sign * a(0, c) * cofactor_det(minor);
    sign = -sign;
  }
  return sum;
}

/// E[g(X)] for X ~ Gamma(alpha, 1) by adaptive quadrature.
inline double gamma_expectation(double alpha, const std::function<double(double)>& g) {
  const double hi = alpha + 60.0 * std::sqrt(alpha) + 80.0;
  const double lognorm = std::lgamma(alpha);
  return powergin::integrate_adaptive(
      [&](double t) {
        if (t <= 0.0) return 0.0;
        return g(t) * std::exp((alpha - 1.0) * std::log(t) - t - lognorm);
      },
      0.0, hi, 1e-11);
}

/// E[(x1 x2)^(2m)] for the two-point line ensemble with density
/// proportional to (x1-x2)^2 e^(-(x1^2+x2^2)/2), by 2-D quadrature.
inline double two_point_even_moment(int m) {
  auto inner = [&](double x1, int mm) {
    return powergin::integrate_adaptive(
        [&](double x2) {
          const double d = x1 - x2;
          double p = 1.0;
          for (int q = 0; q < 2 * mm; ++q) p *= x1 * x2;
          return d * d * p * std::exp(-0.5 * (x1 * x1 + x2 * x2));
        },
        -12.0, 12.0, 1e-11);
  };
  auto outer = [&](int mm) {
    return powergin::integrate_adaptive([&](double x1) { return inner(x1, mm); },
                                        -12.0, 12.0, 1e-10);
  };
  return outer(m) / outer(0);
}

}  // namespace oracles
