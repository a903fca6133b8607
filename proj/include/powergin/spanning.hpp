// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powergin/mixed_polynomial.hpp"

namespace powergin {

/// One term of a product-statistic expansion: weight * prod_i Q(Z_i, conj Z_i).
struct SpanningTerm {
  double weight;
  MixedPolynomial factor;
};

struct SpanningResult {
  std::vector<SpanningTerm> terms;
  double verification_residual;  // max relative error over the check configs
};

struct IllConditionedSolve : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monomial symmetric mixed polynomial m_target evaluated at N points:
/// the sum over distinct assignments of the exponent pairs to the points.
std::complex<double> monomial_symmetric_evaluate(
    const std::vector<std::pair<int, int>>& target,
    const std::vector<std::complex<double>>& points);

/// Expresses the monomial symmetric mixed polynomial given by a multiset
/// of N exponent pairs as a linear combination of product statistics
/// prod_i Q(Z_i, conj Z_i). The symbolic Vandermonde inversion is replaced
/// by a linear solve on the simplex lattice of coefficient vectors; the
/// result is verified by evaluation at 20 random point configurations and
/// IllConditionedSolve is thrown when the residual exceeds tol.
SpanningResult spanning_coefficients(const std::vector<std::pair<int, int>>& target,
                                     int N, double tol = 1e-8,
                                     std::size_t max_system = 3000);

}  // namespace powergin
