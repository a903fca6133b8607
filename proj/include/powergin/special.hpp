// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>

namespace powergin {

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// log n! for n >= 0.
double log_factorial(long n);

/// Partial sum of the exponential along the arithmetic progression
/// {k-1, M+k-1, 2M+k-1, ...}:
///   sum_{j=0}^{n-1} x^(Mj+k-1) / (Mj+k-1)!
std::complex<double> partial_exp_sum(int M, int k, std::complex<double> x, long n);

/// Full series (n = infinity). Terms are summed until three consecutive
/// terms each contribute below 1e-18 relative. Requires |x| < 700 so the
/// result and the peak term stay inside double range.
std::complex<double> partial_exp_sum(int M, int k, std::complex<double> x);

/// Roots-of-unity filter:
///   (1/M) sum_{l=1}^{M} conj(zeta)^((k-1)(l-1)) exp(zeta^(l-1) x)
/// with zeta = exp(2 pi i root_index / M) a primitive M-th root of unity
/// (root_index coprime to M). Equals partial_exp_sum(M, k, x).
std::complex<double> roots_of_unity_filter(int M, int k, std::complex<double> x,
                                           int root_index = 1);

}  // namespace powergin
