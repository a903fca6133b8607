// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>

#include "powergin/log_complex.hpp"
#include "powergin/progression.hpp"

namespace powergin {

/// The reproducing kernel of the power block indexed by I_{N,M,k},
///   K(z,w) = Gamma(k) sum_{l<c_k} (N^M z conj(w))^l / (Ml+k-1)!,
/// taken against the reference measure with density
///   (1/Z) |z|^(2(k-M)/M) e^(-N |z|^(2/M)),  Z = pi N^-k M Gamma(k).
struct PowerGinKernel {
  int N, M, k;
  int c_k;
  double log_z_nu;

  PowerGinKernel(int N_, int M_, int k_);
};

/// K(z,w) in the log domain (safe at any N).
LogComplex log_kernel_eval(const PowerGinKernel& ker, std::complex<double> z,
                           std::complex<double> w);
std::complex<double> kernel_eval(const PowerGinKernel& ker, std::complex<double> z,
                                 std::complex<double> w);

double log_reference_density(const PowerGinKernel& ker, std::complex<double> z);
double reference_density(const PowerGinKernel& ker, std::complex<double> z);

/// Normalized one-point density (1/c_k) K(z,z) * reference density.
double mean_density(const PowerGinKernel& ker, std::complex<double> z);

/// (1/(pi M)) |z|^(2/M - 2) inside the unit disk, 0 outside: the
/// pushforward of the uniform disk law under z -> z^M.
double twisted_circular_density(int M, std::complex<double> z);

/// J(z,w) = |K(z,w)|^2 * refdens(z) * refdens(w).
double j_quantity(const PowerGinKernel& ker, std::complex<double> z,
                  std::complex<double> w);

/// |J - A| / J where A = (N^2/(pi^2 M^4)) |zw|^(2/M-2)
/// e^(-N |z^(1/M) - w^(1/M)|^2), the M-th roots chosen to minimize their
/// distance. Requires (z,w) with |pi - arg(z conj w)| > epsilon; throws
/// std::domain_error otherwise.
double j_asymptotic_residual(const PowerGinKernel& ker, std::complex<double> z,
                             std::complex<double> w, double epsilon = 0.3);

/// Local limit kernel of the unscaled block process:
///   (1/M) sum_j zeta^(j(1-k)) exp(zeta^j u - (|z|^(2/M)+|w|^(2/M))/2)
/// with u a coherent choice of (z conj w)^(1/M); evaluated through the
/// principal root, which makes the value independent of the arbitrary
/// zeta / paired-root choices.
std::complex<double> microscopic_kernel(int M, int k, std::complex<double> z,
                                        std::complex<double> w);

/// The same kernel evaluated through the root-of-unity average with an
/// explicit primitive-root choice (zeta_index coprime to M) and a paired
/// rotation of both roots; agrees with microscopic_kernel to rounding.
std::complex<double> microscopic_kernel_averaged(int M, int k, std::complex<double> z,
                                                 std::complex<double> w, int zeta_index,
                                                 int rotation);

/// Truncation of microscopic_kernel to the c_k(N) terms of the finite-N
/// kernel (with the same density cocycle); converges pointwise as N grows.
std::complex<double> microscopic_kernel_finite(int N, int M, int k,
                                               std::complex<double> z,
                                               std::complex<double> w);

}  // namespace powergin
