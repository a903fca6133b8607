// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "powergin/special.hpp"

namespace powergin {

namespace {

using cd = std::complex<double>;

cd principal_root(cd x, int M) {
  if (x == cd(0.0, 0.0)) return {0.0, 0.0};
  return std::polar(std::pow(std::abs(x), 1.0 / M), std::arg(x) / M);
}

}  // namespace

PowerGinKernel::PowerGinKernel(int N_, int M_, int k_) : N(N_), M(M_), k(k_) {
  if (N < 1) throw std::invalid_argument("PowerGinKernel: N must be >= 1");
  c_k = ProgressionIndex(N, M, k).cardinality();
  if (c_k < 1) throw std::invalid_argument("PowerGinKernel: empty block (k > N)");
  log_z_nu = std::log(std::numbers::pi) - k * std::log(static_cast<double>(N)) +
             std::log(static_cast<double>(M)) + log_gamma(k);
}

LogComplex log_kernel_eval(const PowerGinKernel& ker, cd z, cd w) {
  const cd x = std::pow(static_cast<double>(ker.N), ker.M) * z * std::conj(w);
  if (x == cd(0.0, 0.0)) {
    // only the l = 0 term survives: Gamma(k)/(k-1)! = 1
    return LogComplex::one();
  }
  const double lax = std::log(std::abs(x));
  const double ax = std::arg(x);
  const double lgk = log_gamma(ker.k);
  std::vector<LogComplex> terms;
  terms.reserve(ker.c_k);
  for (int l = 0; l < ker.c_k; ++l) {
    const double lm =
        lgk + l * lax - log_factorial(static_cast<long>(ker.M) * l + ker.k - 1);
    terms.push_back({lm, LogComplex::wrap_phase(l * ax)});
  }
  return log_sum(terms);
}

cd kernel_eval(const PowerGinKernel& ker, cd z, cd w) {
  return log_kernel_eval(ker, z, w).to_complex();
}

double log_reference_density(const PowerGinKernel& ker, cd z) {
  const double r = std::abs(z);
  if (r == 0.0 && ker.k != ker.M) {
    // |z|^(2(k-M)/M): integrable singularity for k < M, zero for k > M
    return ker.k < ker.M ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  }
  const double r2m = std::pow(r, 2.0 / ker.M);
  return (2.0 * (ker.k - ker.M) / ker.M) * std::log(r) - ker.N * r2m - ker.log_z_nu;
}

double reference_density(const PowerGinKernel& ker, cd z) {
  return std::exp(log_reference_density(ker, z));
}

double mean_density(const PowerGinKernel& ker, cd z) {
  const LogComplex kk = log_kernel_eval(ker, z, z);
  return std::exp(kk.log_modulus + log_reference_density(ker, z) -
                  std::log(static_cast<double>(ker.c_k)));
}

double twisted_circular_density(int M, cd z) {
  if (M < 1) throw std::invalid_argument("twisted_circular_density: M must be >= 1");
  const double r = std::abs(z);
  if (r >= 1.0) return 0.0;
  return std::pow(r, 2.0 / M - 2.0) / (std::numbers::pi * M);
}

double j_quantity(const PowerGinKernel& ker, cd z, cd w) {
  const LogComplex kzw = log_kernel_eval(ker, z, w);
  return std::exp(2.0 * kzw.log_modulus + log_reference_density(ker, z) +
                  log_reference_density(ker, w));
}

double j_asymptotic_residual(const PowerGinKernel& ker, cd z, cd w, double epsilon) {
  const double a = std::arg(z * std::conj(w));
  if (!(std::numbers::pi - std::abs(a) > epsilon))
    throw std::domain_error("j_asymptotic_residual: (z,w) too close to the antipodal set");
  const int M = ker.M;
  const cd zr = principal_root(z, M);
  const cd wr0 = principal_root(w, M);
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < M; ++j) {
    const cd wr = wr0 * std::polar(1.0, 2.0 * std::numbers::pi * j / M);
    best = std::min(best, std::abs(zr - wr));
  }
  const double log_a = 2.0 * std::log(static_cast<double>(ker.N)) -
                       2.0 * std::log(std::numbers::pi) - 4.0 * std::log(static_cast<double>(M)) +
                       (2.0 / M - 2.0) * (std::log(std::abs(z)) + std::log(std::abs(w))) -
                       ker.N * best * best;
  const LogComplex kzw = log_kernel_eval(ker, z, w);
  const double log_j = 2.0 * kzw.log_modulus + log_reference_density(ker, z) +
                       log_reference_density(ker, w);
  return std::abs(1.0 - std::exp(log_a - log_j));
}

std::complex<double> microscopic_kernel(int M, int k, cd z, cd w) {
  if (M < 1 || k < 1 || k > M)
    throw std::invalid_argument("microscopic_kernel: bad M, k");
  const cd u = principal_root(z * std::conj(w), M);
  const double damp =
      -0.5 * (std::pow(std::abs(z), 2.0 / M) + std::pow(std::abs(w), 2.0 / M));
  return partial_exp_sum(M, k, u) * std::exp(damp);
}

std::complex<double> microscopic_kernel_averaged(int M, int k, cd z, cd w,
                                                 int zeta_index, int rotation) {
  if (std::gcd(zeta_index, M) != 1)
    throw std::invalid_argument("microscopic_kernel_averaged: zeta_index not coprime");
  const cd rot = std::polar(1.0, 2.0 * std::numbers::pi * rotation / M);
  // paired roots: eta is the root of w with omega * conj(eta) equal to the
  // principal root of z conj(w), and the rotation turns both together, so
  // the value matches the principal-root evaluation for every choice
  const cd u = principal_root(z * std::conj(w), M);
  const cd omega0 = principal_root(z, M);
  const cd omega = omega0 * rot;
  const cd eta = std::conj(u / omega0) * rot;
  cd sum(0.0, 0.0);
  for (int j = 0; j < M; ++j) {
    const cd zj = std::polar(1.0, 2.0 * std::numbers::pi * zeta_index * j / M);
    const cd weight = std::polar(1.0, 2.0 * std::numbers::pi * zeta_index * j * (1.0 - k) / M);
    const cd a = zj * omega;
    const double mod2 = -0.5 * std::norm(a - eta);
    const double im = (a * std::conj(eta)).imag();
    sum += weight * std::exp(cd(mod2, im));
  }
  return sum / static_cast<double>(M);
}

std::complex<double> microscopic_kernel_finite(int N, int M, int k, cd z, cd w) {
  const int c_k = ProgressionIndex(N, M, k).cardinality();
  const cd u = principal_root(z * std::conj(w), M);
  const double damp =
      -0.5 * (std::pow(std::abs(z), 2.0 / M) + std::pow(std::abs(w), 2.0 / M));
  return partial_exp_sum(M, k, u, c_k) * std::exp(damp);
}

}  // namespace powergin
