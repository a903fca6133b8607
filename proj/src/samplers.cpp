// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "powergin/eigen.hpp"
#include "powergin/exact_stats.hpp"

namespace powergin {

namespace {

CMatrix gaussian_matrix(int n, RngStream& rng, double stddev) {
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = stddev * rng.complex_normal();
  return a;
}

std::vector<cd> eigenvalues_with_retry(const CMatrix& a, RngStream& rng) {
  try {
    return eigenvalues(a);
  } catch (const EigenFailure&) {
    // one retry under a fresh Haar similarity
    const CMatrix q = qr_unitary(gaussian_matrix(static_cast<int>(a.rows()), rng, 1.0));
    const CMatrix b = q.adjoint() * a * q;
    return eigenvalues(b);
  }
}

}  // namespace

PointSample sample_ginibre(int N, RngStream& rng, int max_n) {
  if (N < 1) throw std::invalid_argument("sample_ginibre: N must be >= 1");
  if (N > max_n) throw std::invalid_argument("sample_ginibre: N exceeds the guard");
  const std::uint64_t seed = rng.seed();
  const CMatrix g = gaussian_matrix(N, rng, 1.0 / std::sqrt(static_cast<double>(N)));
  PointSample s;
  s.points = eigenvalues_with_retry(g, rng);
  s.ensemble = "ginibre";
  s.N = N;
  s.scaling = Scaling::Scaled;
  s.seed = seed;
  return s;
}

std::vector<double> sample_kostlan_radii(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_kostlan_radii: N must be >= 1");
  std::vector<double> out(N);
  for (int k = 1; k <= N; ++k) out[k - 1] = rng.gamma(static_cast<double>(k));
  return out;
}

PointSample sample_high_powers(int N, int M, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_high_powers: N must be >= 1");
  if (M < N) throw std::invalid_argument("sample_high_powers: requires M >= N");
  const std::uint64_t seed = rng.seed();
  PointSample s;
  s.points.resize(N);
  for (int k = 1; k <= N; ++k) {
    const double g = rng.gamma(static_cast<double>(k));
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    s.points[k - 1] = std::polar(std::pow(g, 0.5 * M), theta);
  }
  s.ensemble = "high-powers";
  s.N = N;
  s.M = M;
  s.scaling = Scaling::Unscaled;
  s.seed = seed;
  return s;
}

PointSample sample_cue(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_cue: N must be >= 1");
  const std::uint64_t seed = rng.seed();
  const CMatrix q = qr_unitary(gaussian_matrix(N, rng, 1.0));
  PointSample s;
  s.points = eigenvalues_with_retry(q, rng);
  s.ensemble = "cue";
  s.N = N;
  s.seed = seed;
  return s;
}

std::vector<double> sample_gue(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_gue: N must be >= 1");
  CMatrix h(N, N);
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  const CMatrix a = gaussian_matrix(N, rng, 1.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      h(i, j) = (a(i, j) + std::conj(a(j, i))) * inv_sqrt2;
  return eigenvalues_hermitian(h);
}

PointSample sample_gue_points(int N, RngStream& rng) {
  const std::uint64_t seed = rng.seed();
  const auto x = sample_gue(N, rng);
  PointSample s;
  s.points.reserve(x.size());
  for (double v : x) s.points.emplace_back(v, 0.0);
  s.ensemble = "gue";
  s.N = N;
  s.scaling = Scaling::Unscaled;
  s.seed = seed;
  return s;
}

PointSample sample_truncated_unitary(int N, int n, RngStream& rng) {
  if (N < 1 || n < 1)
    throw std::invalid_argument("sample_truncated_unitary: N, n must be >= 1");
  const std::uint64_t seed = rng.seed();
  const CMatrix q = qr_unitary(gaussian_matrix(N + n, rng, 1.0));
  CMatrix minor(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) minor(i, j) = q(i, j);
  PointSample s;
  s.points = eigenvalues_with_retry(minor, rng);
  s.ensemble = "truncated-unitary";
  s.N = N;
  s.M = n;  // records the truncation parameter
  s.seed = seed;
  return s;
}

PointSample sample_spherical(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_spherical: N must be >= 1");
  const std::uint64_t seed = rng.seed();
  for (int attempt = 0; attempt < 3; ++attempt) {
    const CMatrix g1 = gaussian_matrix(N, rng, 1.0);
    // smallest-singular-value estimate: one random solve; sigma_min is
    // within a modest factor of |v| / |G1^-1 v| with high probability
    std::vector<cd> v(N);
    double vnorm = 0.0;
    for (auto& z : v) {
      z = rng.complex_normal();
      vnorm += std::norm(z);
    }
    vnorm = std::sqrt(vnorm);
    std::vector<cd> x;
    try {
      x = solve_lu(g1, v);
    } catch (const std::runtime_error&) {
      continue;
    }
    double xnorm = 0.0;
    for (const auto& z : x) xnorm += std::norm(z);
    xnorm = std::sqrt(xnorm);
    if (vnorm / xnorm < 1e-10) continue;

    const CMatrix g2 = gaussian_matrix(N, rng, 1.0);
    // G1^-1 G2 column by column
    CMatrix m(N, N);
    for (int j = 0; j < N; ++j) {
      std::vector<cd> col(N);
      for (int i = 0; i < N; ++i) col[i] = g2(i, j);
      const auto sol = solve_lu(g1, std::move(col));
      for (int i = 0; i < N; ++i) m(i, j) = sol[i];
    }
    PointSample s;
    s.points = eigenvalues_with_retry(m, rng);
    s.ensemble = "spherical";
    s.N = N;
    s.seed = seed;
    return s;
  }
  throw std::runtime_error("sample_spherical: repeated near-singular G1");
}

PointSample sample_ginibre_product(int N, int m, RngStream& rng) {
  if (N < 1 || m < 1)
    throw std::invalid_argument("sample_ginibre_product: N, m must be >= 1");
  const std::uint64_t seed = rng.seed();
  CMatrix prod = gaussian_matrix(N, rng, 1.0);
  for (int j = 1; j < m; ++j) prod = prod * gaussian_matrix(N, rng, 1.0);
  PointSample s;
  s.points = eigenvalues_with_retry(prod, rng);
  s.ensemble = "ginibre-product";
  s.N = N;
  s.M = m;
  s.scaling = Scaling::Unscaled;
  s.seed = seed;
  return s;
}

std::vector<double> sample_gamma_product_radii(int N, int m, RngStream& rng) {
  std::vector<double> out(N, 1.0);
  for (int k = 1; k <= N; ++k)
    for (int j = 0; j < m; ++j) out[k - 1] *= rng.gamma(static_cast<double>(k));
  return out;
}

std::complex<double> sample_bhny_charpoly(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_bhny_charpoly: N must be >= 1");
  std::complex<double> z(1.0, 0.0);
  for (int k = 1; k <= N; ++k) {
    const double b = (k == 1) ? 1.0 : rng.beta(1.0, static_cast<double>(k - 1));
    const double omega = rng.uniform(0.0, 2.0 * std::numbers::pi);
    z *= 1.0 + std::sqrt(b) * std::polar(1.0, omega);
  }
  return z;
}

double sample_gue_det(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_gue_det: N must be >= 1");
  double prod = 1.0;
  for (int k = 1; k <= N; ++k)
    prod *= std::sqrt(rng.chi_squared(2.0 * (k / 2) + 1.0));
  const double sign = rng.uniform() < 0.5 ? 1.0 : -1.0;
  return sign * prod;
}

double sample_gue_det_chisq(int N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_gue_det_chisq: N must be >= 1");
  double prod = 1.0;
  for (int k = 1; k <= N; ++k) prod *= rng.chi_squared(2.0 * (k / 2) + 1.0);
  const double sign = rng.uniform() < 0.5 ? 1.0 : -1.0;
  return sign * prod;
}

double gue_det_chisq_calibration(int N) {
  double denom = 1.0;
  for (int k = 1; k <= N; ++k) {
    const double d = 2.0 * (k / 2) + 1.0;
    denom *= d * (d + 2.0);
  }
  return std::sqrt(gue_det_moment(N, 1) / denom);
}

}  // namespace powergin
