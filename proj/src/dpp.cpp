// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/dpp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "powergin/special.hpp"

namespace powergin {

namespace {

using cd = std::complex<double>;

// iterative radix-2 FFT with the e^{+i...} convention, n a power of two
void fft_pos(std::vector<cd>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    const cd wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace

PowerGinibreBlockSampler::PowerGinibreBlockSampler(int N, int M, int k, int max_points)
    : N_(N), M_(M), k_(k) {
  if (N < 1) throw std::invalid_argument("PowerGinibreBlockSampler: N must be >= 1");
  const ProgressionIndex idx(N, M, k);  // validates M, k
  n_ = idx.cardinality();
  if (n_ < 1) throw std::invalid_argument("PowerGinibreBlockSampler: empty block");
  if (n_ > max_points)
    throw std::invalid_argument("PowerGinibreBlockSampler: block size " +
                                std::to_string(n_) + " exceeds the guard");
  log_rho_.resize(n_);
  const double logN = std::log(static_cast<double>(N));
  for (int l = 0; l < n_; ++l)
    log_rho_[l] =
        0.5 * (M * l * logN + log_gamma(k) - log_gamma(static_cast<double>(M) * l + k));
}

PointSample PowerGinibreBlockSampler::sample(RngStream& rng) const {
  const std::uint64_t seed = rng.seed();
  PointSample out;
  out.ensemble = "power-ginibre-block";
  out.N = N_;
  out.M = M_;
  out.k = k_;
  out.seed = seed;
  out.points.reserve(n_);

  std::vector<std::vector<cd>> basis;  // orthonormal chosen directions
  std::vector<double> occupancy(n_, 0.0);  // sum_i |e_{i,l}|^2
  std::vector<double> logc(n_), c(n_);
  std::vector<cd> grid(kGrid), coeff(kGrid), v(n_), s;

  for (int j = 0; j < n_; ++j) {
    // radial mixture over the unoccupied part of each monomial direction
    double total = 0.0;
    std::vector<double> w(n_);
    for (int l = 0; l < n_; ++l) {
      w[l] = std::max(0.0, 1.0 - occupancy[l]);
      total += w[l];
    }
    double pick = rng.uniform() * total;
    int l_star = n_ - 1;
    for (int l = 0; l < n_; ++l) {
      pick -= w[l];
      if (pick <= 0.0) {
        l_star = l;
        break;
      }
    }
    const double u = rng.gamma(static_cast<double>(M_) * l_star + k_);
    const double r = std::pow(u / N_, 0.5 * M_);

    // coefficient magnitudes of the monomial frame at |z| = r
    const double logr = std::log(r);
    double a_of_r = 0.0;
    for (int l = 0; l < n_; ++l) {
      logc[l] = log_rho_[l] + l * logr;
      c[l] = std::exp(logc[l]);
      a_of_r += c[l] * c[l];
    }

    // angular conditional on the 1024-point grid
    std::fill(grid.begin(), grid.end(), cd(0.0, 0.0));
    std::vector<double> fgrid(kGrid, a_of_r);
    for (const auto& e : basis) {
      std::fill(coeff.begin(), coeff.end(), cd(0.0, 0.0));
      for (int l = 0; l < n_; ++l) coeff[l] = std::conj(e[l]) * c[l];
      fft_pos(coeff);
      for (int g = 0; g < kGrid; ++g) fgrid[g] -= std::norm(coeff[g]);
    }
    double fmax = 0.0;
    for (int g = 0; g < kGrid; ++g) fmax = std::max(fmax, fgrid[g]);
    const double envelope = fmax * kSafety;
    if (!(envelope > 0.0))
      throw EnvelopeViolation("PowerGinibreBlockSampler: degenerate angular density");

    auto f_at = [&](double theta) {
      double f = a_of_r;
      for (const auto& e : basis) {
        cd sum(0.0, 0.0);
        for (int l = 0; l < n_; ++l)
          sum += std::conj(e[l]) * c[l] * std::polar(1.0, l * theta);
        f -= std::norm(sum);
      }
      return std::max(f, 0.0);
    };

    double theta = 0.0;
    bool accepted = false;
    for (long it = 0; it < kRejectCap; ++it) {
      theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double f = f_at(theta);
      if (f > envelope)
        throw EnvelopeViolation("PowerGinibreBlockSampler: density exceeds envelope");
      if (rng.uniform() * envelope <= f) {
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw RejectionCapExceeded("PowerGinibreBlockSampler: rejection cap exceeded");

    out.points.push_back(std::polar(r, theta));

    // extend the orthonormal basis with the accepted point's direction
    for (int l = 0; l < n_; ++l) v[l] = c[l] * std::polar(1.0, l * theta);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        cd ip(0.0, 0.0);
        for (int l = 0; l < n_; ++l) ip += std::conj(e[l]) * v[l];
        for (int l = 0; l < n_; ++l) v[l] -= ip * e[l];
      }
    }
    double nrm2 = 0.0;
    for (int l = 0; l < n_; ++l) nrm2 += std::norm(v[l]);
    if (!(nrm2 > 0.0))
      throw EnvelopeViolation("PowerGinibreBlockSampler: degenerate direction");
    const double inv = 1.0 / std::sqrt(nrm2);
    for (int l = 0; l < n_; ++l) v[l] *= inv;
    basis.push_back(v);
    for (int l = 0; l < n_; ++l) occupancy[l] += std::norm(v[l]);
  }
  return out;
}

}  // namespace powergin
