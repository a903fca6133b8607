// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace powergin {

namespace {

// multiplicative step-size controller targeting acceptance 0.3 +- 0.1
struct Tuner {
  long window = 0, window_accepts = 0;

  // returns the factor to apply to sigma (1.0 = leave alone)
  double observe(bool accepted, long window_len) {
    ++window;
    if (accepted) ++window_accepts;
    if (window < window_len) return 1.0;
    const double rate = static_cast<double>(window_accepts) / window;
    window = window_accepts = 0;
    if (rate > 0.4) return 1.4;
    if (rate < 0.2) return 1.0 / 1.4;
    return 1.0;
  }
};

}  // namespace

BetaEnsembleMcmc::BetaEnsembleMcmc(int N, int p, RadialPotential v, RngStream rng)
    : N_(N), p_(p), v_(std::move(v)), rng_(rng) {
  if (N < 1) throw std::invalid_argument("BetaEnsembleMcmc: N must be >= 1");
  if (p < 1) throw std::invalid_argument("BetaEnsembleMcmc: p must be >= 1");
  z_.resize(N);
  // start from a spread-out configuration with finite weight
  for (int i = 0; i < N; ++i)
    z_[i] = std::polar(0.5 + rng_.uniform(), rng_.uniform(0.0, 6.283185307179586));
}

double BetaEnsembleMcmc::log_weight_move(int i, std::complex<double> znew) const {
  const double vold = v_.v(std::norm(z_[i]));
  const double vnew = v_.v(std::norm(znew));
  if (std::isinf(vnew)) return -std::numeric_limits<double>::infinity();
  double delta = vold - vnew;
  for (int j = 0; j < N_; ++j) {
    if (j == i) continue;
    const double dist_new = std::abs(znew - z_[j]);
    const double dist_old = std::abs(z_[i] - z_[j]);
    if (dist_new == 0.0) return -std::numeric_limits<double>::infinity();
    delta += 2.0 * p_ * (std::log(dist_new) - std::log(dist_old));
  }
  return delta;
}

void BetaEnsembleMcmc::burn_in(long proposals) {
  Tuner tuner;
  const long window_len = std::max<long>(200, 20L * N_);
  for (long t = 0; t < proposals; ++t) {
    const int i = static_cast<int>(rng_.uniform_int(N_));
    const std::complex<double> znew = z_[i] + sigma_ * rng_.complex_normal();
    const double lw = log_weight_move(i, znew);
    bool accepted = false;
    if (lw >= 0.0 || rng_.uniform() < std::exp(lw)) {
      z_[i] = znew;
      accepted = true;
    }
    sigma_ *= tuner.observe(accepted, window_len);
  }
  proposals_ = accepts_ = 0;  // rate statistics start after tuning
}

void BetaEnsembleMcmc::advance(long proposals) {
  for (long t = 0; t < proposals; ++t) {
    const int i = static_cast<int>(rng_.uniform_int(N_));
    const std::complex<double> znew = z_[i] + sigma_ * rng_.complex_normal();
    const double lw = log_weight_move(i, znew);
    ++proposals_;
    if (lw >= 0.0 || rng_.uniform() < std::exp(lw)) {
      z_[i] = znew;
      ++accepts_;
    }
  }
}

const std::vector<std::complex<double>>& BetaEnsembleMcmc::next_sample() {
  advance(N_);
  return z_;
}

double BetaEnsembleMcmc::acceptance_rate() const {
  return proposals_ == 0 ? 0.0 : static_cast<double>(accepts_) / proposals_;
}

PointSample BetaEnsembleMcmc::point_sample() const {
  PointSample s;
  s.points = z_;
  s.ensemble = "beta-ensemble-mcmc(" + v_.name() + ",p=" + std::to_string(p_) + ")";
  s.N = N_;
  s.scaling = Scaling::Unscaled;
  s.seed = rng_.seed();
  return s;
}

PointSample sample_beta_ensemble_mcmc(int N, int p, const RadialPotential& v,
                                      long steps, RngStream& rng) {
  if (steps < 2) throw std::invalid_argument("sample_beta_ensemble_mcmc: steps too small");
  BetaEnsembleMcmc chain(N, p, v, rng.split(0x6D636D63u));
  chain.burn_in(steps / 2);
  long rest = steps - steps / 2;
  while (rest > 0) {
    const long hop = std::min<long>(rest, N);
    chain.advance(hop);
    rest -= hop;
  }
  const double rate = chain.acceptance_rate();
  if (rate < 0.05 || rate > 0.9)
    throw std::runtime_error("sample_beta_ensemble_mcmc: acceptance rate " +
                             std::to_string(rate) + " outside [0.05, 0.9]");
  return chain.point_sample();
}

RealBlockMcmc::RealBlockMcmc(int c, double a, RngStream rng)
    : c_(c), a_(a), rng_(rng) {
  if (c < 1) throw std::invalid_argument("RealBlockMcmc: c must be >= 1");
  x_.resize(c);
  for (int i = 0; i < c; ++i) x_[i] = 1.0 + 2.0 * i + rng_.uniform();
}

double RealBlockMcmc::log_weight_move(int i, double xnew) const {
  if (xnew <= 0.0) return -std::numeric_limits<double>::infinity();
  double delta = a_ * (std::log(xnew) - std::log(x_[i])) - 0.5 * (xnew - x_[i]);
  for (int j = 0; j < c_; ++j) {
    if (j == i) continue;
    const double dn = std::abs(xnew - x_[j]);
    if (dn == 0.0) return -std::numeric_limits<double>::infinity();
    delta += 2.0 * (std::log(dn) - std::log(std::abs(x_[i] - x_[j])));
  }
  return delta;
}

void RealBlockMcmc::burn_in(long proposals) {
  Tuner tuner;
  const long window_len = std::max<long>(200, 20L * c_);
  for (long t = 0; t < proposals; ++t) {
    const int i = static_cast<int>(rng_.uniform_int(c_));
    const double xnew = x_[i] + sigma_ * rng_.normal();
    const double lw = log_weight_move(i, xnew);
    bool accepted = false;
    if (lw >= 0.0 || rng_.uniform() < std::exp(lw)) {
      x_[i] = xnew;
      accepted = true;
    }
    sigma_ *= tuner.observe(accepted, window_len);
  }
  proposals_ = accepts_ = 0;
}

const std::vector<double>& RealBlockMcmc::next_sample() {
  for (int t = 0; t < c_; ++t) {
    const int i = static_cast<int>(rng_.uniform_int(c_));
    const double xnew = x_[i] + sigma_ * rng_.normal();
    const double lw = log_weight_move(i, xnew);
    ++proposals_;
    if (lw >= 0.0 || rng_.uniform() < std::exp(lw)) {
      x_[i] = xnew;
      ++accepts_;
    }
  }
  return x_;
}

double RealBlockMcmc::acceptance_rate() const {
  return proposals_ == 0 ? 0.0 : static_cast<double>(accepts_) / proposals_;
}

}  // namespace powergin
