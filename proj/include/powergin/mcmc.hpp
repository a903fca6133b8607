// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <vector>

#include "powergin/point_sample.hpp"
#include "powergin/radial_potential.hpp"
#include "powergin/rng.hpp"

namespace powergin {

/// Metropolis-Hastings for the planar beta ensemble with density
/// proportional to prod |z_i - z_j|^(2p) prod e^(-V(|z_i|^2)). Single-point
/// spherical Gaussian proposals; the step size is tuned during burn-in to
/// an acceptance rate of 0.3 +- 0.1 and frozen afterwards.
class BetaEnsembleMcmc {
 public:
  BetaEnsembleMcmc(int N, int p, RadialPotential v, RngStream rng);

  /// Burn-in with step-size tuning. Throws std::runtime_error if the
  /// acceptance rate cannot be brought inside [0.05, 0.9].
  void burn_in(long proposals);

  /// Advance the chain by the given number of single-point proposals.
  void advance(long proposals);

  /// Advance by one thinning interval (N proposals) and return the state.
  const std::vector<std::complex<double>>& next_sample();

  const std::vector<std::complex<double>>& state() const { return z_; }
  double acceptance_rate() const;
  double step_size() const { return sigma_; }

  PointSample point_sample() const;

 private:
  double log_weight_move(int i, std::complex<double> znew) const;

  int N_, p_;
  RadialPotential v_;
  RngStream rng_;
  std::vector<std::complex<double>> z_;
  double sigma_ = 0.5;
  long proposals_ = 0, accepts_ = 0;
};

/// Runs burn-in = steps/2 with tuning, then the remaining steps/2 with
/// thinning N, and returns the final state.
PointSample sample_beta_ensemble_mcmc(int N, int p, const RadialPotential& v,
                                      long steps, RngStream& rng);

/// Metropolis-Hastings on R_+^c for a squared-spectrum block: density
/// proportional to prod |x_i - x_j|^2 prod x_i^a e^(-x_i/2).
class RealBlockMcmc {
 public:
  RealBlockMcmc(int c, double a, RngStream rng);
  void burn_in(long proposals);
  const std::vector<double>& next_sample();
  const std::vector<double>& state() const { return x_; }
  double acceptance_rate() const;

 private:
  double log_weight_move(int i, double xnew) const;
  int c_;
  double a_;
  RngStream rng_;
  std::vector<double> x_;
  double sigma_ = 1.0;
  long proposals_ = 0, accepts_ = 0;
};

}  // namespace powergin
