// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <vector>

#include "powergin/point_sample.hpp"
#include "powergin/radial_potential.hpp"
#include "powergin/rng.hpp"
#include "powergin/vandermonde_power.hpp"

namespace powergin {

/// Law of the latent exponent vector: P(I = u) proportional to
/// K(u)^2 prod_i Gamma_V(1 + u_i).
struct LatentLaw {
  std::vector<std::vector<int>> support;  // canonical order, matches prob
  std::vector<double> prob;
  double log_z;  // log of the normalization sum
  std::optional<mpz_class> z_exact;  // exact integer Z for the quadratic potential
};

LatentLaw latent_distribution(const LatentWeightTable& table, const RadialPotential& v);

const std::vector<int>& sample_latent(const LatentLaw& law, RngStream& rng);

/// Draw u from the latent law, then independent gamma_V(1 + u_i) radii.
std::vector<double> sample_conditional_radii(const LatentLaw& law,
                                             const RadialPotential& v, RngStream& rng);

/// Conditional high powers {X_i^(M/2) e^(i theta_i)}; requires
/// M >= (N-1) p + 1.
PointSample sample_conditional_high_powers(const LatentWeightTable& table,
                                           const LatentLaw& law,
                                           const RadialPotential& v, int M,
                                           RngStream& rng);

/// E[prod_i g(X_i)] under the latent mixture, with E[g(gamma_V(alpha))]
/// computed by 1-D quadrature; g is a polynomial in the squared radius
/// (g[d] multiplies x^d).
double latent_mixture_expectation(const LatentLaw& law, const RadialPotential& v,
                                  const std::vector<double>& g);

/// Three-way check of E[prod_i g(|z_i|^2)] for the beta = 2p ensemble:
/// exact latent mixture vs the conditional sampler vs Metropolis-Hastings.
struct ThreeWayReport {
  double exact = 0.0;
  double sampler_mean = 0.0, sampler_se = 0.0;
  double mcmc_mean = 0.0, mcmc_se = 0.0;
  bool sampler_pass = false;  // |exact - sampler| <= 3 se
  bool mcmc_pass = false;     // |exact - mcmc| <= 4 se (batch means)
  long sampler_n = 0, mcmc_n = 0;
};

ThreeWayReport verify_conditional_radii_against_mcmc(int N, int p,
                                                     const RadialPotential& v,
                                                     const std::vector<double>& g,
                                                     long samples, RngStream& rng,
                                                     long mcmc_steps = 400000);

}  // namespace powergin
