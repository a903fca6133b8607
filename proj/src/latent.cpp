// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/latent.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "powergin/mcmc.hpp"
#include "powergin/stats_tests.hpp"

namespace powergin {

LatentLaw latent_distribution(const LatentWeightTable& table, const RadialPotential& v) {
  LatentLaw law;
  law.support.reserve(table.coefficients.size());
  std::vector<double> logw;
  logw.reserve(table.coefficients.size());
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& [u, c] : table.coefficients) {
    double lw = 2.0 * std::log(std::abs(c.get_d()));
    // large coefficients: get_d() can overflow; fall back to mpz log2
    if (!std::isfinite(lw)) {
      signed long exp2;
      const double d = mpz_get_d_2exp(&exp2, c.get_mpz_t());
      lw = 2.0 * (std::log(std::abs(d)) + exp2 * std::numbers::ln2);
    }
    for (int ui : u) {
      if (!v.moment_finite(1.0 + ui))
        throw std::domain_error("latent_distribution: Gamma_V(" +
                                std::to_string(1 + ui) + ") is infinite");
      lw += v.log_gamma_v(1.0 + ui);
    }
    law.support.push_back(u);
    logw.push_back(lw);
    top = std::max(top, lw);
  }
  double total = 0.0;
  law.prob.resize(logw.size());
  for (std::size_t i = 0; i < logw.size(); ++i) {
    law.prob[i] = std::exp(logw[i] - top);
    total += law.prob[i];
  }
  for (auto& p : law.prob) p /= total;
  law.log_z = top + std::log(total);

  if (v.name() == "quadratic") {
    // exact integer normalization: sum K(u)^2 prod u_i!
    mpz_class z = 0;
    for (const auto& [u, c] : table.coefficients) {
      mpz_class term = c * c;
      for (int ui : u) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ui));
        term *= f;
      }
      z += term;
    }
    law.z_exact = z;
  }
  return law;
}

const std::vector<int>& sample_latent(const LatentLaw& law, RngStream& rng) {
  double pick = rng.uniform();
  for (std::size_t i = 0; i < law.prob.size(); ++i) {
    pick -= law.prob[i];
    if (pick <= 0.0) return law.support[i];
  }
  return law.support.back();
}

std::vector<double> sample_conditional_radii(const LatentLaw& law,
                                             const RadialPotential& v, RngStream& rng) {
  const auto& u = sample_latent(law, rng);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = v.sample(1.0 + u[i], rng);
  return out;
}

PointSample sample_conditional_high_powers(const LatentWeightTable& table,
                                           const LatentLaw& law,
                                           const RadialPotential& v, int M,
                                           RngStream& rng) {
  if (M < (table.N - 1) * table.p + 1)
    throw std::invalid_argument("sample_conditional_high_powers: requires M >= (N-1)p+1");
  const std::uint64_t seed = rng.seed();
  const auto radii = sample_conditional_radii(law, v, rng);
  PointSample s;
  s.points.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    s.points[i] = std::polar(std::pow(radii[i], 0.5 * M), theta);
  }
  s.ensemble = "conditional-high-powers";
  s.N = table.N;
  s.M = M;
  s.scaling = Scaling::Unscaled;
  s.seed = seed;
  return s;
}

double latent_mixture_expectation(const LatentLaw& law, const RadialPotential& v,
                                  const std::vector<double>& g) {
  auto poly = [&](double x) {
    double s = 0.0;
    for (std::size_t d = g.size(); d-- > 0;) s = s * x + g[d];
    return s;
  };
  std::map<int, double> cache;  // alpha-1 -> E[g(gamma_V(alpha))]
  double total = 0.0;
  for (std::size_t i = 0; i < law.support.size(); ++i) {
    double prod = 1.0;
    for (int ui : law.support[i]) {
      auto it = cache.find(ui);
      if (it == cache.end())
        it = cache.emplace(ui, v.expectation(1.0 + ui, poly)).first;
      prod *= it->second;
    }
    total += law.prob[i] * prod;
  }
  return total;
}

ThreeWayReport verify_conditional_radii_against_mcmc(int N, int p,
                                                     const RadialPotential& v,
                                                     const std::vector<double>& g,
                                                     long samples, RngStream& rng,
                                                     long mcmc_steps) {
  const LatentWeightTable table = expand_vandermonde_power(N, p);
  const LatentLaw law = latent_distribution(table, v);
  auto poly = [&](double x) {
    double s = 0.0;
    for (std::size_t d = g.size(); d-- > 0;) s = s * x + g[d];
    return s;
  };

  ThreeWayReport rep;
  rep.exact = latent_mixture_expectation(law, v, g);

  // conditional sampler
  {
    RngStream sub = rng.split(1);
    std::vector<double> vals;
    vals.reserve(samples);
    for (long t = 0; t < samples; ++t) {
      const auto r = sample_conditional_radii(law, v, sub);
      double prod = 1.0;
      for (double x : r) prod *= poly(x);
      vals.push_back(prod);
    }
    const auto ms = mean_se(vals);
    rep.sampler_mean = ms.mean;
    rep.sampler_se = ms.se;
    rep.sampler_n = samples;
    rep.sampler_pass = std::abs(rep.exact - ms.mean) <= 3.0 * ms.se;
  }

  // Metropolis-Hastings, batch-means errors over 20 batches
  {
    BetaEnsembleMcmc chain(N, p, v, rng.split(2));
    chain.burn_in(mcmc_steps / 2);
    const long keep = std::max<long>(400, mcmc_steps / (2 * N));
    std::vector<double> vals;
    vals.reserve(keep);
    for (long t = 0; t < keep; ++t) {
      const auto& z = chain.next_sample();
      double prod = 1.0;
      for (const auto& zi : z) prod *= poly(std::norm(zi));
      vals.push_back(prod);
    }
    const double rate = chain.acceptance_rate();
    if (rate < 0.05 || rate > 0.9)
      throw std::runtime_error("verify_conditional_radii_against_mcmc: MCMC acceptance " +
                               std::to_string(rate) + " outside [0.05, 0.9]");
    const auto bm = batch_means(vals, 20);
    rep.mcmc_mean = bm.mean;
    rep.mcmc_se = bm.se;
    rep.mcmc_n = keep;
    rep.mcmc_pass = std::abs(rep.exact - bm.mean) <= 4.0 * bm.se;
  }
  return rep;
}

}  // namespace powergin
