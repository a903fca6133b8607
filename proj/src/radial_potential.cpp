// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/radial_potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "powergin/quadrature.hpp"
#include "powergin/special.hpp"

namespace powergin {

namespace {
constexpr int kQuantileNodes = 4096;
}

struct RadialPotential::QuantileGrid {
  std::vector<double> t;    // abscissae
  std::vector<double> cdf;  // strictly increasing on the kept range
  std::vector<double> slope;  // PCHIP slopes of t as a function of cdf

  // Monotone cubic (Fritsch-Carlson) interpolation of the inverse CDF.
  double inverse(double u) const {
    if (u <= cdf.front()) return t.front();
    if (u >= cdf.back()) return t.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - cdf.begin()) - 1;
    const double h = cdf[i + 1] - cdf[i];
    const double s = (u - cdf[i]) / h;
    const double d = t[i + 1] - t[i];
    const double a = slope[i] * h - d;
    const double b = -slope[i + 1] * h + d;
    return t[i] + s * (d + (1.0 - s) * (a * (1.0 - s) + b * s));
  }
};

namespace {

using GridCache = std::pair<std::mutex, std::map<double, std::shared_ptr<RadialPotential::QuantileGrid>>>;

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> h(n - 1), delta(n - 1), m(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  return m;
}

}  // namespace

RadialPotential::RadialPotential(std::string name, std::function<double(double)> v,
                                 std::function<double(double)> log_gamma_v,
                                 std::function<bool(double)> moment_finite,
                                 double support_hi)
    : name_(std::move(name)),
      v_(std::move(v)),
      log_gamma_v_(std::move(log_gamma_v)),
      moment_finite_(std::move(moment_finite)),
      support_hi_(support_hi),
      grid_cache_(std::make_shared<GridCache>()) {}

double RadialPotential::log_gamma_v(double alpha) const {
  if (!moment_finite_(alpha))
    throw std::domain_error("RadialPotential(" + name_ + "): Gamma_V(" +
                            std::to_string(alpha) + ") is infinite");
  return log_gamma_v_(alpha);
}

double RadialPotential::quadrature_cutoff(double alpha) const {
  if (std::isfinite(support_hi_)) return support_hi_;
  // Walk outward until the integrand log drops 60 nats below its peak.
  double t_peak = std::max(alpha, 1.0);
  double best = (alpha - 1.0) * std::log(t_peak) - v_(t_peak);
  for (double t = t_peak; t < 1e9; t *= 1.2) {
    const double lg = (alpha - 1.0) * std::log(t) - v_(t);
    best = std::max(best, lg);
    if (lg < best - 60.0) return t;
  }
  return 1e9;
}

double RadialPotential::gamma_v_by_quadrature(double alpha, double tol) const {
  const double hi = quadrature_cutoff(alpha);
  const double log_norm = log_gamma_v(alpha);  // scale so the integrand is O(1)
  auto f = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double lg = (alpha - 1.0) * std::log(t) - v_(t) - log_norm;
    return std::exp(lg);
  };
  return std::exp(log_norm) * integrate_adaptive(f, 0.0, hi, tol);
}

double RadialPotential::expectation(double alpha,
                                    const std::function<double(double)>& g,
                                    double tol) const {
  const double hi = quadrature_cutoff(alpha);
  const double log_norm = log_gamma_v(alpha);
  auto f = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double lw = (alpha - 1.0) * std::log(t) - v_(t) - log_norm;
    return g(t) * std::exp(lw);
  };
  return integrate_adaptive(f, 0.0, hi, tol);
}

const RadialPotential::QuantileGrid& RadialPotential::quantile_grid(double alpha) const {
  auto* cache = static_cast<GridCache*>(grid_cache_.get());
  std::lock_guard<std::mutex> lock(cache->first);
  auto it = cache->second.find(alpha);
  if (it != cache->second.end()) return *it->second;

  auto grid = std::make_shared<QuantileGrid>();
  const double hi = quadrature_cutoff(alpha);
  const double log_norm = log_gamma_v(alpha);
  auto dens = [&](double t) {
    if (t <= 0.0) return 0.0;
    return std::exp((alpha - 1.0) * std::log(t) - v_(t) - log_norm);
  };
  std::vector<double> t(kQuantileNodes + 1), c(kQuantileNodes + 1);
  for (int i = 0; i <= kQuantileNodes; ++i) t[i] = hi * i / kQuantileNodes;
  c[0] = 0.0;
  for (int i = 1; i <= kQuantileNodes; ++i)
    c[i] = c[i - 1] + integrate_gl(dens, t[i - 1], t[i], 15);
  // normalize and strip any flat tail so the cdf is strictly increasing
  const double total = c[kQuantileNodes];
  for (auto& x : c) x /= total;
  std::vector<double> tk, ck;
  tk.push_back(t[0]);
  ck.push_back(c[0]);
  for (int i = 1; i <= kQuantileNodes; ++i) {
    if (c[i] > ck.back()) {
      tk.push_back(t[i]);
      ck.push_back(c[i]);
    }
  }
  grid->t = std::move(tk);
  grid->cdf = std::move(ck);
  grid->slope = pchip_slopes(grid->cdf, grid->t);
  auto [ins, ok] = cache->second.emplace(alpha, std::move(grid));
  return *ins->second;
}

double RadialPotential::sample(double alpha, RngStream& rng) const {
  if (!moment_finite_(alpha))
    throw std::domain_error("RadialPotential(" + name_ + "): cannot sample, infinite mass");
  if (name_ == "quadratic") return rng.gamma(alpha);
  if (name_ == "quadratic-half") return 2.0 * rng.gamma(alpha);
  const auto& grid = quantile_grid(alpha);
  return grid.inverse(rng.uniform());
}

RadialPotential RadialPotential::quadratic() {
  return RadialPotential(
      "quadratic", [](double t) { return t; },
      [](double alpha) { return log_gamma(alpha); },
      [](double alpha) { return alpha > 0.0; },
      std::numeric_limits<double>::infinity());
}

RadialPotential RadialPotential::quadratic_half() {
  return RadialPotential(
      "quadratic-half", [](double t) { return 0.5 * t; },
      [](double alpha) { return alpha * std::log(2.0) + log_gamma(alpha); },
      [](double alpha) { return alpha > 0.0; },
      std::numeric_limits<double>::infinity());
}

RadialPotential RadialPotential::truncated_unitary(int n) {
  if (n < 1) throw std::invalid_argument("truncated_unitary: n must be >= 1");
  return RadialPotential(
      "truncated-unitary(" + std::to_string(n) + ")",
      [n](double t) {
        if (t < 0.0 || t >= 1.0) return std::numeric_limits<double>::infinity();
        return -(n - 1) * std::log1p(-t);
      },
      [n](double alpha) {
        // B(alpha, n)
        return log_gamma(alpha) + log_gamma(n) - log_gamma(alpha + n);
      },
      [](double alpha) { return alpha > 0.0; }, 1.0);
}

RadialPotential RadialPotential::spherical(int N) {
  if (N < 1) throw std::invalid_argument("spherical: N must be >= 1");
  return RadialPotential(
      "spherical(" + std::to_string(N) + ")",
      [N](double t) {
        if (t < 0.0) return std::numeric_limits<double>::infinity();
        return (N + 1) * std::log1p(t);
      },
      [N](double alpha) {
        // B(alpha, N+1-alpha), finite for 0 < alpha < N+1
        return log_gamma(alpha) + log_gamma(N + 1 - alpha) - log_gamma(N + 1);
      },
      [N](double alpha) { return alpha > 0.0 && alpha < N + 1.0; },
      std::numeric_limits<double>::infinity());
}

}  // namespace powergin
