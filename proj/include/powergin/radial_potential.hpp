// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <memory>
#include <string>

#include "powergin/rng.hpp"

namespace powergin {

/// Radial external potential V on R_+ together with its moment functional
///   Gamma_V(alpha) = int_0^inf t^(alpha-1) e^(-V(t)) dt.
/// The weight of the planar measure is e^(-V(|z|^2)).
class RadialPotential {
 public:
  RadialPotential(std::string name, std::function<double(double)> v,
                  std::function<double(double)> log_gamma_v,
                  std::function<bool(double)> moment_finite, double support_hi);

  const std::string& name() const { return name_; }

  /// V(t); may return +inf outside the support.
  double v(double t) const { return v_(t); }

  /// log Gamma_V(alpha); throws std::domain_error when the moment is infinite.
  double log_gamma_v(double alpha) const;

  bool moment_finite(double alpha) const { return moment_finite_(alpha); }

  /// Upper end of the weight's support (inf for unbounded weights); used
  /// as a quadrature hint.
  double support_hi() const { return support_hi_; }

  /// A finite quadrature cutoff such that the Gamma_V(alpha) tail beyond
  /// it is negligible.
  double quadrature_cutoff(double alpha) const;

  /// Gamma_V(alpha) by adaptive quadrature (used to validate closed forms).
  double gamma_v_by_quadrature(double alpha, double tol = 1e-11) const;

  /// E[g(X)] for X ~ gamma_V(alpha) by adaptive quadrature.
  double expectation(double alpha, const std::function<double(double)>& g,
                     double tol = 1e-10) const;

  /// Draw X ~ gamma_V(alpha). The quadratic potential uses the exact gamma
  /// sampler; other potentials go through a 4096-node inverse-CDF grid with
  /// monotone cubic interpolation.
  double sample(double alpha, RngStream& rng) const;

  static RadialPotential quadratic();
  /// Weight (1-t)^(n-1) on [0,1]; Gamma_V(alpha) = B(alpha, n).
  static RadialPotential truncated_unitary(int n);
  /// Weight (1+t)^(-(N+1)); moments finite only for alpha < N+1.
  static RadialPotential spherical(int N);
  /// Weight e^(-t/2) (matches the symmetric line weight e^(-x^2/2)).
  static RadialPotential quadratic_half();

  struct QuantileGrid;

 private:
  const QuantileGrid& quantile_grid(double alpha) const;

  std::string name_;
  std::function<double(double)> v_;
  std::function<double(double)> log_gamma_v_;
  std::function<bool(double)> moment_finite_;
  double support_hi_;
  mutable std::shared_ptr<void> grid_cache_;  // type-erased, lock-protected
};

}  // namespace powergin
