// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>

#include "powergin/log_complex.hpp"
#include "powergin/radial_potential.hpp"

namespace powergin {

/// Ensemble moment tables m(a,b) = int z^a conj(z)^b d mu for the base
/// measures of the Andreief engine. All tables here are rotation
/// invariant, so m(a,b) = 0 off the diagonal. Values are pure closed
/// forms (safe to read from any thread).
///
///   ginibre-unscaled : d mu = pi^-1 e^(-|z|^2) dm,        m(a,a) = a!
///   cue              : uniform measure on the circle,     m(a,a) = 1
///   gue-unscaled     : weight e^(-x^2/2)/sqrt(2 pi) on R, m(2n) = (2n-1)!!
///   radial(V)        : d mu = pi^-1 e^(-V(|z|^2)) dm / Gamma_V(1),
///                      m(a,a) = Gamma_V(a+1)/Gamma_V(1)
///   power-ginibre    : the Gaussian base measure of the block engine
///                      (same moments as ginibre-unscaled; carries N,M,k)
class MomentTable {
 public:
  enum class Kind { GinibreUnscaled, Cue, GueUnscaled, Radial, PowerGinibre };

  static MomentTable ginibre_unscaled();
  static MomentTable cue();
  static MomentTable gue_unscaled();
  static MomentTable radial(RadialPotential v);
  static MomentTable power_ginibre(int N, int M, int k);

  Kind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }
  const RadialPotential& potential() const;

  /// m(a,b); may overflow double for very large a (use log_moment then).
  std::complex<double> moment(int a, int b) const;

  /// Log-domain m(a,b) (zero off the diagonal for the planar tables).
  LogComplex log_moment(int a, int b) const;

  /// 1-D moment int x^n d mu for the line table (normalized weight).
  double line_moment(int n) const;

  int N = 0, M = 1, k = 1;  // meaningful for the power-ginibre tag only

 private:
  MomentTable(Kind kind, std::string tag) : kind_(kind), tag_(std::move(tag)) {}
  Kind kind_;
  std::string tag_;
  std::shared_ptr<RadialPotential> potential_;
};

}  // namespace powergin
