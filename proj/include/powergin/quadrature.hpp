// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace powergin {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(int n);
};

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order = 31);

/// Adaptive bisection with Gauss-Legendre panels. tol is on the absolute
/// error relative to max(1, |integral|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 40);

/// Adaptive integration of [0, b] through dyadic panels [0,1], [1,2],
/// [2,4], ...: keeps narrow mass near the origin visible when b is huge
/// (heavy-tailed weights).
double integrate_adaptive_dyadic(const std::function<double(double)>& f, double b,
                                 double tol = 1e-10);

/// Integral over the complex plane of f against Lebesgue measure, for a
/// radially smooth but angularly oscillatory integrand: adaptive
/// Gauss-Legendre in radius times a 256-node trapezoid rule in angle,
/// radius truncated at r_max.
double integrate_disk(const std::function<double(std::complex<double>)>& f,
                      double r_max, double tol = 1e-10, int angular_nodes = 256);

std::complex<double> integrate_disk_complex(
    const std::function<std::complex<double>(std::complex<double>)>& f, double r_max,
    double tol = 1e-10, int angular_nodes = 256);

}  // namespace powergin
