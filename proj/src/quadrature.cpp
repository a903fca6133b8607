// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace powergin {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n from the Chebyshev initial guess.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

const GaussLegendre& cached_gl(int n) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, int order) {
  const auto& gl = cached_gl(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    s += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double tol, int depth, int max_depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl_panel(f, a, mid, 15);
  const double right = gl_panel(f, mid, b, 15);
  const double err = std::abs(left + right - whole);
  if (err < tol || depth >= max_depth) return left + right;
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
  return gl_panel(f, a, b, order);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  if (!(b > a)) return 0.0;
  const double whole = gl_panel(f, a, b, 15);
  const double scale = std::max(1.0, std::abs(whole));
  return adapt(f, a, b, whole, tol * scale, 0, max_depth);
}

double integrate_adaptive_dyadic(const std::function<double(double)>& f, double b,
                                 double tol) {
  if (b <= 2.0) return integrate_adaptive(f, 0.0, b, tol);
  double total = integrate_adaptive(f, 0.0, 1.0, tol);
  double lo = 1.0;
  while (lo < b) {
    const double hi = std::min(2.0 * lo, b);
    total += integrate_adaptive(f, lo, hi, tol);
    lo = hi;
  }
  return total;
}

double integrate_disk(const std::function<double(std::complex<double>)>& f,
                      double r_max, double tol, int angular_nodes) {
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  auto radial = [&](double r) {
    double s = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
      const double th = j * dtheta;
      s += f(std::polar(r, th));
    }
    return s * dtheta * r;
  };
  return integrate_adaptive(radial, 0.0, r_max, tol);
}

std::complex<double> integrate_disk_complex(
    const std::function<std::complex<double>(std::complex<double>)>& f, double r_max,
    double tol, int angular_nodes) {
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  auto radial_re = [&](double r) {
    double s = 0.0;
    for (int j = 0; j < angular_nodes; ++j) s += f(std::polar(r, j * dtheta)).real();
    return s * dtheta * r;
  };
  auto radial_im = [&](double r) {
    double s = 0.0;
    for (int j = 0; j < angular_nodes; ++j) s += f(std::polar(r, j * dtheta)).imag();
    return s * dtheta * r;
  };
  return {integrate_adaptive(radial_re, 0.0, r_max, tol),
          integrate_adaptive(radial_im, 0.0, r_max, tol)};
}

}  // namespace powergin
