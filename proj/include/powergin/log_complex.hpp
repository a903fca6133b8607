// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace powergin {

/// A complex number stored as (log|w|, arg w) with arg in (-pi, pi].
/// Exact zero (e.g. a singular determinant) is the distinguished value
/// log_modulus == -inf; it is not an error state.
struct LogComplex {
  double log_modulus = 0.0;
  double phase = 0.0;

  static LogComplex one() { return {0.0, 0.0}; }

  static LogComplex zero() {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }

  static double wrap_phase(double p) {
    p = std::remainder(p, 2.0 * std::numbers::pi);
    if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
    return p;
  }

  static LogComplex from_complex(std::complex<double> w) {
    if (w == std::complex<double>(0.0, 0.0)) return zero();
    return {std::log(std::abs(w)), wrap_phase(std::arg(w))};
  }

  static LogComplex from_real(double x) {
    if (x == 0.0) return zero();
    return {std::log(std::abs(x)), x > 0 ? 0.0 : std::numbers::pi};
  }

  bool is_zero() const {
    return std::isinf(log_modulus) && log_modulus < 0.0;
  }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_modulus), phase);
  }

  LogComplex& operator*=(const LogComplex& o) {
    if (is_zero() || o.is_zero()) {
      *this = zero();
      return *this;
    }
    log_modulus += o.log_modulus;
    phase = wrap_phase(phase + o.phase);
    return *this;
  }

  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }

  LogComplex& operator/=(const LogComplex& o) {
    log_modulus -= o.log_modulus;
    phase = wrap_phase(phase - o.phase);
    return *this;
  }

  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }
};

/// Sum of log-domain values: the largest modulus is factored out, the
/// rest is accumulated in ordinary arithmetic.
inline LogComplex log_sum(const std::vector<LogComplex>& terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_modulus);
  if (std::isinf(top) && top < 0.0) return LogComplex::zero();
  std::complex<double> s(0.0, 0.0);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    s += std::polar(std::exp(t.log_modulus - top), t.phase);
  }
  if (s == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
  return {top + std::log(std::abs(s)), LogComplex::wrap_phase(std::arg(s))};
}

}  // namespace powergin
