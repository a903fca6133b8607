// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/moment_table.hpp"

#include <cmath>
#include <stdexcept>

#include "powergin/special.hpp"

namespace powergin {

MomentTable MomentTable::ginibre_unscaled() {
  return MomentTable(Kind::GinibreUnscaled, "ginibre-unscaled");
}

MomentTable MomentTable::cue() { return MomentTable(Kind::Cue, "cue"); }

MomentTable MomentTable::gue_unscaled() {
  return MomentTable(Kind::GueUnscaled, "gue-unscaled");
}

MomentTable MomentTable::radial(RadialPotential v) {
  MomentTable t(Kind::Radial, "radial-potential(" + v.name() + ")");
  t.potential_ = std::make_shared<RadialPotential>(std::move(v));
  return t;
}

MomentTable MomentTable::power_ginibre(int N, int M, int k) {
  MomentTable t(Kind::PowerGinibre,
                "power-ginibre(" + std::to_string(N) + "," + std::to_string(M) + "," +
                    std::to_string(k) + ")");
  t.N = N;
  t.M = M;
  t.k = k;
  return t;
}

const RadialPotential& MomentTable::potential() const {
  if (!potential_) throw std::logic_error("MomentTable: no potential attached");
  return *potential_;
}

LogComplex MomentTable::log_moment(int a, int b) const {
  if (a < 0 || b < 0) throw std::invalid_argument("MomentTable: negative exponent");
  switch (kind_) {
    case Kind::GinibreUnscaled:
    case Kind::PowerGinibre:
      if (a != b) return LogComplex::zero();
      return {log_factorial(a), 0.0};
    case Kind::Cue:
      return a == b ? LogComplex::one() : LogComplex::zero();
    case Kind::Radial: {
      if (a != b) return LogComplex::zero();
      const auto& v = potential();
      return {v.log_gamma_v(a + 1.0) - v.log_gamma_v(1.0), 0.0};
    }
    case Kind::GueUnscaled:
      throw std::logic_error("MomentTable: use line_moment for the line table");
  }
  throw std::logic_error("MomentTable: bad kind");
}

std::complex<double> MomentTable::moment(int a, int b) const {
  return log_moment(a, b).to_complex();
}

double MomentTable::line_moment(int n) const {
  if (kind_ != Kind::GueUnscaled)
    throw std::logic_error("MomentTable: line_moment only for gue-unscaled");
  if (n < 0) throw std::invalid_argument("MomentTable: negative exponent");
  if (n % 2 == 1) return 0.0;
  // (2m-1)!! = (2m)!/(2^m m!)
  const int m = n / 2;
  return std::exp(log_factorial(2 * m) - m * std::log(2.0) - log_factorial(m));
}

}  // namespace powergin
