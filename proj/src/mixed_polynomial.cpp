// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/mixed_polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace powergin {

void MixedPolynomial::add_term(int a, int b, std::complex<double> c) {
  if (a < 0 || b < 0) throw std::invalid_argument("MixedPolynomial: negative exponent");
  if (c == std::complex<double>(0.0, 0.0)) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == std::complex<double>(0.0, 0.0)) {
      terms_.erase(it);
      if (a == max_a_ || b == max_b_) {
        max_a_ = max_b_ = 0;
        for (const auto& [e, coeff] : terms_) {
          max_a_ = std::max(max_a_, e.first);
          max_b_ = std::max(max_b_, e.second);
        }
      }
      return;
    }
  }
  max_a_ = std::max(max_a_, a);
  max_b_ = std::max(max_b_, b);
}

int MixedPolynomial::max_total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::complex<double> MixedPolynomial::evaluate(std::complex<double> z) const {
  const std::complex<double> zb = std::conj(z);
  std::complex<double> s(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> m = c;
    for (int i = 0; i < e.first; ++i) m *= z;
    for (int i = 0; i < e.second; ++i) m *= zb;
    s += m;
  }
  return s;
}

MixedPolynomial MixedPolynomial::compose_power(int M) const {
  if (M < 1) throw std::invalid_argument("compose_power: M must be >= 1");
  MixedPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e.first * M, e.second * M, c);
  return p;
}

MixedPolynomial MixedPolynomial::operator+(const MixedPolynomial& o) const {
  MixedPolynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e.first, e.second, c);
  return p;
}

MixedPolynomial MixedPolynomial::operator*(const MixedPolynomial& o) const {
  MixedPolynomial p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      p.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  return p;
}

MixedPolynomial& MixedPolynomial::operator*=(std::complex<double> c) {
  if (c == std::complex<double>(0.0, 0.0)) {
    *this = MixedPolynomial();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MixedPolynomial random_mixed_polynomial(RngStream& rng, int max_deg, int max_terms) {
  MixedPolynomial p;
  p.add_term(0, 0, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  const int extra = static_cast<int>(rng.uniform_int(max_terms));
  for (int t = 0; t < extra; ++t) {
    const int a = static_cast<int>(rng.uniform_int(max_deg + 1));
    const int b = static_cast<int>(rng.uniform_int(max_deg + 1));
    p.add_term(a, b, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  }
  return p;
}

}  // namespace powergin
