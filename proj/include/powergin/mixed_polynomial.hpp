// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <map>
#include <utility>

#include "powergin/rng.hpp"

namespace powergin {

/// Sparse mixed polynomial P(z, conj z): a map (a, b) -> coefficient for
/// the monomial z^a conj(z)^b. Zero coefficients are never stored. The
/// relative degree of a term is a - b.
class MixedPolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, std::complex<double>>;

  MixedPolynomial() = default;

  static MixedPolynomial one() { return monomial(0, 0, 1.0); }

  static MixedPolynomial monomial(int a, int b, std::complex<double> c) {
    MixedPolynomial p;
    p.add_term(a, b, c);
    return p;
  }

  void add_term(int a, int b, std::complex<double> c);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_a() const { return max_a_; }
  int max_b() const { return max_b_; }
  int max_total_degree() const;

  std::complex<double> evaluate(std::complex<double> z) const;

  /// P(z^M, conj(z)^M): every exponent pair is multiplied by M.
  MixedPolynomial compose_power(int M) const;

  MixedPolynomial operator+(const MixedPolynomial& o) const;
  MixedPolynomial operator*(const MixedPolynomial& o) const;
  MixedPolynomial& operator*=(std::complex<double> c);

 private:
  TermMap terms_;
  int max_a_ = 0, max_b_ = 0;
};

/// Random polynomial with exponents a, b <= max_deg and coefficients
/// uniform in the square [-1,1]^2; at least the constant term present.
MixedPolynomial random_mixed_polynomial(RngStream& rng, int max_deg,
                                        int max_terms = 6);

}  // namespace powergin
