// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "oracles.hpp"
#include "powergin/determinant.hpp"
#include "powergin/log_complex.hpp"
#include "powergin/progression.hpp"
#include "powergin/rng.hpp"
#include "powergin/special.hpp"

using namespace powergin;

namespace {

CMatrix random_matrix(std::size_t n, RngStream& rng) {
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = std::polar(rng.uniform(0.0, 1.0), rng.uniform(-3.14, 3.14));
  return a;
}

}  // namespace

TEST_CASE("LogComplex round trip and multiplication") {
  RngStream rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const cd z = std::polar(std::exp(rng.uniform(-250.0, 250.0)),
                            rng.uniform(-3.1415, 3.1415));
    const LogComplex lz = LogComplex::from_complex(z);
    CHECK(std::abs(lz.to_complex() - z) <= 1e-12 * std::abs(z));
  }
  const LogComplex a{2.0, 3.0}, b{1.5, 1.0};
  const LogComplex ab = a * b;
  CHECK(ab.log_modulus == doctest::Approx(3.5));
  // 4.0 wraps into (-pi, pi]
  CHECK(ab.phase == doctest::Approx(4.0 - 2.0 * std::numbers::pi));
  CHECK(LogComplex::zero().is_zero());
  CHECK((a * LogComplex::zero()).is_zero());
}

TEST_CASE("ProgressionIndex definition, partition and cardinality") {
  const ProgressionIndex idx(10, 3, 2);
  CHECK(idx.indices == std::vector<int>{2, 5, 8});
  CHECK(idx.cardinality() == ProgressionIndex::cardinality_of(10, 3, 2));

  // the known off-by-one case of the ceiling formula
  CHECK(ProgressionIndex(4, 2, 2).cardinality() == 2);
  CHECK(ProgressionIndex::cardinality_of(4, 2, 2) == 2);

  for (int N = 1; N <= 100; ++N)
    for (int M = 1; M <= N; ++M) {
      int total = 0;
      for (int k = 1; k <= M; ++k) {
        const ProgressionIndex p(N, M, k);
        CHECK(p.cardinality() == ProgressionIndex::cardinality_of(N, M, k));
        for (int i : p.indices) CHECK((i - k) % M == 0);
        total += p.cardinality();
      }
      CHECK(total == N);
    }
  CHECK_THROWS_AS(ProgressionIndex(5, 2, 3), std::invalid_argument);
}

TEST_CASE("partial_exp_sum special cases") {
  CHECK(partial_exp_sum(1, 1, cd(1.0, 0.0)).real() ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(partial_exp_sum(2, 1, cd(0.7, 0.0)).real() ==
        doctest::Approx(std::cosh(0.7)).epsilon(1e-13));
  CHECK(partial_exp_sum(2, 2, cd(0.7, 0.0)).real() ==
        doctest::Approx(std::sinh(0.7)).epsilon(1e-13));

  // e_{3,2}(1.3) against the root-of-unity average evaluated by hand
  const cd x(1.3, 0.0);
  cd rhs(0.0, 0.0);
  for (int l = 1; l <= 3; ++l) {
    const double ang = 2.0 * std::numbers::pi * (l - 1) / 3.0;
    rhs += std::polar(1.0, -ang) * std::exp(std::polar(1.0, ang) * x);
  }
  rhs /= 3.0;
  CHECK(std::abs(partial_exp_sum(3, 2, x) - rhs) <= 1e-12);

  // finite truncation matches term-by-term summation
  const cd y(0.4, 1.1);
  cd direct(0.0, 0.0);
  for (int j = 0; j < 4; ++j) {
    cd t(1.0, 0.0);
    const int e = 3 * j + 1;
    for (int q = 1; q <= e; ++q) t *= y / static_cast<double>(q);
    direct += t;
  }
  CHECK(std::abs(partial_exp_sum(3, 2, y, 4) - direct) <= 1e-14);

  CHECK_THROWS_AS(partial_exp_sum(3, 4, cd(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(partial_exp_sum(2, 1, cd(1.0 / 0.0, 0.0)), std::domain_error);
}

TEST_CASE("roots_of_unity_filter equals the series") {
  CHECK(std::abs(roots_of_unity_filter(1, 1, cd(0.3, 0.4)) -
                 std::exp(cd(0.3, 0.4))) <= 1e-14);
  CHECK(std::abs(roots_of_unity_filter(4, 3, cd(2.1, 0.0)) -
                 partial_exp_sum(4, 3, cd(2.1, 0.0))) <= 1e-12);
  CHECK(roots_of_unity_filter(2, 1, cd(0.0, std::numbers::pi)).real() ==
        doctest::Approx(-1.0).epsilon(1e-12));

  // independent of which primitive root is used
  RngStream rng(11);
  for (int M = 2; M <= 6; ++M)
    for (int k = 1; k <= M; ++k) {
      const cd x(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
      const cd base = roots_of_unity_filter(M, k, x, 1);
      for (int j = 2; j < M; ++j) {
        if (std::gcd(j, M) != 1) continue;
        CHECK(std::abs(roots_of_unity_filter(M, k, x, j) - base) <=
              1e-11 * std::max(1.0, std::abs(base)));
      }
    }
}

TEST_CASE("partial sums over a full period reassemble the exponential") {
  // The identity holds at 1e-11 relative where the sum is well
  // conditioned; for Re(x) far below |x| the summands reach e^|x| while
  // the target is e^Re(x), so only a roundoff-proportional absolute bound
  // is meaningful in doubles.
  RngStream rng(13);
  for (int M = 1; M <= 6; ++M)
    for (int rep = 0; rep < 20; ++rep) {
      const cd x = std::polar(rng.uniform(0.0, 30.0), rng.uniform(-3.14, 3.14));
      cd total(0.0, 0.0);
      for (int k = 1; k <= M; ++k) total += partial_exp_sum(M, k, x);
      const cd want = std::exp(x);
      if (std::abs(x) - x.real() <= 10.0) {
        CHECK(std::abs(total - want) <= 1e-11 * std::abs(want));
      }
      CHECK(std::abs(total - want) <= 1e-13 * std::exp(std::abs(x)));
    }
}

TEST_CASE("log_det on simple and random matrices") {
  CHECK(log_det(CMatrix::identity(5)).log_modulus == doctest::Approx(0.0));
  CHECK(log_det(CMatrix::identity(5)).phase == doctest::Approx(0.0));

  CMatrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = cd(0.0, 3.0);
  const LogComplex ld = log_det(d);
  CHECK(ld.log_modulus == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  CHECK(ld.phase == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));

  RngStream rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rng.uniform_int(5);  // up to 6 for the oracle
    const CMatrix a = random_matrix(n, rng);
    const cd want = oracles::cofactor_det(a);
    const cd got = log_det(a).to_complex();
    CHECK(std::abs(got - want) <= 1e-10 * std::max(1e-12, std::abs(want)));
  }

  // exact singularity: duplicated row
  CMatrix s(3, 3);
  for (int j = 0; j < 3; ++j) {
    s(0, j) = cd(j + 1.0, 1.0);
    s(1, j) = cd(j + 1.0, 1.0);
    s(2, j) = cd(1.0, j - 1.0);
  }
  CHECK(log_det(s).is_zero());
}

TEST_CASE("log_det is multiplicative") {
  RngStream rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const CMatrix a = random_matrix(6, rng);
    const CMatrix b = random_matrix(6, rng);
    const LogComplex lab = log_det(a * b);
    const LogComplex sum = log_det(a) * log_det(b);
    CHECK(lab.log_modulus == doctest::Approx(sum.log_modulus).epsilon(1e-9));
    CHECK(std::abs(LogComplex::wrap_phase(lab.phase - sum.phase)) <= 1e-9);
  }
}

TEST_CASE("striped determinants factor over the progressions") {
  // 2x2 diagonal
  CMatrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 5.0;
  CHECK(striped_det(d, 2).log_modulus == doctest::Approx(std::log(15.0)));

  RngStream rng(17);
  auto random_striped = [&](std::size_t n, int M) {
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((i % M) == (j % M))
          a(i, j) = std::polar(rng.uniform(0.1, 1.0), rng.uniform(-3.0, 3.0));
    return a;
  };

  // N=5, M=2 example
  {
    const CMatrix a = random_striped(5, 2);
    const LogComplex s = striped_det(a, 2);
    const LogComplex full = log_det(a);
    CHECK(s.log_modulus == doctest::Approx(full.log_modulus).epsilon(1e-10));
    CHECK(std::abs(LogComplex::wrap_phase(s.phase - full.phase)) <= 1e-8);
  }

  // N=6, M=3: blocks are three 2x2 determinants
  {
    const CMatrix a = random_striped(6, 3);
    LogComplex prod = LogComplex::one();
    for (int k = 0; k < 3; ++k) {
      CMatrix blk(2, 2);
      blk(0, 0) = a(k, k);
      blk(0, 1) = a(k, k + 3);
      blk(1, 0) = a(k + 3, k);
      blk(1, 1) = a(k + 3, k + 3);
      prod *= log_det(blk);
    }
    const LogComplex s = striped_det(a, 3);
    CHECK(s.log_modulus == doctest::Approx(prod.log_modulus).epsilon(1e-10));
    CHECK(std::abs(LogComplex::wrap_phase(s.phase - prod.phase)) <= 1e-8);
  }

  // 200 random cases
  for (int rep = 0; rep < 200; ++rep) {
    const int M = 1 + static_cast<int>(rng.uniform_int(4));
    const std::size_t n = M + rng.uniform_int(12 - M + 1);
    const CMatrix a = random_striped(n, M);
    const LogComplex s = striped_det(a, M);
    const LogComplex full = log_det(a);
    CHECK(s.log_modulus == doctest::Approx(full.log_modulus).epsilon(1e-10));
    CHECK(std::abs(LogComplex::wrap_phase(s.phase - full.phase)) <= 1e-8);
  }

  CMatrix bad(4, 4);
  bad(0, 1) = 1.0;
  bad(0, 0) = bad(1, 1) = bad(2, 2) = bad(3, 3) = 1.0;
  CHECK_THROWS_AS(striped_det(bad, 2), std::invalid_argument);
}

TEST_CASE("log_gamma and log_factorial") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));

  // recursion from Gamma(0.5) up to 7.5
  double acc = 0.5 * std::log(std::numbers::pi);
  for (double x = 0.5; x < 7.4; x += 1.0) acc += std::log(x);
  CHECK(log_gamma(7.5) == doctest::Approx(acc).epsilon(1e-12));

  double f = 1.0;
  for (long n = 1; n <= 20; ++n) {
    f *= n;
    CHECK(log_factorial(n) == doctest::Approx(std::log(f)).epsilon(1e-13));
  }
  CHECK(log_factorial(0) == 0.0);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}
