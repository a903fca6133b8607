// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "powergin/determinant.hpp"
#include "powergin/dpp.hpp"
#include "powergin/eigen.hpp"
#include "powergin/exact_stats.hpp"
#include "powergin/latent.hpp"
#include "powergin/mcmc.hpp"
#include "powergin/samplers.hpp"
#include "powergin/stats_tests.hpp"

using namespace powergin;

TEST_CASE("counter-based stream reproducibility and splitting") {
  RngStream a(987654321), b(987654321);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream base(42);
  RngStream c1 = base.split(1), c2 = base.split(2), c1b = RngStream(42).split(1);
  bool all_equal = true;
  for (int i = 0; i < 100; ++i) {
    const auto x = c1.next_u64();
    const auto y = c2.next_u64();
    all_equal = all_equal && (x == y);
    CHECK(x == c1b.next_u64());
  }
  CHECK(!all_equal);

  // frozen values lock the stream against accidental change
  RngStream f(0);
  CHECK(f.next_u64() == 0xe169c58d6627e8d5ull);
}

TEST_CASE("variate generators match their moments") {
  RngStream rng(31);
  const long n = 200000;
  {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.gamma(3.7);
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 3.7) <= 4.0 * ms.se);
    CHECK(sample_variance(v) == doctest::Approx(3.7).epsilon(0.05));
  }
  {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.gamma(0.4);  // boost path
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 0.4) <= 4.0 * ms.se);
  }
  {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.beta(2.0, 5.0);
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 2.0 / 7.0) <= 4.0 * ms.se);
  }
  {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.chi_squared(3.0);
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 3.0) <= 4.0 * ms.se);
  }
  {
    std::vector<double> v(n);
    for (auto& x : v) x = std::norm(rng.complex_normal());
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 1.0) <= 4.0 * ms.se);
  }
}

TEST_CASE("general eigensolver against structural oracles") {
  RngStream rng(33);

  // fixed diagonal matrix
  CMatrix d(4, 4);
  d(0, 0) = cd(1.0, 2.0);
  d(1, 1) = cd(-3.0, 0.5);
  d(2, 2) = cd(0.0, -1.0);
  d(3, 3) = cd(2.5, 0.0);
  auto ev = eigenvalues(d);
  std::sort(ev.begin(), ev.end(),
            [](cd a, cd b) { return a.real() < b.real(); });
  CHECK(std::abs(ev[0] - cd(-3.0, 0.5)) <= 1e-12);
  CHECK(std::abs(ev[3] - cd(2.5, 0.0)) <= 1e-12);

  // trace and determinant identities on random matrices
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 3 + rng.uniform_int(30);
    CMatrix a(n, n);
    cd tr(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    for (std::size_t i = 0; i < n; ++i) tr += a(i, i);
    const auto eig = eigenvalues(a);
    cd sum(0.0, 0.0);
    LogComplex prod = LogComplex::one();
    for (const auto& e : eig) {
      sum += e;
      prod *= LogComplex::from_complex(e);
    }
    const LogComplex det = log_det(a);
    CHECK(std::abs(sum - tr) <= 1e-10 * std::max(1.0, std::abs(tr)) * n);
    CHECK(prod.log_modulus == doctest::Approx(det.log_modulus).epsilon(1e-8));
  }
}

TEST_CASE("Hermitian eigensolver is real and consistent") {
  RngStream rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng.uniform_int(20));
    CMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
      h(i, i) = rng.normal();
      for (int j = i + 1; j < n; ++j) {
        const cd z = rng.complex_normal();
        h(i, j) = z;
        h(j, i) = std::conj(z);
      }
    }
    const auto ev = eigenvalues_hermitian(h);
    double tr = 0.0, tr2 = 0.0;
    for (int i = 0; i < n; ++i) {
      tr += h(i, i).real();
      for (int j = 0; j < n; ++j) tr2 += std::norm(h(i, j));
    }
    double sum = 0.0, sum2 = 0.0;
    for (double x : ev) {
      sum += x;
      sum2 += x * x;
    }
    CHECK(sum == doctest::Approx(tr).epsilon(1e-9));
    CHECK(sum2 == doctest::Approx(tr2).epsilon(1e-9));
    CHECK(std::is_sorted(ev.begin(), ev.end()));
  }
}

TEST_CASE("Ginibre sampler and Kostlan radii") {
  RngStream rng(41);
  {
    std::vector<double> v(100000);
    for (auto& x : v) x = std::norm(sample_ginibre(1, rng).points[0]);
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 1.0) <= 3.0 * ms.se);
  }
  {
    std::vector<double> v(50000);
    for (auto& x : v) {
      const PointSample s = sample_ginibre(2, rng);
      x = 2.0 * (std::norm(s.points[0]) + std::norm(s.points[1]));
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 3.0) <= 3.0 * ms.se);
  }
  {
    // sorted-sum mean of the gamma set
    RngStream r2(43);
    const int N = 6;
    std::vector<double> v(50000);
    for (auto& x : v) {
      double s = 0.0;
      for (double g : sample_kostlan_radii(N, r2)) s += g;
      x = s;
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - N * (N + 1) / 2.0) <= 3.0 * ms.se);
  }
  {
    // KS at N = 4 over pooled sets
    RngStream rg(47), rk(53);
    std::vector<double> a, b;
    for (int t = 0; t < 4000; ++t) {
      for (const auto& z : sample_ginibre(4, rg).points) a.push_back(4.0 * std::norm(z));
      for (double g : sample_kostlan_radii(4, rk)) b.push_back(g);
    }
    CHECK(ks_two_sample(a, b).p_value > 1e-3);
  }
  CHECK_THROWS_AS(sample_ginibre(1000, rng), std::invalid_argument);
}

TEST_CASE("high-power sampler marginals") {
  RngStream rng(59);
  const int N = 3, M = 4;
  std::vector<double> radius_pow(60000);
  std::vector<double> pair_corr(20000);
  for (std::size_t t = 0; t < radius_pow.size(); ++t) {
    const PointSample s = sample_high_powers(N, M, rng);
    radius_pow[t] = std::pow(std::norm(s.points[0]), 1.0 / M);  // back to gamma scale
  }
  // the first point's modulus^2 is gamma(k)^M for some k in 1..N -- the
  // sampler stores them in order, so index 0 is gamma(1) = Exp(1)
  const auto ks = ks_one_sample(radius_pow, [](double t) { return 1.0 - std::exp(-t); });
  CHECK(ks.p_value > 1e-3);

  RngStream rng2(61);
  for (auto& x : pair_corr) {
    const PointSample s = sample_high_powers(N, M, rng2);
    cd sum(0.0, 0.0);
    for (const auto& z : s.points) sum += z / std::abs(z);
    x = (std::norm(sum) - N) / (N * (N - 1.0));
  }
  const MeanSe ms = mean_se(pair_corr);
  CHECK(std::abs(ms.mean) <= 3.0 * ms.se);
  CHECK_THROWS_AS(sample_high_powers(4, 3, rng), std::invalid_argument);

  // N=1, M=1 is a standard complex Gaussian: |z|^2 ~ Exp(1)
  RngStream rng3(67);
  std::vector<double> sq(50000);
  for (auto& x : sq) x = std::norm(sample_high_powers(1, 1, rng3).points[0]);
  CHECK(ks_one_sample(sq, [](double t) { return 1.0 - std::exp(-t); }).p_value > 1e-3);
}

TEST_CASE("Haar unitary eigenvalues") {
  RngStream rng(71);
  for (int rep = 0; rep < 50; ++rep) {
    const PointSample s = sample_cue(6, rng);
    for (const auto& z : s.points) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);
  }
  // E[prod(2 + 2 cos theta)] against the Toeplitz value
  LaurentPolynomial g;
  g[0] = 2.0;
  g[1] = 1.0;
  g[-1] = 1.0;
  const double exact = cue_product_stat(4, g).real();
  std::vector<double> vals(20000);
  for (auto& x : vals) {
    const PointSample s = sample_cue(4, rng);
    double prod = 1.0;
    for (const auto& z : s.points) prod *= 2.0 + 2.0 * z.real();
    x = prod;
  }
  const MeanSe ms = mean_se(vals);
  CHECK(std::abs(ms.mean - exact) <= 3.0 * ms.se);

  // N = 1: uniform phase
  RngStream rng2(73);
  std::vector<double> phases(20000);
  for (auto& x : phases)
    x = std::arg(sample_cue(1, rng2).points[0]) / (2.0 * std::numbers::pi) + 0.5;
  CHECK(ks_one_sample(phases, [](double t) { return std::clamp(t, 0.0, 1.0); }).p_value >
        1e-3);
}

TEST_CASE("line-ensemble sampler") {
  RngStream rng(79);
  {
    std::vector<double> v(50000);
    for (auto& x : v) x = sample_gue(1, rng)[0];
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean) <= 3.0 * ms.se);
    CHECK(sample_variance(v) == doctest::Approx(1.0).epsilon(0.05));
  }
  {
    // E[prod lambda^2] at N = 3 against the closed form
    std::vector<double> v(100000);
    for (auto& x : v) {
      const auto ev = sample_gue(3, rng);
      x = ev[0] * ev[0] * ev[1] * ev[1] * ev[2] * ev[2];
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - gue_det_moment(3, 1)) <= 3.0 * ms.se);
  }
  {
    // E[sum lambda^2] = N^2
    std::vector<double> v(20000);
    for (auto& x : v) {
      double s = 0.0;
      for (double e : sample_gue(4, rng)) s += e * e;
      x = s;
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 16.0) <= 3.0 * ms.se);
  }
}

TEST_CASE("truncated unitary minor") {
  RngStream rng(83);
  const int n = 3;
  std::vector<double> beta_like(4000);
  for (auto& x : beta_like) {
    const PointSample s = sample_truncated_unitary(1, n, rng);
    CHECK(std::abs(s.points[0]) < 1.0);
    x = std::norm(s.points[0]);
  }
  // |z|^2 ~ Beta(1, n)
  CHECK(ks_one_sample(beta_like, [&](double t) {
          return 1.0 - std::pow(1.0 - std::clamp(t, 0.0, 1.0), n);
        }).p_value > 1e-3);
}

TEST_CASE("spherical ensemble ratios") {
  RngStream rng(89);
  std::vector<double> u(4000);
  for (auto& x : u) {
    const PointSample s = sample_spherical(1, rng);
    const double r2 = std::norm(s.points[0]);
    x = r2 / (1.0 + r2);
  }
  CHECK(ks_one_sample(u, [](double t) { return std::clamp(t, 0.0, 1.0); }).p_value >
        1e-3);

  // median |lambda| is stable across seeds
  auto median_of = [](std::uint64_t seed) {
    RngStream r(seed);
    std::vector<double> v(2000);
    for (auto& x : v) x = std::abs(sample_spherical(2, r).points[0]);
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  const double m1 = median_of(1), m2 = median_of(2);
  CHECK(std::abs(m1 - m2) <= 0.1 * std::max(m1, m2));
}

TEST_CASE("products of Gaussian matrices: radii against the gamma-product law") {
  RngStream rng(97), rng2(101);
  const int N = 4, m = 2;
  std::vector<double> a, b;
  for (int t = 0; t < 3000; ++t) {
    for (const auto& z : sample_ginibre_product(N, m, rng).points)
      a.push_back(std::norm(z));
    for (double g : sample_gamma_product_radii(N, m, rng2)) b.push_back(g);
  }
  CHECK(ks_two_sample(a, b).p_value > 1e-3);

  const MeanSe ma = mean_se(a), mb = mean_se(b);
  CHECK(std::abs(ma.mean - mb.mean) <= 3.0 * std::sqrt(ma.se * ma.se + mb.se * mb.se));

  // m = 1 reduces to the unscaled Gaussian ensemble: E sum |z|^2 = N(N+1)/2
  RngStream rng3(103);
  std::vector<double> v(5000);
  for (auto& x : v) {
    double s = 0.0;
    for (const auto& z : sample_ginibre_product(3, 1, rng3).points) s += std::norm(z);
    x = s;
  }
  const MeanSe ms = mean_se(v);
  CHECK(std::abs(ms.mean - 6.0) <= 3.0 * ms.se);
}

TEST_CASE("characteristic-polynomial product sampler") {
  RngStream rng(107);
  {
    std::vector<double> v(100000);
    for (auto& x : v) x = std::norm(sample_bhny_charpoly(1, rng));
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - 2.0) <= 3.0 * ms.se);
  }
  {
    std::vector<double> v(200000);
    for (auto& x : v) {
      const cd z = sample_bhny_charpoly(2, rng);
      CHECK(std::abs(z) <= 4.0 + 1e-12);  // |Z| <= 2^N
      x = std::norm(z);
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - cue_charpoly_moment(2, 1, 1).product_formula) <=
          3.0 * ms.se);
  }
}

TEST_CASE("determinant samplers for the line ensemble") {
  RngStream rng(109);
  const long n = 200000;
  {
    // chi product: matches the closed-form second and fourth moments
    std::vector<double> v2(n), v4(n), v1(n);
    for (long t = 0; t < n; ++t) {
      const double d = sample_gue_det(3, rng);
      v1[t] = d;
      v2[t] = d * d;
      v4[t] = d * d * d * d;
    }
    const MeanSe m1 = mean_se(v1), m2 = mean_se(v2), m4 = mean_se(v4);
    CHECK(std::abs(m1.mean) <= 3.0 * m1.se);
    CHECK(std::abs(m2.mean - gue_det_moment(3, 1)) <= 3.0 * m2.se);
    CHECK(std::abs(m4.mean - gue_det_moment(3, 2)) <= 3.0 * m4.se);
  }
  {
    // chi-squared product needs the c(N) rescaling to hit the second moment
    const int N = 4;
    const double c = gue_det_chisq_calibration(N);
    std::vector<double> v(n);
    for (auto& x : v) {
      const double d = c * sample_gue_det_chisq(N, rng);
      x = d * d;
    }
    const MeanSe ms = mean_se(v);
    CHECK(std::abs(ms.mean - gue_det_moment(N, 1)) <= 3.0 * ms.se);
  }
  CHECK(gue_det_chisq_calibration(1) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("projection sampler for the power blocks") {
  const int N = 4, M = 2, k = 1;
  const PowerGinibreBlockSampler sampler(N, M, k);
  RngStream rng(113);
  // always exactly c_k points
  for (int t = 0; t < 100; ++t)
    CHECK(sampler.sample(rng).points.size() == static_cast<std::size_t>(sampler.point_count()));

  // squared moduli (times N^M) against {gamma_1^2, gamma_3^2}
  RngStream rng2(127), rng3(131);
  std::vector<double> a, b;
  const double scale = std::pow(static_cast<double>(N), M);
  for (int t = 0; t < 10000; ++t) {
    for (const auto& z : sampler.sample(rng2).points) a.push_back(scale * std::norm(z));
    b.push_back(std::pow(rng3.gamma(1.0), 2.0));
    b.push_back(std::pow(rng3.gamma(3.0), 2.0));
  }
  CHECK(ks_two_sample(a, b).p_value > 1e-3);

  // single point for M >= N: modulus^2 scaled back is gamma(k)^M, angle uniform
  {
    const int n2 = 3, m2 = 5, k2 = 2;
    const PowerGinibreBlockSampler single(n2, m2, k2);
    CHECK(single.point_count() == 1);
    RngStream r(137);
    std::vector<double> radii(20000), angles(20000);
    for (int t = 0; t < 20000; ++t) {
      const cd z = single.sample(r).points[0];
      radii[t] = std::pow(std::pow(n2, m2) * std::norm(z), 1.0 / m2);
      angles[t] = std::arg(z) / (2.0 * std::numbers::pi) + 0.5;
    }
    // gamma(2) CDF: 1 - (1+t) e^-t
    CHECK(ks_one_sample(radii, [](double t) {
            return t <= 0 ? 0.0 : 1.0 - (1.0 + t) * std::exp(-t);
          }).p_value > 1e-3);
    CHECK(ks_one_sample(angles, [](double t) { return std::clamp(t, 0.0, 1.0); })
              .p_value > 1e-3);
  }

  // product statistic against the Andreief block value
  {
    MixedPolynomial g;
    g.add_term(0, 0, 1.0);
    g.add_term(1, 1, 0.3);
    const double exact = power_ginibre_product_stat(N, M, k, g).real();
    RngStream r(139);
    const double unscale = std::pow(static_cast<double>(N), 0.5 * M);
    std::vector<double> vals(100000);
    for (auto& x : vals) {
      double prod = 1.0;
      for (const auto& z : sampler.sample(r).points)
        prod *= 1.0 + 0.3 * std::norm(z * unscale);
      x = prod;
    }
    const MeanSe ms = mean_se(vals);
    CHECK(std::abs(ms.mean - exact) <= 3.0 * ms.se);
  }
}

TEST_CASE("Metropolis-Hastings for the planar beta ensemble") {
  const RadialPotential v = RadialPotential::quadratic();
  // p = 1 reproduces the beta = 2 radial moments: E sum |z|^2 = N(N+1)/2
  {
    const int N = 3;
    RngStream rng(149);
    BetaEnsembleMcmc chain(N, 1, v, rng);
    chain.burn_in(200000);
    std::vector<double> vals(20000);
    for (auto& x : vals) {
      const auto& z = chain.next_sample();
      double s = 0.0;
      for (const auto& zi : z) s += std::norm(zi);
      x = s;
    }
    CHECK(chain.acceptance_rate() > 0.05);
    CHECK(chain.acceptance_rate() < 0.9);
    const MeanSe ms = batch_means(vals, 20);
    CHECK(std::abs(ms.mean - 6.0) <= 4.0 * ms.se);
  }
  // p = 2, N = 2: E sum |z|^2 from the latent mixture
  {
    const int N = 2, p = 2;
    const LatentWeightTable table = expand_vandermonde_power(N, p);
    const LatentLaw law = latent_distribution(table, v);
    const double want = [&] {
      double s = 0.0;
      for (std::size_t i = 0; i < law.support.size(); ++i) {
        double mean = 0.0;
        for (int ui : law.support[i]) mean += 1.0 + ui;
        s += law.prob[i] * mean;
      }
      return s;
    }();
    CHECK(want == doctest::Approx(4.0));  // E[(1+B) + (1+p-B)] = 2 + p
    RngStream rng(151);
    BetaEnsembleMcmc chain(N, p, v, rng);
    chain.burn_in(200000);
    std::vector<double> vals(20000);
    for (auto& x : vals) {
      const auto& z = chain.next_sample();
      double s = 0.0;
      for (const auto& zi : z) s += std::norm(zi);
      x = s;
    }
    const MeanSe ms = batch_means(vals, 20);
    CHECK(std::abs(ms.mean - want) <= 4.0 * ms.se);
  }
}

TEST_CASE("same seed, same sample, for every sampler") {
  auto twice = [](auto&& f) {
    RngStream a(777), b(777);
    return std::pair{f(a), f(b)};
  };
  {
    auto [x, y] = twice([](RngStream& r) { return sample_ginibre(5, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_cue(5, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_gue(5, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_truncated_unitary(2, 3, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_spherical(2, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_ginibre_product(3, 2, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_high_powers(3, 4, r); });
    CHECK(x == y);
  }
  {
    auto [x, y] = twice([](RngStream& r) { return sample_bhny_charpoly(4, r); });
    CHECK(x == y);
  }
  {
    const PowerGinibreBlockSampler sampler(4, 2, 1);
    auto [x, y] = twice([&](RngStream& r) { return sampler.sample(r); });
    CHECK(x == y);
  }
}
