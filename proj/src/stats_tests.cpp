// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/stats_tests.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace powergin {

MeanSe mean_se(const std::vector<double>& x) {
  MeanSe out;
  out.n = static_cast<long>(x.size());
  if (out.n == 0) return out;
  double sum = 0.0;
  for (double v : x) sum += v;
  out.mean = sum / out.n;
  if (out.n < 2) return out;
  double ss = 0.0;
  for (double v : x) ss += (v - out.mean) * (v - out.mean);
  out.se = std::sqrt(ss / (out.n - 1) / out.n);
  return out;
}

MeanSe batch_means(const std::vector<double>& x, int nbatches) {
  if (nbatches < 2) throw std::invalid_argument("batch_means: need >= 2 batches");
  if (static_cast<long>(x.size()) < 2L * nbatches)
    throw std::invalid_argument("batch_means: sample too small for the batch count");
  const std::size_t blen = x.size() / nbatches;
  std::vector<double> bm(nbatches);
  for (int b = 0; b < nbatches; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < blen; ++i) s += x[b * blen + i];
    bm[b] = s / blen;
  }
  const MeanSe inner = mean_se(bm);
  MeanSe out;
  out.n = static_cast<long>(x.size());
  out.mean = inner.mean;
  out.se = inner.se;
  return out;
}

double sample_variance(const std::vector<double>& x) {
  const MeanSe ms = mean_se(x);
  if (ms.n < 2) return 0.0;
  double ss = 0.0;
  for (double v : x) ss += (v - ms.mean) * (v - ms.mean);
  return ss / (ms.n - 1);
}

double skewness(const std::vector<double>& x) {
  const MeanSe ms = mean_se(x);
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - ms.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= ms.n;
  m3 /= ms.n;
  return m3 / std::pow(m2, 1.5);
}

double excess_kurtosis(const std::vector<double>& x) {
  const MeanSe ms = mean_se(x);
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - ms.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= ms.n;
  m4 /= ms.n;
  return m4 / (m2 * m2) - 3.0;
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double q = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    q += (j % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(q, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 50 || b.size() < 50)
    throw std::invalid_argument("ks_two_sample: need >= 50 points per sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  KsResult out;
  out.statistic = d;
  const double ne = na * nb / (na + nb);
  out.scaled = d * std::sqrt(ne);
  out.p_value = kolmogorov_q(out.scaled);
  return out;
}

KsResult ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf) {
  if (x.size() < 50)
    throw std::invalid_argument("ks_one_sample: need >= 50 points");
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max(d, std::max((i + 1) / n - f, f - i / n));
  }
  KsResult out;
  out.statistic = d;
  out.scaled = d * std::sqrt(n);
  out.p_value = kolmogorov_q(out.scaled);
  return out;
}

}  // namespace powergin
