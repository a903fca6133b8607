// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <vector>

namespace powergin {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  long n = 0;
};

MeanSe mean_se(const std::vector<double>& x);

/// Mean with a batch-means standard error (for autocorrelated chains).
MeanSe batch_means(const std::vector<double>& x, int nbatches = 20);

double sample_variance(const std::vector<double>& x);
double skewness(const std::vector<double>& x);
double excess_kurtosis(const std::vector<double>& x);

/// Asymptotic Kolmogorov tail probability Q(lambda) = 2 sum (-1)^(j-1)
/// e^(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
  double statistic = 0.0;   // sup |F1 - F2|
  double p_value = 1.0;     // asymptotic
  double scaled = 0.0;      // statistic * sqrt(effective n)
};

/// Two-sample Kolmogorov-Smirnov; both samples must have >= 50 points
/// (asymptotic critical values only).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// One-sample test against a continuous CDF; >= 50 points required.
KsResult ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf);

}  // namespace powergin
