// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include "powergin/point_sample.hpp"
#include "powergin/progression.hpp"
#include "powergin/rng.hpp"

namespace powergin {

struct EnvelopeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RejectionCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact sequential sampler for the power block indexed by I_{N,M,k}: a
/// projection determinantal process spanned by the monomials z^l
/// orthonormalized against the reference measure with weight
/// |z|^(2(k-M)/M) e^(-N |z|^(2/M)).
///
/// Points are drawn one at a time from the conditional density obtained by
/// projecting out the previously chosen directions. Rotation invariance
/// splits each conditional draw: the modulus comes from a finite mixture of
/// the per-index radial laws (gamma variables to the power M), the residual
/// angle from rejection sampling against the angular conditional, with the
/// envelope taken as the maximum over a 1024-point angular grid times a 1.2
/// safety factor. An observed density value above the envelope raises
/// EnvelopeViolation; more than 10^6 rejections raise RejectionCapExceeded.
class PowerGinibreBlockSampler {
 public:
  PowerGinibreBlockSampler(int N, int M, int k, int max_points = 64);

  int point_count() const { return n_; }

  /// One configuration of exactly point_count() points (scaled: the block
  /// law of the images lambda^M of Gin(N)).
  PointSample sample(RngStream& rng) const;

 private:
  int N_, M_, k_, n_;
  std::vector<double> log_rho_;  // log normalization of the l-th monomial
  static constexpr int kGrid = 1024;
  static constexpr double kSafety = 1.2;
  static constexpr long kRejectCap = 1000000;
};

}  // namespace powergin
