// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace powergin {

/// Counter-based stream (Philox4x32-10). A stream is a (key, counter)
/// pair: the key is derived from the seed, the counter enumerates draws,
/// so the same seed replays the identical sequence bit for bit.
///
/// Substreams: split(id) derives a child key by hashing (key, id) with a
/// SplitMix64 finalizer. Each key owns its full 2^128 counter space, so
/// draws from one stream never revisit a (key, counter) pair of another
/// within any run of < 2^64 draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  RngStream split(std::uint64_t substream_id) const;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();
  std::uint32_t next_u32();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double a, double b);
  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n);

  /// Standard normal (Box-Muller; the companion variate is cached).
  double normal();
  /// Standard complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal();

  double exponential();
  /// Gamma(shape alpha, rate 1), Marsaglia-Tsang.
  double gamma(double alpha);
  double beta(double a, double b);
  double chi_squared(double dof);

 private:
  RngStream() = default;
  std::array<std::uint32_t, 4> philox_block();

  std::uint64_t seed_ = 0;
  std::array<std::uint32_t, 2> key_{0, 0};
  std::uint64_t counter_lo_ = 0, counter_hi_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace powergin
