// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <vector>

namespace powergin {

/// Arithmetic progression I = { i in [1,N] : i == k (mod M) }, 1 <= k <= M.
/// The progressions for k = 1..M partition [1,N]; |I| = floor((N-k)/M)+1
/// when k <= N and 0 otherwise.
struct ProgressionIndex {
  int N = 0;
  int M = 1;
  int k = 1;
  std::vector<int> indices;  // ascending, 1-based

  ProgressionIndex(int N_, int M_, int k_) : N(N_), M(M_), k(k_) {
    if (N < 0) throw std::invalid_argument("ProgressionIndex: N must be >= 0");
    if (M < 1) throw std::invalid_argument("ProgressionIndex: M must be >= 1");
    if (k < 1 || k > M) throw std::invalid_argument("ProgressionIndex: k out of [1,M]");
    for (int i = k; i <= N; i += M) indices.push_back(i);
  }

  int cardinality() const { return static_cast<int>(indices.size()); }

  static int cardinality_of(int N, int M, int k) {
    return k <= N ? (N - k) / M + 1 : 0;
  }
};

}  // namespace powergin
