// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powergin {

enum class Scaling { Scaled, Unscaled };

/// Finite point configuration plus provenance metadata.
struct PointSample {
  std::vector<std::complex<double>> points;
  std::string ensemble;
  int N = 0;
  int M = 1;
  std::optional<int> k;
  Scaling scaling = Scaling::Scaled;
  std::uint64_t seed = 0;

  bool operator==(const PointSample&) const = default;
};

}  // namespace powergin
