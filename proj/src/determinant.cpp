// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/determinant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace powergin {

LogComplex log_det(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("log_det: matrix must be square");
  if (!a.all_finite()) throw std::invalid_argument("log_det: non-finite entries");
  const std::size_t n = a.rows();
  if (n == 0) return LogComplex::one();

  CMatrix lu = a;
  double log_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s = std::max(s, std::abs(lu(i, j)));
    if (s == 0.0) return LogComplex::zero();
    log_scale += std::log(s);
    const double inv = 1.0 / s;
    for (std::size_t j = 0; j < n; ++j) lu(i, j) *= inv;
  }

  LogComplex det{log_scale, 0.0};
  int swaps = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) return LogComplex::zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(piv, j));
      ++swaps;
    }
    const cd p = lu(col, col);
    det *= LogComplex::from_complex(p);
    const cd pinv = 1.0 / p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const cd f = lu(r, col) * pinv;
      if (f == cd(0.0, 0.0)) continue;
      lu(r, col) = 0.0;
      const cd* src = lu.row(col);
      cd* dst = lu.row(r);
      for (std::size_t j = col + 1; j < n; ++j) dst[j] -= f * src[j];
    }
  }
  if (swaps % 2 != 0) det *= LogComplex{0.0, std::numbers::pi};
  return det;
}

LogComplex striped_det(const CMatrix& a, int M) {
  if (!a.is_square()) throw std::invalid_argument("striped_det: matrix must be square");
  if (M < 1) throw std::invalid_argument("striped_det: M must be >= 1");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i % M) != (j % M) && a(i, j) != cd(0.0, 0.0))
        throw std::invalid_argument("striped_det: matrix is not M-striped");

  LogComplex det = LogComplex::one();
  for (int k = 0; k < M; ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t i = static_cast<std::size_t>(k); i < n; i += M) idx.push_back(i);
    if (idx.empty()) continue;
    det *= log_det(a.select(idx, idx));
  }
  return det;
}

}  // namespace powergin
