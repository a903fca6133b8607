// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace powergin {

using cd = std::complex<double>;

/// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cd(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  cd* row(std::size_t i) { return a_.data() + i * cols_; }
  const cd* row(std::size_t i) const { return a_.data() + i * cols_; }

  bool all_finite() const {
    for (const auto& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  CMatrix operator*(const CMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const cd aij = (*this)(i, l);
        if (aij == cd(0.0, 0.0)) continue;
        const cd* brow = b.row(l);
        cd* crow = c.row(i);
        for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aij * brow[j];
      }
    return c;
  }

  CMatrix adjoint() const {
    CMatrix c(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) c(j, i) = std::conj((*this)(i, j));
    return c;
  }

  /// Submatrix picked by (0-based) row and column index lists.
  CMatrix select(const std::vector<std::size_t>& ri,
                 const std::vector<std::size_t>& ci) const {
    CMatrix c(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) c(i, j) = (*this)(ri[i], ci[j]);
    return c;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cd> a_;
};

}  // namespace powergin
