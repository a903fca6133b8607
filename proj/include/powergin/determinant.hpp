// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "powergin/cmatrix.hpp"
#include "powergin/log_complex.hpp"

namespace powergin {

/// Determinant via LU with partial pivoting; modulus and phase are
/// accumulated in the log domain (rows are equilibrated first so entries
/// of any magnitude are handled). A pivot modulus below 1e-300 yields
/// LogComplex::zero(), not an exception.
LogComplex log_det(const CMatrix& a);

/// Determinant of an M-striped matrix (A[i][j] = 0 whenever i != j mod M,
/// 1-based), computed as the product of the determinants of the blocks
/// indexed by the arithmetic progressions. Off-stripe entries must be
/// exactly zero; otherwise std::invalid_argument.
LogComplex striped_det(const CMatrix& a, int M);

}  // namespace powergin
