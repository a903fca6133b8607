// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include "powergin/cmatrix.hpp"
#include "powergin/rng.hpp"

namespace powergin {

struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenOptions {
  // deflation: |h(i+1,i)| <= subdiag_tol * (|h(i,i)| + |h(i+1,i+1)|)
  double subdiag_tol = 1e-13;
  int max_iter_per_eigenvalue = 60;
  bool balance = true;
};

/// Eigenvalues of a general complex matrix: balancing, Householder
/// Hessenberg reduction, implicitly shifted QR with Wilkinson shifts.
/// Throws EigenFailure past the iteration cap.
std::vector<cd> eigenvalues(CMatrix a, const EigenOptions& opts = {});

/// Eigenvalues of a Hermitian matrix (tridiagonalization + implicit QL),
/// ascending. The result is exactly real by construction.
std::vector<double> eigenvalues_hermitian(CMatrix a);

/// Householder QR; returns Q with the phase correction that makes the
/// diagonal of R real positive, so Q is Haar when a has iid complex
/// Gaussian entries.
CMatrix qr_unitary(const CMatrix& a);

/// Solve a x = b by LU with partial pivoting (x overwrites nothing).
std::vector<cd> solve_lu(CMatrix a, std::vector<cd> b);

}  // namespace powergin
