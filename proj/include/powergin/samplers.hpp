// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "powergin/point_sample.hpp"
#include "powergin/radial_potential.hpp"
#include "powergin/rng.hpp"

namespace powergin {

/// Eigenvalues of an N x N matrix of iid N_C(0, 1/N) entries. The
/// eigensolver is retried once with a fresh random unitary similarity if
/// the QR iteration stalls. Guarded at N <= max_n.
PointSample sample_ginibre(int N, RngStream& rng, int max_n = 512);

/// {gamma_1, ..., gamma_N}, independent Gamma(k,1): the law of the set
/// {N |lambda_i|^2} of Ginibre. Radii only; no angle statement is implied.
std::vector<double> sample_kostlan_radii(int N, RngStream& rng);

/// {gamma_k^(M/2) e^(i theta_k)}: the law of {N^(M/2) lambda^M} when
/// M >= N, everything independent.
PointSample sample_high_powers(int N, int M, RngStream& rng);

/// Haar unitary eigenvalues (QR of a Gaussian matrix with the R-diagonal
/// phase correction).
PointSample sample_cue(int N, RngStream& rng);

/// Eigenvalues of a Hermitian Gaussian matrix with joint density
/// proportional to prod |x_i-x_j|^2 e^(-sum x^2/2); exactly real.
std::vector<double> sample_gue(int N, RngStream& rng);
PointSample sample_gue_points(int N, RngStream& rng);

/// Eigenvalues of the top-left N x N minor of a Haar unitary of size N+n.
PointSample sample_truncated_unitary(int N, int n, RngStream& rng);

/// Eigenvalues of G1^-1 G2 for iid unscaled Ginibre G1, G2; G1 is redrawn
/// (up to 3 times) while its smallest singular value estimate is < 1e-10.
PointSample sample_spherical(int N, RngStream& rng);

/// Eigenvalues of a product of m independent unscaled Ginibre matrices.
PointSample sample_ginibre_product(int N, int m, RngStream& rng);

/// Direct sampler for the squared-radius set of the m-fold Ginibre
/// product: {prod_j gamma_k^(j)}, gamma_k^(j) ~ Gamma(k) independent.
std::vector<double> sample_gamma_product_radii(int N, int m, RngStream& rng);

/// Characteristic polynomial of CUE(N) at 1 as a product of independent
/// factors prod_k (1 + sqrt(beta_{1,k-1}) e^(i omega_k)), with the k=1
/// beta factor taken to be 1.
std::complex<double> sample_bhny_charpoly(int N, RngStream& rng);

/// Determinant of the line ensemble with weight e^(-x^2/2):
/// (-1)^eps prod_k chi(2 floor(k/2) + 1) (chi, not chi-squared), which
/// matches every even determinant moment. See sample_gue_det_chisq for
/// the chi-squared product variant.
double sample_gue_det(int N, RngStream& rng);

/// (-1)^eps prod_k chi^2(2 floor(k/2) + 1). Its second moment differs
/// from the determinant's by the factor gue_det_chisq_calibration(N)^-2.
double sample_gue_det_chisq(int N, RngStream& rng);

/// c(N) with E[(c(N) * prod chi^2)^2] = E[Pi^2]:
/// c(N) = sqrt(gue_det_moment(N,1) / prod_k d_k (d_k + 2)), d_k = 2 floor(k/2)+1.
double gue_det_chisq_calibration(int N);

}  // namespace powergin
