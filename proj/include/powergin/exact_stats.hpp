// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "powergin/log_complex.hpp"
#include "powergin/mixed_polynomial.hpp"
#include "powergin/moment_table.hpp"
#include "powergin/radial_potential.hpp"

namespace powergin {

/// Laurent polynomial on the unit circle, j -> a_j.
using LaurentPolynomial = std::map<int, std::complex<double>>;

// ---------------------------------------------------------------------------
// Andreief product statistics. All moment tables are for the unscaled
// ensembles (weights e^(-|z|^2), e^(-x^2/2)); the sqrt(N)-type scalings of
// the sampled ensembles are applied at the sampler/harness boundary.
// ---------------------------------------------------------------------------

/// E[prod_k g(lambda_k sqrt(N))] for the complex Ginibre ensemble:
/// det of f_ij = (1/(j-1)!) int z^(i-1) conj(z)^(j-1) g(z) dmu.
LogComplex ginibre_product_stat_log(int N, const MixedPolynomial& g);
std::complex<double> ginibre_product_stat(int N, const MixedPolynomial& g);

/// E[prod_{i in I_k} g(lambda_i N^(M/2))] for the power block indexed by
/// I_{N,M,k}: det over I_k of f_ij = (1/(j-1)!) int z^(i-1) conj(z)^(j-1)
/// g(z^M) dmu.
LogComplex power_ginibre_product_stat_log(int N, int M, int k,
                                          const MixedPolynomial& g);
std::complex<double> power_ginibre_product_stat(int N, int M, int k,
                                                const MixedPolynomial& g);

/// Deterministic restatement of the power-map block decomposition:
/// |lhs - rhs| / (1 + |lhs|) with lhs the Ginibre statistic of
/// g(z) = P(z^M, conj(z)^M) and rhs the product of the M block statistics.
double decomposition_identity_residual(int N, int M, const MixedPolynomial& P);

/// Product statistic for the beta=2 ensemble with radial potential V:
/// det of f_ij = (1/Gamma_V(j)) int z^(i-1) conj(z)^(j-1) g(z) dmu_V.
/// Throws std::domain_error if a required moment is infinite.
LogComplex radial_product_stat_log(int N, const RadialPotential& v,
                                   const MixedPolynomial& g);
std::complex<double> radial_product_stat(int N, const RadialPotential& v,
                                         const MixedPolynomial& g);

/// Heine-Szego: E[prod_k g(e^(i theta_k))] for CUE(N) as the Toeplitz
/// determinant det(a_{i-j}).
std::complex<double> cue_product_stat(int N, const LaurentPolynomial& g);

/// Moments E[Z^m conj(Z)^n] of the CUE characteristic polynomial at 1,
/// computed two independent ways.
struct CueCharpolyMoment {
  double pascal_minor;     // det of the shifted symmetric Pascal matrix
  double product_formula;  // prod_k k!(k+m+n)!/((k+m)!(k+n)!)
};
CueCharpolyMoment cue_charpoly_moment(int N, int m, int n);

/// E[prod_k g(lambda_k)] for the symmetric line ensemble with weight
/// e^(-x^2/2): det(f_ij)/D with f_ij = int x^(i+j-2) g(x) e^(-x^2/2) dx
/// and D the striped normalization constant in closed form. g is a real
/// polynomial given by its coefficients (g[d] multiplies x^d).
double gue_product_stat(int N, const std::vector<double>& g);

/// Even determinant moments E[Pi^(2m)] of the line ensemble in closed form.
double gue_det_moment(int N, int m);

/// E[Pi^s] for any power s: the closed form for even s, zero for odd s.
double gue_det_moment_power(int N, int s);

/// Normalization constants D^(N,1), D^(N,2) (log domain).
double gue_log_block_constant(int N, int block_k);

/// Max deviation over the shift grid of det(f_ij(z1,z2))_{i,j=0..n} from
/// its value at (0,0), where f_ij(z1,z2) = int (l-z1)^i conj(l-z2)^j g dmu.
/// The determinant is constant in (z1, z2); the residual is floating-point
/// noise only.
double translation_invariance_check(const MomentTable& mu, const MixedPolynomial& g,
                                    int n,
                                    const std::vector<std::pair<std::complex<double>,
                                                                std::complex<double>>>& shifts);

/// Determinant of a matrix given entrywise in the log domain, with row
/// scaling so that entries of any magnitude are safe.
LogComplex det_from_log_entries(
    std::size_t n, const std::function<LogComplex(std::size_t, std::size_t)>& entry);

}  // namespace powergin
