// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include "powergin/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace powergin {

namespace {

void balance_in_place(CMatrix& a) {
  const std::size_t n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / radix) {
        c *= radix;
        r /= radix;
        f *= radix;
      }
      while (c >= r * radix) {
        c /= radix;
        r *= radix;
        f /= radix;
      }
      if ((c + r) < 0.95 * s && f != 1.0) {
        done = false;
        const double finv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= finv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void hessenberg_in_place(CMatrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<cd> v(n), w(n);
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t lo = col + 1;
    double scale = 0.0;
    for (std::size_t i = lo; i < n; ++i) scale = std::max(scale, std::abs(a(i, col)));
    if (scale == 0.0) continue;
    double norm2 = 0.0;
    for (std::size_t i = lo; i < n; ++i) {
      v[i] = a(i, col) / scale;
      norm2 += std::norm(v[i]);
    }
    const double norm = std::sqrt(norm2);
    const cd x0 = v[lo];
    const cd sign = (x0 == cd(0.0, 0.0)) ? cd(1.0, 0.0) : x0 / std::abs(x0);
    const cd alpha = -sign * norm;
    v[lo] -= alpha;
    const double vnorm2 = norm2 - 2.0 * (std::conj(alpha) * x0).real() + std::norm(alpha);
    if (vnorm2 <= 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // left: rows lo..n-1, cols col..n-1
    std::fill(w.begin() + col, w.end(), cd(0.0, 0.0));
    for (std::size_t i = lo; i < n; ++i) {
      const cd vi = std::conj(v[i]);
      const cd* row = a.row(i);
      for (std::size_t j = col; j < n; ++j) w[j] += vi * row[j];
    }
    for (std::size_t i = lo; i < n; ++i) {
      const cd f = tau * v[i];
      cd* row = a.row(i);
      for (std::size_t j = col; j < n; ++j) row[j] -= f * w[j];
    }
    // right: all rows, cols lo..n-1
    for (std::size_t i = 0; i < n; ++i) {
      cd* row = a.row(i);
      cd u(0.0, 0.0);
      for (std::size_t j = lo; j < n; ++j) u += row[j] * v[j];
      const cd f = tau * u;
      for (std::size_t j = lo; j < n; ++j) row[j] -= f * std::conj(v[j]);
    }
    a(lo, col) = alpha * scale;
    for (std::size_t i = lo + 1; i < n; ++i) a(i, col) = 0.0;
  }
}

struct Givens {
  double c;  // real
  cd s;
};

Givens make_givens(cd f, cd g) {
  if (g == cd(0.0, 0.0)) return {1.0, cd(0.0, 0.0)};
  if (f == cd(0.0, 0.0)) return {0.0, std::conj(g) / std::abs(g)};
  const double af = std::abs(f);
  const double norm = std::hypot(af, std::abs(g));
  return {af / norm, (f / af) * std::conj(g) / norm};
}

// QR on the Hessenberg matrix restricted to the active window [lo, hi].
std::vector<cd> hessenberg_qr(CMatrix& h, const EigenOptions& opts) {
  const std::size_t n = h.rows();
  std::vector<cd> eig(n);
  if (n == 0) return eig;
  if (n == 1) {
    eig[0] = h(0, 0);
    return eig;
  }
  std::size_t hi = n - 1;
  int iters_here = 0;
  while (true) {
    // deflate converged subdiagonals
    std::size_t lo = hi;
    while (lo > 0) {
      const double bound =
          opts.subdiag_tol * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)));
      if (std::abs(h(lo, lo - 1)) <= bound) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      iters_here = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (++iters_here > opts.max_iter_per_eigenvalue)
      throw EigenFailure("eigenvalues: QR iteration did not converge");

    // Wilkinson shift from the trailing 2x2, exceptional shift when stuck
    cd mu;
    if (iters_here % 20 == 0) {
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      const cd A = h(hi - 1, hi - 1), B = h(hi - 1, hi);
      const cd C = h(hi, hi - 1), D = h(hi, hi);
      const cd tr2 = 0.5 * (A + D);
      const cd disc = std::sqrt(tr2 * tr2 - (A * D - B * C));
      const cd m1 = tr2 + disc, m2 = tr2 - disc;
      mu = (std::abs(m1 - D) < std::abs(m2 - D)) ? m1 : m2;
    }

    // implicit single-shift bulge chase
    cd x = h(lo, lo) - mu;
    cd y = h(lo + 1, lo);
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = make_givens(x, y);
      const std::size_t jend = hi;
      const std::size_t jstart = (i > lo) ? i - 1 : lo;
      // left rotation on rows (i, i+1)
      {
        cd* r0 = h.row(i);
        cd* r1 = h.row(i + 1);
        for (std::size_t j = jstart; j <= jend; ++j) {
          const cd t0 = r0[j], t1 = r1[j];
          r0[j] = g.c * t0 + g.s * t1;
          r1[j] = -std::conj(g.s) * t0 + g.c * t1;
        }
      }
      // right rotation on cols (i, i+1)
      {
        const std::size_t rend = std::min(i + 2, hi);
        for (std::size_t r = lo; r <= rend; ++r) {
          cd* row = h.row(r);
          const cd t0 = row[i], t1 = row[i + 1];
          row[i] = g.c * t0 + std::conj(g.s) * t1;
          row[i + 1] = -g.s * t0 + g.c * t1;
        }
      }
      if (i + 1 < hi) {
        x = h(i + 1, i);
        y = h(i + 2, i);
      }
    }
  }
  return eig;
}

}  // namespace

std::vector<cd> eigenvalues(CMatrix a, const EigenOptions& opts) {
  if (!a.is_square()) throw std::invalid_argument("eigenvalues: matrix must be square");
  if (!a.all_finite()) throw std::invalid_argument("eigenvalues: non-finite entries");
  if (opts.balance) balance_in_place(a);
  hessenberg_in_place(a);
  return hessenberg_qr(a, opts);
}

std::vector<double> eigenvalues_hermitian(CMatrix a) {
  if (!a.is_square()) throw std::invalid_argument("eigenvalues_hermitian: not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  // Householder tridiagonalization (via the general reduction; the input
  // is Hermitian so the result is tridiagonal with real diagonal).
  hessenberg_in_place(a);
  std::vector<double> d(n), e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));

  // implicit QL with Wilkinson shifts on the real tridiagonal
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m == l) break;
      if (++iter > 50) throw EigenFailure("eigenvalues_hermitian: no convergence");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

CMatrix qr_unitary(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("qr_unitary: matrix must be square");
  const std::size_t n = a.rows();
  CMatrix r = a;
  CMatrix q = CMatrix::identity(n);
  std::vector<cd> v(n), w(n);
  for (std::size_t col = 0; col < n; ++col) {
    double scale = 0.0;
    for (std::size_t i = col; i < n; ++i) scale = std::max(scale, std::abs(r(i, col)));
    if (scale == 0.0) continue;
    double norm2 = 0.0;
    for (std::size_t i = col; i < n; ++i) {
      v[i] = r(i, col) / scale;
      norm2 += std::norm(v[i]);
    }
    const double norm = std::sqrt(norm2);
    const cd x0 = v[col];
    const cd sign = (x0 == cd(0.0, 0.0)) ? cd(1.0, 0.0) : x0 / std::abs(x0);
    const cd alpha = -sign * norm;
    v[col] -= alpha;
    const double vnorm2 = norm2 - 2.0 * (std::conj(alpha) * x0).real() + std::norm(alpha);
    if (vnorm2 <= 0.0) continue;
    const double tau = 2.0 / vnorm2;
    // R <- H R
    std::fill(w.begin() + col, w.end(), cd(0.0, 0.0));
    for (std::size_t i = col; i < n; ++i) {
      const cd vi = std::conj(v[i]);
      const cd* row = r.row(i);
      for (std::size_t j = col; j < n; ++j) w[j] += vi * row[j];
    }
    for (std::size_t i = col; i < n; ++i) {
      const cd f = tau * v[i];
      cd* row = r.row(i);
      for (std::size_t j = col; j < n; ++j) row[j] -= f * w[j];
    }
    // Q <- Q H (accumulate from the right)
    for (std::size_t i = 0; i < n; ++i) {
      cd* row = q.row(i);
      cd u(0.0, 0.0);
      for (std::size_t j = col; j < n; ++j) u += row[j] * v[j];
      const cd f = tau * u;
      for (std::size_t j = col; j < n; ++j) row[j] -= f * std::conj(v[j]);
    }
  }
  // phase correction: make diag(R) real positive
  for (std::size_t j = 0; j < n; ++j) {
    const cd rjj = r(j, j);
    const double arjj = std::abs(rjj);
    const cd phase = (arjj == 0.0) ? cd(1.0, 0.0) : rjj / arjj;
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
  }
  return q;
}

std::vector<cd> solve_lu(CMatrix a, std::vector<cd> b) {
  if (!a.is_square() || a.rows() != b.size())
    throw std::invalid_argument("solve_lu: size mismatch");
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (std::abs(a(piv, col)) < 1e-280)
      throw std::runtime_error("solve_lu: (nearly) singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      std::swap(b[col], b[piv]);
    }
    const cd inv = 1.0 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const cd f = a(i, col) * inv;
      if (f == cd(0.0, 0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    cd s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * b[j];
    b[i] = s / a(i, i);
  }
  return b;
}

}  // namespace powergin
