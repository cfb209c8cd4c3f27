#pragma once

// Chebyshev polynomials (scalar and matrix arguments), expansion coefficients
// for exp and erf, generating-function identities, and truncation bounds.

#include "qevp/core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>

namespace qevp {

enum class ChebKind { T, Ttilde, U };

// Coefficients in the rescaled-first convention: beta~_0 = 2*beta_0,
// beta~_j = beta_j for j >= 1, so sum beta~_j Ttilde_j = sum beta_j T_j.
struct ChebExpansion {
  CVector coeffs;

  ChebExpansion() = default;
  explicit ChebExpansion(CVector c) : coeffs(std::move(c)) {
    // the rescaled and plain conventions must describe the same function
    for (int k = 0; k < 16; ++k) {
      double x = -1.0 + 2.0 * (k + 0.5) / 16.0;
      cplx a = 0.0, b = 0.0;
      double Tm1 = 1.0, T0 = x;
      for (int j = 0; j < coeffs.size(); ++j) {
        double Tj;
        if (j == 0) Tj = 1.0;
        else if (j == 1) Tj = x;
        else {
          double tn = 2.0 * x * T0 - Tm1;
          Tm1 = T0;
          T0 = tn;
          Tj = tn;
        }
        cplx beta = (j == 0) ? coeffs(0) / 2.0 : coeffs(j);
        double Ttil = (j == 0) ? 0.5 : Tj;
        a += beta * Tj;
        b += coeffs(j) * Ttil;
      }
      if (std::abs(a - b) > 1e-9 * (1.0 + std::abs(b)))
        throw std::invalid_argument("ChebExpansion: convention mismatch");
    }
  }

  int order() const { return int(coeffs.size()); }
};

inline cplx cheb_eval(ChebKind kind, int j, cplx x) {
  if (j < 0) throw std::invalid_argument("cheb_eval: j >= 0 required");
  if (kind == ChebKind::Ttilde && j == 0) return 0.5;
  cplx pm1, p0;
  if (kind == ChebKind::U) {
    pm1 = 1.0;
    p0 = 2.0 * x;
  } else {
    pm1 = 1.0;
    p0 = x;
  }
  if (j == 0) return pm1;
  if (j == 1) return p0;
  for (int k = 2; k <= j; ++k) {
    cplx pn = 2.0 * x * p0 - pm1;
    pm1 = p0;
    p0 = pn;
  }
  return p0;
}

inline CMatrix cheb_eval_matrix(ChebKind kind, int j, const CMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("cheb_eval_matrix: non-square");
  const Eigen::Index d = M.rows();
  CMatrix I = CMatrix::Identity(d, d);
  if (kind == ChebKind::Ttilde && j == 0) return 0.5 * I;
  CMatrix pm1 = I;
  CMatrix p0 = (kind == ChebKind::U) ? CMatrix(2.0 * M) : M;
  if (j == 0) return pm1;
  if (j == 1) return p0;
  for (int k = 2; k <= j; ++k) {
    CMatrix pn = 2.0 * M * p0 - pm1;
    pm1 = p0;
    p0 = pn;
  }
  return p0;
}

// Evaluate sum_j beta~_j Ttilde_j at a scalar point.
inline cplx cheb_expansion_eval(const ChebExpansion& e, cplx x) {
  cplx acc = 0.0;
  cplx pm1 = 1.0, p0 = x;
  for (int j = 0; j < e.order(); ++j) {
    cplx Tj;
    if (j == 0) Tj = 0.5;
    else if (j == 1) Tj = x;
    else {
      cplx pn = 2.0 * x * p0 - pm1;
      pm1 = p0;
      p0 = pn;
      Tj = pn;
    }
    acc += e.coeffs(j) * Tj;
  }
  return acc;
}

// sum_j beta~_j Ttilde_j(M)
inline CMatrix cheb_expansion_eval_matrix(const ChebExpansion& e, const CMatrix& M) {
  const Eigen::Index d = M.rows();
  CMatrix I = CMatrix::Identity(d, d);
  CMatrix acc = CMatrix::Zero(d, d);
  CMatrix pm1 = I, p0 = M;
  for (int j = 0; j < e.order(); ++j) {
    CMatrix Tj;
    if (j == 0) Tj = 0.5 * I;
    else if (j == 1) Tj = M;
    else {
      CMatrix pn = 2.0 * M * p0 - pm1;
      pm1 = p0;
      p0 = pn;
      Tj = pn;
    }
    acc += e.coeffs(j) * Tj;
  }
  return acc;
}

// Chebyshev expansion of e^{-i tau x}: beta_j = 2 (-i)^j J_j(tau), beta_0 = J_0(tau).
inline ChebExpansion exp_coeffs(double tau, int n) {
  if (n < 1) throw std::invalid_argument("exp_coeffs: n < 1");
  if (tau < 0.0) throw std::invalid_argument("exp_coeffs: tau >= 0 required");
  CVector c(n);
  const cplx mi(0.0, -1.0);
  cplx ph = 1.0;
  for (int j = 0; j < n; ++j) {
    double Jj = (tau == 0.0) ? (j == 0 ? 1.0 : 0.0) : std::cyl_bessel_j(double(j), tau);
    c(j) = 2.0 * ph * Jj;  // beta~_0 = 2*beta_0 = 2 J_0
    ph *= mi;
  }
  return ChebExpansion(std::move(c));
}

// Row of scaled modified Bessel values e^{-x} I_k(x), k = 0..kmax, via the
// integral representation (stable for the large x used by the erf filter).
inline std::vector<double> scaled_bessel_i_row(double x, int kmax) {
  std::vector<double> out(kmax + 1, 0.0);
  if (x < 50.0) {
    for (int k = 0; k <= kmax; ++k)
      out[k] = std::exp(-x) * std::cyl_bessel_i(double(k), x);
    return out;
  }
  const int M = 1 << 14;
  std::vector<double> w(M);
  std::vector<double> th(M);
  for (int i = 0; i < M; ++i) {
    th[i] = kPi * (i + 0.5) / M;
    w[i] = std::exp(x * (std::cos(th[i]) - 1.0));
  }
  for (int k = 0; k <= kmax; ++k) {
    double s = 0.0;
    for (int i = 0; i < M; ++i) s += w[i] * std::cos(k * th[i]);
    out[k] = s / M;
  }
  return out;
}

// Chebyshev expansion of Erf(c x): odd j only,
// beta_j = (2c e^{-c^2/2} / (j sqrt(pi))) (-1)^{(j-1)/2} (I_{(j-1)/2} + I_{(j+1)/2})(c^2/2).
inline ChebExpansion erf_coeffs(double c, int n) {
  if (n < 1) throw std::invalid_argument("erf_coeffs: n < 1");
  if (c <= 0.0) throw std::invalid_argument("erf_coeffs: c > 0 required");
  const double x = c * c / 2.0;
  auto I = scaled_bessel_i_row(x, n / 2 + 1);
  CVector cf = CVector::Zero(n);
  for (int j = 1; j < n; j += 2) {
    int k = (j - 1) / 2;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    cf(j) = (2.0 * c / (j * std::sqrt(kPi))) * sign * (I[k] + I[k + 1]);
  }
  return ChebExpansion(std::move(cf));
}

// Coefficients from the cosine-transform quadrature on a 4n-point theta grid.
inline ChebExpansion cheb_coeffs_numeric(const std::function<cplx(double)>& f, int n) {
  const int M = 4 * n;
  std::vector<cplx> fv(M);
  std::vector<double> th(M);
  for (int i = 0; i < M; ++i) {
    th[i] = kPi * (i + 0.5) / M;
    fv[i] = f(std::cos(th[i]));
  }
  CVector c(n);
  for (int j = 0; j < n; ++j) {
    cplx s = 0.0;
    for (int i = 0; i < M; ++i) s += fv[i] * std::cos(j * th[i]);
    c(j) = 2.0 * s / double(M);  // beta~ convention: factor 2 for all j
  }
  return ChebExpansion(std::move(c));
}

// Monomial coefficients of T_j (ascending powers).
inline CVector cheb_t_monomial(int j) {
  if (j == 0) return CVector::Ones(1);
  CVector prev = CVector::Ones(1);
  CVector cur = CVector::Zero(2);
  cur(1) = 1.0;
  for (int k = 2; k <= j; ++k) {
    CVector next = CVector::Zero(k + 1);
    for (int i = 0; i < cur.size(); ++i) next(i + 1) += 2.0 * cur(i);
    for (int i = 0; i < prev.size(); ++i) next(i) -= prev(i);
    prev = cur;
    cur = next;
  }
  return cur;
}

struct GenFunctionCheck {
  cplx lhs_ttilde, rhs_ttilde;
  cplx lhs_u, rhs_u;
};

// Generating functions: sum Ttilde_j y^j = (1-y^2)/(2(1+y^2-2yx)),
// sum U_j y^j = 1/(1+y^2-2yx).
inline GenFunctionCheck gen_function_check(cplx x, cplx y) {
  if (std::abs(y) >= 1.0) throw std::invalid_argument("gen_function_check: |y| < 1 required");
  GenFunctionCheck out;
  cplx den = 1.0 + y * y - 2.0 * y * x;
  out.rhs_ttilde = (1.0 - y * y) / (2.0 * den);
  out.rhs_u = 1.0 / den;
  cplx st = 0.0, su = 0.0;
  cplx yj = 1.0;
  cplx tm1 = 1.0, t0 = x, um1 = 1.0, u0 = 2.0 * x;
  for (int j = 0; j < 100000; ++j) {
    cplx Tj, Uj;
    if (j == 0) {
      Tj = 0.5;
      Uj = 1.0;
    } else if (j == 1) {
      Tj = x;
      Uj = 2.0 * x;
    } else {
      cplx tn = 2.0 * x * t0 - tm1;
      tm1 = t0;
      t0 = tn;
      Tj = tn;
      cplx un = 2.0 * x * u0 - um1;
      um1 = u0;
      u0 = un;
      Uj = un;
    }
    st += Tj * yj;
    su += Uj * yj;
    yj *= y;
    if (std::abs(yj) * (std::abs(Tj) + std::abs(Uj) + 1.0) < 1e-18 && j > 8) break;
  }
  out.lhs_ttilde = st;
  out.lhs_u = su;
  return out;
}

struct BoundPair {
  double actual;
  double bound;
};

// ||e^{-i tau A} - sum_{j<n} beta~_j Ttilde_j(A)|| against
// C0 * kappa_S * (e * d_max * tau / (2n))^n.
inline BoundPair matrix_exp_trunc_bound(const JordanTriple& jt, int d_max, double tau, int n,
                                        double C0) {
  const CMatrix& A = jt.A;
  CMatrix target = (cplx(0.0, -tau) * A).exp();
  ChebExpansion e = exp_coeffs(tau, n);
  CMatrix approx = cheb_expansion_eval_matrix(e, A);
  BoundPair out;
  out.actual = spectral_norm(target - approx);
  double base = std::exp(1.0) * d_max * tau / (2.0 * n);
  out.bound = C0 * jt.kappa_S * std::pow(base, n);
  return out;
}

}  // namespace qevp
