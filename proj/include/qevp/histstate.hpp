#pragma once

// Padded Chebyshev generating-function system, emulated quantum linear-system
// solver, history states, and closed-form inverse verification.

#include "qevp/cheby.hpp"
#include "qevp/core.hpp"

namespace qevp {

struct PaddedSystem {
  CMatrix padA;
  CMatrix padB;
  int n = 0;
  int eta = 0;
  int d = 0;
  double enc_alpha = 4.0;
  CMatrix Asys;   // A/alpha actually embedded, kept for verification
};

struct HistoryState {
  CVector amps;                      // unit norm, indexed (sector s, shift l, system)
  std::vector<double> sector_norms;  // one entry per sector s in {0..eta}
  int n = 0;
  int eta = 0;
  int d = 0;
};

inline PaddedSystem build_padded_chebyshev(const BlockEncoding& be, int n, int eta) {
  const int d = int(be.dim());
  if (n < 2) throw std::invalid_argument("build_padded_chebyshev: n >= 2 required");
  if ((1 + eta) * n * d > (1 << 13))
    throw std::invalid_argument("build_padded_chebyshev: dimension overflow");
  const int N = (1 + eta) * n * d;
  CMatrix L = lower_shift(n);
  CMatrix Id = CMatrix::Identity(d, d);
  CMatrix In = CMatrix::Identity(n, n);

  PaddedSystem sys;
  sys.n = n;
  sys.eta = eta;
  sys.d = d;
  sys.enc_alpha = 4.0;
  sys.Asys = be.m;

  sys.padA = CMatrix::Zero(N, N);
  sys.padA.topLeftCorner(n * d, n * d) =
      kron(In + L * L, Id) - 2.0 * kron(L, be.m);
  if (eta >= 1) {
    const int P = eta * n;
    CMatrix Lp = lower_shift(P);
    sys.padA.block(n * d, n * d, P * d, P * d) =
        kron(CMatrix::Identity(P, P) - Lp, Id);
    // A21 = -|0><n-1| (x) I coupling the pad into the last shift index
    sys.padA.block(n * d, (n - 1) * d, d, d) = -Id;
  }

  sys.padB = CMatrix::Zero(N, N);
  sys.padB.topLeftCorner(n * d, n * d) = kron((In - L * L) / 2.0, Id);
  if (eta >= 1) {
    const int P = eta * n;
    sys.padB.block(n * d, n * d, P * d, P * d) = CMatrix::Identity(P * d, P * d);
  }
  return sys;
}

// Exact-norm random perturbation with no component along x, then renormalize.
inline CVector perturb_unit(const CVector& x, double eps_lin, Rng& rng) {
  if (eps_lin <= 0.0) return x;
  CVector g = random_unit_vector(int(x.size()), rng);
  CVector delta = g - x * (x.dot(g));
  if (delta.norm() < 1e-14) return x;
  delta *= eps_lin / delta.norm();
  CVector y = x + delta;
  return y / y.norm();
}

// Dense solve standing in for the quantum linear system oracle.
inline CVector emulate_qls(const CMatrix& C, const CVector& b, double eps_lin, Rng& rng) {
  Eigen::PartialPivLU<CMatrix> lu(C);
  CVector x = lu.solve(b);
  double nx = x.norm();
  if (!std::isfinite(nx) || nx == 0.0) throw std::invalid_argument("emulate_qls: singular system");
  x /= nx;
  return perturb_unit(x, eps_lin, rng);
}

// Right-hand side of the padded system for coefficient vector beta (pad sectors zero):
// sector-0 entry l is (beta~_{n-1-l} - beta~_{n+1-l})/2 times psi.
inline CVector chebyshev_rhs_scalar(const CVector& beta, int n) {
  CVector r = CVector::Zero(n);
  auto at = [&](int k) -> cplx { return (k >= 0 && k < beta.size()) ? beta(k) : cplx(0.0); };
  for (int l = 0; l < n; ++l) r(l) = (at(n - 1 - l) - at(n + 1 - l)) / 2.0;
  return r;
}

// History state via exact block forward substitution on the (lower-triangular)
// padded system; identical to the dense solve, but scales to large n.
inline HistoryState chebyshev_history(const BlockEncoding& be, const ChebExpansion& coeffs,
                                      const CVector& psi, int eta, double eps_lin, Rng& rng) {
  const int d = int(be.dim());
  const int n = coeffs.order();
  if (n < 2) throw std::invalid_argument("chebyshev_history: n >= 2 required");
  CVector r = chebyshev_rhs_scalar(coeffs.coeffs, n);
  std::vector<CVector> x(n);
  for (int l = 0; l < n; ++l) {
    CVector v = r(l) * psi;
    if (l >= 1) v += 2.0 * (be.m * x[l - 1]);
    if (l >= 2) v -= x[l - 2];
    x[l] = v;
  }
  const int N = (1 + eta) * n * d;
  CVector full(N);
  for (int l = 0; l < n; ++l) full.segment(l * d, d) = x[l];
  for (int s = 1; s <= eta; ++s)
    for (int l = 0; l < n; ++l) full.segment((s * n + l) * d, d) = x[n - 1];
  full /= full.norm();
  full = perturb_unit(full, eps_lin, rng);

  HistoryState h;
  h.amps = full;
  h.n = n;
  h.eta = eta;
  h.d = d;
  h.sector_norms.resize(eta + 1);
  for (int s = 0; s <= eta; ++s) h.sector_norms[s] = full.segment(s * n * d, n * d).norm();
  return h;
}

// Max block deviation between the numerical inverse of padA and the closed
// form: top-left (l,k) block U_{l-k}(A/alpha), last row repeated through the
// pad, unit lower-triangular identities in the pad corner.
inline double verify_pad_inverse(const PaddedSystem& sys) {
  if (sys.eta < 1) throw std::invalid_argument("verify_pad_inverse: eta >= 1 required");
  const int n = sys.n, d = sys.d, eta = sys.eta;
  const int rows = (1 + eta) * n;
  CMatrix inv = sys.padA.inverse();
  std::vector<CMatrix> U(n);
  for (int j = 0; j < n; ++j) U[j] = cheb_eval_matrix(ChebKind::U, j, sys.Asys);
  CMatrix Zd = CMatrix::Zero(d, d);
  CMatrix Id = CMatrix::Identity(d, d);
  double dev = 0.0;
  for (int l = 0; l < rows; ++l) {
    for (int k = 0; k < rows; ++k) {
      CMatrix expect;
      if (l < n && k < n) {
        expect = (l >= k) ? U[l - k] : Zd;
      } else if (l >= n && k < n) {
        expect = U[n - 1 - k];  // repeated last row of the top block
      } else if (l >= n && k >= n) {
        expect = (l >= k) ? Id : Zd;
      } else {
        expect = Zd;
      }
      dev = std::max(dev, (inv.block(l * d, k * d, d, d) - expect).cwiseAbs().maxCoeff());
    }
  }
  return dev;
}

struct PerturbBoundPair {
  double lhs;
  double rhs;
};

// Cor. style perturbation bound for normalized linear-system solutions.
inline PerturbBoundPair perturbed_solution_bound(const CMatrix& C, const CMatrix& Ct,
                                                 const CVector& psi, const CVector& psit) {
  CMatrix Cinv = C.inverse();
  CMatrix Ctinv = Ct.inverse();
  CVector a = Cinv * psi;
  CVector b = Ctinv * psit;
  PerturbBoundPair out;
  out.lhs = (b / b.norm() - a / a.norm()).norm();
  double nCinv = spectral_norm(Cinv);
  double nCtinv = spectral_norm(Ctinv);
  out.rhs = 2.0 * nCinv * (psit - psi).norm() / a.norm() +
            2.0 * nCtinv * nCinv * spectral_norm(Ct - C) / a.norm();
  return out;
}

}  // namespace qevp
