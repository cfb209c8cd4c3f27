#pragma once

// Faber regions from truncated Laurent series of the exterior map, Faber
// polynomials and coefficients, the padded Faber system, Faber history
// states, Faber QEVT, and the Faber differential-equation solver.

#include "qevp/histstate.hpp"
#include "qevp/transform.hpp"

#include <functional>

namespace qevp {

struct RegionFlags {
  bool convex = false;
  bool real_symmetric = false;
  bool left_half_plane = false;
};

// Psi(w) = varsigma w + tail[0] + tail[1]/w + tail[2]/w^2 + ...
struct FaberRegion {
  double varsigma = 1.0;
  CVector tail;  // varsigma_0, varsigma_1, ..., varsigma_m
  RegionFlags flags;

  double capacity() const { return varsigma; }

  cplx psi(cplx w) const {
    cplx v = varsigma * w;
    cplx wp = 1.0;
    for (int k = 0; k < tail.size(); ++k) {
      v += tail(k) * wp;
      wp /= w;
    }
    return v;
  }

  cplx dpsi(cplx w) const {
    cplx v = varsigma;
    cplx wp = 1.0 / (w * w);
    for (int k = 1; k < tail.size(); ++k) {
      v -= double(k) * tail(k) * wp;
      wp /= w;
    }
    return v;
  }

  void validate() const {
    if (varsigma <= 0.0) throw std::invalid_argument("FaberRegion: varsigma > 0 required");
    const int M = 4096;
    std::vector<cplx> pts(M);
    double area = 0.0, scale = 0.0;
    for (int i = 0; i < M; ++i) {
      double th = 2.0 * kPi * i / M;
      pts[i] = psi(std::polar(1.0, th));
      scale = std::max(scale, std::abs(pts[i]));
    }
    for (int i = 0; i < M; ++i) {
      const cplx &a = pts[i], &b = pts[(i + 1) % M];
      area += 0.5 * (a.real() * b.imag() - b.real() * a.imag());
    }
    // zero enclosed area marks a degenerate (slit) region such as the
    // interval, where the boundary is traversed twice; skip injectivity there
    if (std::abs(area) < 1e-9 * scale * scale) return;
    for (int i = 0; i < M; ++i)
      for (int j = i + 1; j < M; ++j)
        if (std::abs(pts[i] - pts[j]) < 1e-9 * std::max(scale, 1.0))
          throw std::invalid_argument("FaberRegion: boundary curve not injective on grid");
  }
};

enum class SpecialRegion { interval, disk, left_halfdisk_smooth };

inline FaberRegion special_region(SpecialRegion kind) {
  FaberRegion r;
  switch (kind) {
    case SpecialRegion::interval:  // Joukowsky map (w + 1/w)/2
      r.varsigma = 0.5;
      r.tail = CVector::Zero(2);
      r.tail(1) = 0.5;
      r.flags = {true, true, false};
      break;
    case SpecialRegion::disk:
      r.varsigma = 1.0;
      r.tail = CVector::Zero(0);
      r.flags = {true, true, false};
      break;
    case SpecialRegion::left_halfdisk_smooth:
      // ellipse (0.7 cos t - 0.7) + 0.5 i sin t: smooth, convex,
      // real-symmetric, max Re = 0
      r.varsigma = 0.6;
      r.tail = CVector::Zero(2);
      r.tail(0) = -0.7;
      r.tail(1) = 0.1;
      r.flags = {true, true, true};
      break;
  }
  r.validate();
  return r;
}

// Monomial coefficient vectors of F_0..F_{n-1}.
struct FaberPolySet {
  std::vector<CVector> polys;

  cplx eval(int j, cplx z) const {
    const CVector& p = polys[j];
    cplx acc = 0.0;
    for (int k = int(p.size()) - 1; k >= 0; --k) acc = acc * z + p(k);
    return acc;
  }

  CMatrix eval_matrix(int j, const CMatrix& M) const {
    const CVector& p = polys[j];
    const Eigen::Index d = M.rows();
    CMatrix acc = CMatrix::Zero(d, d);
    for (int k = int(p.size()) - 1; k >= 0; --k)
      acc = M * acc + p(k) * CMatrix::Identity(d, d);
    return acc;
  }

  // derivative coefficients of F_j
  CVector deriv(int j) const {
    const CVector& p = polys[j];
    if (p.size() <= 1) return CVector::Zero(1);
    CVector d(p.size() - 1);
    for (int k = 1; k < p.size(); ++k) d(k - 1) = double(k) * p(k);
    return d;
  }
};

// Matching the generating function order by order in y yields the recurrence
// varsigma F_{m+1}(z) = (z - varsigma_0) F_m(z)
//                       - sum_{k=1..m} varsigma_k F_{m-k}(z) - m varsigma_m.
inline FaberPolySet faber_polys(const FaberRegion& region, int n) {
  if (n > 128) throw std::invalid_argument("faber_polys: n <= 128");
  auto vs = [&](int k) -> cplx {
    return (k < region.tail.size()) ? region.tail(k) : cplx(0.0);
  };
  FaberPolySet out;
  out.polys.reserve(n);
  out.polys.push_back(CVector::Ones(1));  // F_0 = 1
  for (int m = 0; m + 1 < n; ++m) {
    CVector next = CVector::Zero(m + 2);
    const CVector& Fm = out.polys[m];
    for (int k = 0; k < Fm.size(); ++k) {
      next(k + 1) += Fm(k);          // z F_m
      next(k) -= vs(0) * Fm(k);      // -varsigma_0 F_m
    }
    for (int k = 1; k <= m; ++k) {
      const CVector& Fmk = out.polys[m - k];
      for (int i = 0; i < Fmk.size(); ++i) next(i) -= vs(k) * Fmk(i);
    }
    if (m >= 1) next(0) -= double(m) * vs(m);
    next /= region.varsigma;
    out.polys.push_back(std::move(next));
  }
  return out;
}

// Values F_0(z)..F_{n-1}(z) by the recurrence directly; stable where the
// monomial form cancels catastrophically (|coefficients| grow like 1/varsigma^j).
inline std::vector<cplx> faber_values(const FaberRegion& region, int n, cplx z) {
  auto vs = [&](int k) -> cplx {
    return (k < region.tail.size()) ? region.tail(k) : cplx(0.0);
  };
  std::vector<cplx> F(n);
  F[0] = 1.0;
  for (int m = 0; m + 1 < n; ++m) {
    cplx v = (z - vs(0)) * F[m];
    for (int k = 1; k <= m; ++k) v -= vs(k) * F[m - k];
    if (m >= 1) v -= double(m) * vs(m);
    F[m + 1] = v / region.varsigma;
  }
  return F;
}

// beta_j = (2 pi r^j)^{-1} int e^{-ij theta} f(Psi(r e^{i theta})) dtheta,
// trapezoid on a 2^13 grid.
inline CVector faber_coeffs(const std::function<cplx(cplx)>& f, const FaberRegion& region,
                            int n, double r = 1.0) {
  const int M = 1 << 13;
  std::vector<cplx> fv(M);
  for (int i = 0; i < M; ++i) {
    double th = 2.0 * kPi * i / M;
    fv[i] = f(region.psi(std::polar(r, th)));
  }
  CVector beta(n);
  for (int j = 0; j < n; ++j) {
    cplx s = 0.0;
    for (int i = 0; i < M; ++i) {
      double th = 2.0 * kPi * i / M;
      s += fv[i] * std::polar(1.0, -j * th);
    }
    beta(j) = s / (double(M) * std::pow(r, j));
  }
  return beta;
}

// L Psi(L^{-1}) = varsigma I + varsigma_0 L + varsigma_1 L^2 + ... (exact in nilpotent L).
inline CMatrix l_psi_linv(const FaberRegion& region, int n) {
  CMatrix L = lower_shift(n);
  CMatrix out = region.varsigma * CMatrix::Identity(n, n);
  CMatrix Lp = CMatrix::Identity(n, n);
  for (int k = 0; k < region.tail.size() && k < n; ++k) {
    Lp = L * Lp;
    out += region.tail(k) * Lp;
  }
  return out;
}

// Psi'(L^{-1}) = varsigma I - varsigma_1 L^2 - 2 varsigma_2 L^3 - ...
inline CMatrix dpsi_linv(const FaberRegion& region, int n) {
  CMatrix L = lower_shift(n);
  CMatrix out = region.varsigma * CMatrix::Identity(n, n);
  CMatrix Lp = L;
  for (int k = 1; k < region.tail.size() && k + 1 < n; ++k) {
    Lp = L * Lp;  // L^{k+1}
    out -= double(k) * region.tail(k) * Lp;
  }
  return out;
}

inline PaddedSystem build_padded_faber(const BlockEncoding& be, const FaberRegion& region,
                                       int n, int eta) {
  const int d = int(be.dim());
  if (n < 2) throw std::invalid_argument("build_padded_faber: n >= 2 required");
  if ((1 + eta) * n * d > (1 << 13))
    throw std::invalid_argument("build_padded_faber: dimension overflow");
  const int N = (1 + eta) * n * d;
  CMatrix Id = CMatrix::Identity(d, d);

  PaddedSystem sys;
  sys.n = n;
  sys.eta = eta;
  sys.d = d;
  sys.Asys = be.m;

  CMatrix LPsi = l_psi_linv(region, n);
  sys.padA = CMatrix::Zero(N, N);
  sys.padA.topLeftCorner(n * d, n * d) = kron(LPsi, Id) - kron(lower_shift(n), be.m);
  if (eta >= 1) {
    const int P = eta * n;
    sys.padA.block(n * d, n * d, P * d, P * d) =
        kron(CMatrix::Identity(P, P) - lower_shift(P), Id);
    sys.padA.block(n * d, (n - 1) * d, d, d) = -Id;
  }

  sys.padB = CMatrix::Zero(N, N);
  sys.padB.topLeftCorner(n * d, n * d) = kron(dpsi_linv(region, n), Id);
  if (eta >= 1) {
    const int P = eta * n;
    sys.padB.block(n * d, n * d, P * d, P * d) = CMatrix::Identity(P * d, P * d);
  }
  // normalization 2 alpha_Psi + 2 with alpha_Psi = ||L Psi(L^{-1})||
  sys.enc_alpha = 2.0 * spectral_norm(LPsi) + 2.0;
  return sys;
}

// Closed-form inverse check: top-left (l,k) block F'_{l-k+1}(A/alpha)/(l-k+1),
// last row repeated through the pad, unit lower-triangular identities.
inline double verify_pad_inverse_faber(const PaddedSystem& sys, const FaberRegion& region) {
  if (sys.eta < 1) throw std::invalid_argument("verify_pad_inverse_faber: eta >= 1 required");
  const int n = sys.n, d = sys.d, eta = sys.eta;
  const int rows = (1 + eta) * n;
  CMatrix inv = sys.padA.inverse();
  FaberPolySet fp = faber_polys(region, n + 1);
  std::vector<CMatrix> Fd(n);  // F'_{j+1}(A)/(j+1)
  for (int j = 0; j < n; ++j) {
    CVector dc = fp.deriv(j + 1);
    CMatrix acc = CMatrix::Zero(d, d);
    for (int k = int(dc.size()) - 1; k >= 0; --k)
      acc = sys.Asys * acc + dc(k) * CMatrix::Identity(d, d);
    Fd[j] = acc / double(j + 1);
  }
  CMatrix Zd = CMatrix::Zero(d, d);
  CMatrix Id = CMatrix::Identity(d, d);
  double dev = 0.0;
  for (int l = 0; l < rows; ++l) {
    for (int k = 0; k < rows; ++k) {
      CMatrix expect;
      if (l < n && k < n) expect = (l >= k) ? Fd[l - k] : Zd;
      else if (l >= n && k < n) expect = Fd[n - 1 - k];
      else if (l >= n && k >= n) expect = (l >= k) ? Id : Zd;
      else expect = Zd;
      dev = std::max(dev, (inv.block(l * d, k * d, d, d) - expect).cwiseAbs().maxCoeff());
    }
  }
  return dev;
}

// History state by block forward substitution on the lower-triangular system.
inline HistoryState faber_history(const BlockEncoding& be, const FaberRegion& region,
                                  const CVector& beta, const CVector& psi, int eta,
                                  double eps_lin, Rng& rng) {
  const int d = int(be.dim());
  const int n = int(beta.size());
  if (n < 2) throw std::invalid_argument("faber_history: n >= 2 required");
  auto vs = [&](int k) -> cplx {
    return (k < region.tail.size()) ? region.tail(k) : cplx(0.0);
  };
  // rhs sector 0: Psi'(L^{-1}) applied to the reversed coefficient vector
  CMatrix dPsi = dpsi_linv(region, n);
  CVector crev(n);
  for (int j = 0; j < n; ++j) crev(j) = beta(n - 1 - j);
  CVector r = dPsi * crev;
  // forward substitution: varsigma x_l = r_l psi + (A/alpha) x_{l-1}
  //                        - sum_{j>=1} c_j x_{l-j}, c_j = varsigma_{j-1}
  std::vector<CVector> x(n);
  for (int l = 0; l < n; ++l) {
    CVector v = r(l) * psi;
    if (l >= 1) v += be.m * x[l - 1];
    for (int j = 1; j <= l; ++j) {
      cplx cj = vs(j - 1);
      if (cj != cplx(0.0)) v -= cj * x[l - j];
    }
    x[l] = v / region.varsigma;
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

inline TransformReport qevt_faber(const BlockEncoding& be, const FaberRegion& region,
                                  const CVector& beta, const CVector& psi, double eps_lin,
                                  Rng& rng, double p_fail = 0.01) {
  const int n = int(beta.size());
  const int d = int(be.dim());
  HistoryState h = faber_history(be, region, beta, psi, 1, eps_lin, rng);
  CVector out = CVector::Zero(d);
  for (int l = 0; l < n; ++l) out += h.amps.segment((n + l) * d, d);
  out /= std::sqrt(double(n));
  double norm = out.norm();
  if (norm < 1e-12) throw std::invalid_argument("qevt_faber: degenerate target state");
  TransformReport rep;
  rep.output = out / norm;
  rep.amp_ratio = 1.0 / std::max(h.sector_norms[1], 1e-300);
  rep.predicted_queries = rep.amp_ratio * std::log(1.0 / p_fail);
  rep.n_used = n;
  return rep;
}

struct FaberDiffeqOptions {
  double eps_lin = 0.0;
  double c1 = 1.6;
  double c2 = 3.0;
};

// n = c1 alpha t e^zeta + c2 log(1/(alpha_exppsi eps)); target e^{tA} psi.
inline TransformReport solve_diffeq_faber(const BlockEncoding& be, double t, const CVector& psi,
                                          double eps, const FaberRegion& region, Rng& rng,
                                          const FaberDiffeqOptions& opt = {}) {
  const double tau = be.alpha * t;
  CMatrix A = be.operator_matrix();
  CVector target = (t * A).exp() * psi;
  double alpha_exppsi = std::max(target.norm(), 1e-12);
  int n = int(std::ceil(opt.c1 * tau * std::exp(region.capacity()) +
                        opt.c2 * std::log(1.0 / (alpha_exppsi * eps))));
  n = std::max(n, 6);
  CVector beta = faber_coeffs([&](cplx z) { return std::exp(tau * z); }, region, n, 1.0);
  TransformReport rep = qevt_faber(be, region, beta, psi, opt.eps_lin, rng);
  rep.fidelity_target = target / target.norm();
  rep.fidelity = std::abs(rep.fidelity_target.dot(rep.output));
  rep.n_used = n;
  return rep;
}

}  // namespace qevp
