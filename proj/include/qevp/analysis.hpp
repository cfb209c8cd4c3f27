#pragma once

// Numerical range, pseudospectrum, Crouzeix-Palencia checks, Bernstein-type
// matrix polynomial bounds, exponential norm bounds, and the Carleson-Hunt
// average-case experiment.

#include "qevp/cheby.hpp"
#include "qevp/core.hpp"
#include "qevp/faber.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace qevp {

struct RangeBoundary {
  std::vector<cplx> points;
};

// Johnson support sweep: for each angle the top eigenvector of Re(e^{i th} C)
// gives a boundary point as a Rayleigh quotient.
inline RangeBoundary numerical_range(const CMatrix& C, int n_angles = 720) {
  RangeBoundary out;
  out.points.reserve(n_angles);
  for (int k = 0; k < n_angles; ++k) {
    double th = 2.0 * kPi * k / n_angles;
    CMatrix R = std::polar(1.0, th) * C;
    CMatrix H = (R + R.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    CVector v = es.eigenvectors().col(C.rows() - 1);  // top eigenvector
    out.points.push_back((v.adjoint() * C * v)(0, 0));
  }
  return out;
}

struct PseudospecGrid {
  std::vector<cplx> grid;
  std::vector<double> sigma_min;
  double delta = 0.0;
  int nx = 0, ny = 0;
};

inline PseudospecGrid pseudospectrum(const CMatrix& C, double delta, double re0, double re1,
                                     double im0, double im1, int nx, int ny) {
  if (nx * ny > 256 * 256) throw std::invalid_argument("pseudospectrum: resolution cap 256^2");
  PseudospecGrid out;
  out.delta = delta;
  out.nx = nx;
  out.ny = ny;
  const Eigen::Index d = C.rows();
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      cplx z(re0 + (re1 - re0) * ix / std::max(nx - 1, 1),
             im0 + (im1 - im0) * iy / std::max(ny - 1, 1));
      out.grid.push_back(z);
      out.sigma_min.push_back(
          smallest_singular_value(C - z * CMatrix::Identity(d, d)));
    }
  }
  return out;
}

inline CMatrix poly_eval_matrix(const CVector& p, const CMatrix& M) {
  const Eigen::Index d = M.rows();
  CMatrix acc = CMatrix::Zero(d, d);
  for (int k = int(p.size()) - 1; k >= 0; --k)
    acc = M * acc + p(k) * CMatrix::Identity(d, d);
  return acc;
}

inline cplx poly_eval(const CVector& p, cplx z) {
  cplx acc = 0.0;
  for (int k = int(p.size()) - 1; k >= 0; --k) acc = acc * z + p(k);
  return acc;
}

// lhs = ||p(C)||, rhs = (1+sqrt2) max |p| over boundary plus an interior grid.
inline BoundPair crouzeix_check(const CMatrix& C, const CVector& p, int n_angles = 720) {
  BoundPair out;
  out.actual = spectral_norm(poly_eval_matrix(p, C));
  RangeBoundary b = numerical_range(C, n_angles);
  cplx centroid = 0.0;
  for (cplx z : b.points) centroid += z;
  centroid /= double(b.points.size());
  double pmax = 0.0;
  for (cplx z : b.points)
    for (double t : {1.0, 0.75, 0.5, 0.25})
      pmax = std::max(pmax, std::abs(poly_eval(p, centroid + t * (z - centroid))));
  pmax = std::max(pmax, std::abs(poly_eval(p, centroid)));
  out.bound = (1.0 + std::sqrt(2.0)) * pmax;
  return out;
}

// ||p(C)|| against C0 kappa_S (deg/sqrt(delta))^{d_max-1} ||p||_{max,[a,b]}.
inline BoundPair bernstein_matrix_bound(const JordanTriple& jt, int d_max, const CVector& p,
                                        double a, double b, double delta, double C0) {
  BoundPair out;
  out.actual = spectral_norm(poly_eval_matrix(p, jt.A));
  double pmax = 0.0;
  const int M = 4001;
  for (int i = 0; i < M; ++i)
    pmax = std::max(pmax, std::abs(poly_eval(p, a + (b - a) * i / (M - 1))));
  int deg = int(p.size()) - 1;
  out.bound = C0 * jt.kappa_S * std::pow(deg / std::sqrt(delta), d_max - 1) * pmax;
  return out;
}

struct ExpNormBounds {
  double actual;
  double abscissa_bound;
  double jordan_bound;
};

inline ExpNormBounds exp_norm_bounds(const CMatrix& C, double tau,
                                     const JordanTriple* jt = nullptr, double C0 = 1.0) {
  ExpNormBounds out{};
  out.actual = spectral_norm((tau * C).exp());
  CMatrix H = (C + C.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  out.abscissa_bound = std::exp(tau * es.eigenvalues().maxCoeff());
  out.jordan_bound = -1.0;
  if (jt) {
    double mx = 0.0;
    int off = 0;
    const CMatrix& J = jt->J;
    while (off < J.rows()) {
      int sz = 1;
      while (off + sz < J.rows() && std::abs(J(off + sz, off + sz - 1) - 1.0) < 0.5) ++sz;
      cplx lam = J(off, off);
      mx = std::max(mx, std::pow(tau, sz - 1) * std::exp(tau * lam.real()));
      off += sz;
    }
    out.jordan_bound = C0 * jt->kappa_S * mx;
  }
  return out;
}

struct CarlesonCurves {
  std::vector<int> ns;
  std::vector<double> worst;  // max_w |S_n(p o cos)(w)| / ||p||_max
  std::vector<double> avg;    // mean over eigenphase draws of the maximal partial sum ratio
};

// One-sided partial sums S_n(w) = sum_{j<n} beta~_j e^{-ijw} (beta~_0 halved
// so the sums target p(cos w)).
inline CarlesonCurves carleson_experiment(const ChebExpansion& p, const std::vector<int>& ns,
                                          int trials, Rng& rng) {
  if (trials < 30) throw std::invalid_argument("carleson_experiment: trials >= 30");
  const int n_max = *std::max_element(ns.begin(), ns.end());
  CVector c = p.coeffs;
  if (c.size() < n_max) {
    CVector ext = CVector::Zero(n_max);
    ext.head(c.size()) = c;
    c = ext;
  }
  c(0) /= 2.0;  // plain convention for the sum itself
  double pmax = 0.0;
  {
    const int M = 1 << 12;
    for (int i = 0; i < M; ++i) {
      double w = kPi * i / (M - 1);
      cplx s = 0.0;
      for (int j = 0; j < c.size(); ++j) s += c(j) * std::cos(j * w);
      pmax = std::max(pmax, std::abs(s));
    }
  }
  CarlesonCurves out;
  out.ns = ns;
  // worst case over a frequency grid, incremental in n
  const int W = 1 << 12;
  std::vector<cplx> acc(W, 0.0);
  std::vector<double> worst_at(n_max + 1, 0.0);
  for (int j = 0; j < n_max; ++j) {
    for (int i = 0; i < W; ++i) {
      double w = kPi * i / (W - 1);
      acc[i] += c(j) * std::polar(1.0, -j * w);
    }
    double mx = 0.0;
    for (int i = 0; i < W; ++i) mx = std::max(mx, std::abs(acc[i]));
    worst_at[j + 1] = std::max(worst_at[j], mx);
  }
  for (int n : ns) out.worst.push_back(worst_at[n] / pmax);
  // average case: eigenphases uniform on [arccos(1/2), arccos(-1/2)]
  std::uniform_real_distribution<double> uw(std::acos(0.5), std::acos(-0.5));
  std::vector<std::vector<double>> maxima(trials);
  for (int t = 0; t < trials; ++t) {
    double w = uw(rng);
    cplx s = 0.0;
    double run = 0.0;
    maxima[t].resize(n_max + 1, 0.0);
    for (int j = 0; j < n_max; ++j) {
      s += c(j) * std::polar(1.0, -j * w);
      run = std::max(run, std::abs(s));
      maxima[t][j + 1] = run;
    }
  }
  for (int n : ns) {
    double mean = 0.0;
    for (int t = 0; t < trials; ++t) mean += maxima[t][n];
    out.avg.push_back(mean / (trials * pmax));
  }
  return out;
}

// Boundary polygon convexity via cross products (Toeplitz-Hausdorff check).
inline bool is_convex_polygon(const std::vector<cplx>& pts, double tol = 1e-8) {
  const int n = int(pts.size());
  double scale = 0.0;
  for (const cplx& z : pts) scale = std::max(scale, std::abs(z));
  for (int i = 0; i < n; ++i) {
    cplx a = pts[i], b = pts[(i + 1) % n], cc = pts[(i + 2) % n];
    cplx u = b - a, v = cc - b;
    double cross = u.real() * v.imag() - u.imag() * v.real();
    if (cross < -tol * std::max(scale * scale, 1.0)) return false;
  }
  return true;
}

inline bool point_in_hull(const std::vector<cplx>& boundary, cplx z, double margin = 1e-8) {
  // support-function test: z is inside if its projection never exceeds the
  // boundary's support in any direction
  const int K = 720;
  for (int k = 0; k < K; ++k) {
    double th = 2.0 * kPi * k / K;
    cplx dir = std::polar(1.0, th);
    double sup = -1e300;
    for (const cplx& b : boundary)
      sup = std::max(sup, b.real() * dir.real() + b.imag() * dir.imag());
    double pz = z.real() * dir.real() + z.imag() * dir.imag();
    if (pz > sup + margin) return false;
  }
  return true;
}

}  // namespace qevp
