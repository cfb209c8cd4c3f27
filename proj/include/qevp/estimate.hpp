#pragma once

// Chebyshev-state phase estimation, eigenvalue estimation, and leading
// eigenvalue estimation from the power-series (Fourier) state.

#include "qevp/histstate.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <limits>
#include <optional>

namespace qevp {

struct QpeOutcome {
  RVector distribution;       // over l in {0..n-1}
  int sample = -1;
  double estimate = 0.0;      // alpha * cos(2 pi l / n)
};

// Unscaled forward DFT: out[l] = sum_j in[j] e^{-2 pi i j l / n}.
inline CVector dft_forward(const CVector& in) {
  Eigen::FFT<double> fft;
  std::vector<cplx> tin(in.data(), in.data() + in.size());
  std::vector<cplx> tout(in.size());
  fft.fwd(tout, tin);
  return Eigen::Map<CVector>(tout.data(), Eigen::Index(tout.size()));
}

inline int sample_distribution(const RVector& p, Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double u = uni(rng), acc = 0.0;
  for (int l = 0; l < p.size(); ++l) {
    acc += p(l);
    if (u <= acc) return l;
  }
  return int(p.size()) - 1;
}

// QFT + measurement on a register-1 state, exact outcome distribution.
// state may carry a d-dimensional system factor (length n*d, l-major).
inline QpeOutcome chebyshev_qpe(const CVector& state, int n1, double alpha = 1.0,
                                Rng* rng = nullptr, int d = 1) {
  const int n = int(state.size()) / d;
  if (n % std::max(n1, 1) != 0)
    throw std::invalid_argument("chebyshev_qpe: n must be a multiple of n1");
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("chebyshev_qpe: non-unit input");
  QpeOutcome out;
  out.distribution = RVector::Zero(n);
  for (int s = 0; s < d; ++s) {
    CVector col(n);
    for (int l = 0; l < n; ++l) col(l) = state(l * d + s);
    CVector f = dft_forward(col) / std::sqrt(double(n));
    for (int l = 0; l < n; ++l) out.distribution(l) += std::norm(f(l));
  }
  double tot = out.distribution.sum();
  out.distribution /= tot;  // guard round-off; tot == 1 up to machine precision
  int l;
  if (rng) {
    l = sample_distribution(out.distribution, *rng);
  } else {
    out.distribution.maxCoeff(&l);
  }
  out.sample = l;
  out.estimate = alpha * std::cos(2.0 * kPi * l / n);
  return out;
}

// Circular median under cmod distance; pass q = infinity for the plain median.
inline double median_amplify(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("median_amplify: empty input");
  if (!std::isfinite(q)) {
    std::sort(samples.begin(), samples.end());
    return samples[(samples.size() - 1) / 2];
  }
  double best = samples[0], best_cost = std::numeric_limits<double>::infinity();
  for (double s : samples) {
    double cost = 0.0;
    for (double t : samples) cost += std::abs(cmod(q, s - t));
    if (cost < best_cost) {
      best_cost = cost;
      best = s;
    }
  }
  return best;
}

// Exact success probability of Chebyshev-state QPE at eigenphase phi:
// the Ttilde-normalized state, exact outcome distribution, success when
// |cos(2 pi l / n) - cos(2 pi phi)| <= 2 pi n1 / n.
inline double qpe_success_probability(double phi, int n, int n1) {
  const double x = std::cos(2.0 * kPi * phi);
  CVector v(n);
  double Tm1 = 1.0, T0 = x;
  for (int l = 0; l < n; ++l) {
    double Tl;
    if (l == 0) Tl = 0.5;
    else if (l == 1) Tl = x;
    else {
      double tn = 2.0 * x * T0 - Tm1;
      Tm1 = T0;
      T0 = tn;
      Tl = tn;
    }
    v(l) = Tl;
  }
  v /= v.norm();
  CVector f = dft_forward(v) / std::sqrt(double(n));
  const double tol = 2.0 * kPi * n1 / n;
  double p = 0.0;
  for (int l = 0; l < n; ++l)
    if (std::abs(std::cos(2.0 * kPi * l / n) - x) <= tol) p += std::norm(f(l));
  return p;
}

// Single-shot estimate at a fixed order n (no repetition); used by the
// scaling sweeps where n is the independent variable.
inline double qeve_single(const BlockEncoding& be, const CVector& psi, int n, Rng& rng,
                          int n1 = 5, double eps_lin = 0.0) {
  CVector beta = CVector::Zero(n);
  beta(n - 1) = 1.0;
  ChebExpansion coeffs{beta};
  HistoryState h = chebyshev_history(be, coeffs, psi, 0, eps_lin, rng);
  QpeOutcome o = chebyshev_qpe(h.amps, n1, be.alpha, &rng, int(be.dim()));
  return o.estimate;
}

struct QeveOptions {
  int n1 = 5;
  double eps_lin = 0.0;
  double eps_init_scale = 1.0;  // tunable constant in the eps_init tolerance
};

// Eigenvalue estimation: eta=0 history with only beta~_{n-1} = 1, QFT,
// median amplification. Requires alpha_A >= 2||A|| upstream.
inline double qeve(const BlockEncoding& be, const CVector& psi, double eps, double p_fail,
                   Rng& rng, const QeveOptions& opt = {}) {
  const int n1 = opt.n1;
  int n = int(std::ceil(2.0 * kPi * be.alpha * n1 / eps));
  n = ((n + n1 - 1) / n1) * n1;
  if (n < 2 * n1) n = 2 * n1;
  CVector beta = CVector::Zero(n);
  beta(n - 1) = 1.0;
  ChebExpansion coeffs{beta};
  int reps = 2 * int(std::ceil(std::log2(1.0 / std::max(p_fail, 1e-12)))) + 1;
  std::vector<double> estimates;
  estimates.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    HistoryState h = chebyshev_history(be, coeffs, psi, 0, opt.eps_lin, rng);
    QpeOutcome o = chebyshev_qpe(h.amps, n1, be.alpha, &rng, int(be.dim()));
    estimates.push_back(o.estimate);
  }
  return median_amplify(std::move(estimates), std::numeric_limits<double>::infinity());
}

struct DistanceBoundPair {
  double distance;
  double bound;
};

// Distance between the Ttilde- and T-normalized Chebyshev states at x.
inline DistanceBoundPair rescaled_state_distance(double x, int n) {
  if (x < -0.5 || x > 0.5) throw std::invalid_argument("rescaled_state_distance: |x| <= 1/2");
  RVector t(n), tt(n);
  double Tm1 = 1.0, T0 = x;
  for (int j = 0; j < n; ++j) {
    double Tj;
    if (j == 0) Tj = 1.0;
    else if (j == 1) Tj = x;
    else {
      double tn = 2.0 * x * T0 - Tm1;
      Tm1 = T0;
      T0 = tn;
      Tj = tn;
    }
    t(j) = Tj;
    tt(j) = (j == 0) ? 0.5 : Tj;
  }
  DistanceBoundPair out;
  out.distance = (tt / tt.norm() - t / t.norm()).norm();
  double base = n / 2.0 - std::sqrt(3.0) / 3.0;
  out.bound = (3.0 / 8.0) / (std::sqrt(base) * std::sqrt(base - 0.75)) + 0.5 / std::sqrt(base);
  return out;
}

// Power-series (Fourier) state + standard QPE for a leading eigenphase.
// Solves (I (x) I - L (x) A/lambda_max) x = |0> psi by forward substitution.
inline double leading_eigenvalue_qpe(const BlockEncoding& be, double lambda_max,
                                     const CVector& psi_theta, int n, Rng& rng,
                                     int n1 = 5, int reps = 15, double eps_lin = 0.0) {
  const int d = int(be.dim());
  CMatrix Asc = be.operator_matrix() / lambda_max;
  std::vector<CVector> x(n);
  x[0] = psi_theta;
  for (int j = 1; j < n; ++j) x[j] = Asc * x[j - 1];
  CVector full(n * d);
  for (int j = 0; j < n; ++j) full.segment(j * d, d) = x[j];
  full /= full.norm();
  std::vector<double> thetas;
  thetas.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    CVector st = perturb_unit(full, eps_lin, rng);
    // e^{i j theta} phases: the forward DFT peaks at l ~ n theta / (2 pi)
    RVector dist = RVector::Zero(n);
    for (int s = 0; s < d; ++s) {
      CVector col(n);
      for (int l = 0; l < n; ++l) col(l) = st(l * d + s);
      CVector f = dft_forward(col) / std::sqrt(double(n));
      for (int l = 0; l < n; ++l) dist(l) += std::norm(f(l));
    }
    dist /= dist.sum();
    int l = sample_distribution(dist, rng);
    thetas.push_back(2.0 * kPi * l / n);
  }
  (void)n1;
  return median_amplify(std::move(thetas), 2.0 * kPi);
}

}  // namespace qevp
