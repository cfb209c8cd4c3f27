#pragma once

// Fourier-coefficient operator generation via frequency-domain convolution
// with the Dirichlet kernel, the quantized Riemann-integral oracle model,
// the rescaling principle, and Chebyshev-coefficient state preparation.

#include "qevp/cheby.hpp"
#include "qevp/core.hpp"
#include "qevp/transform.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace qevp {

struct FourierOracle {
  std::function<cplx(double)> g;  // periodic on [-pi, pi]
  double g_max = 1.0;
  double gprime_max = 1.0;

  void validate() const {
    const int M = 1 << 12;
    for (int i = 0; i < M; ++i) {
      double w = -kPi + 2.0 * kPi * i / M;
      if (std::abs(g(w)) > g_max * (1.0 + 1e-9))
        throw std::invalid_argument("FourierOracle: |g| exceeds g_max on grid");
    }
  }
};

inline CVector direct_fourier_coeffs(const FourierOracle& oracle, int n) {
  const int M = 1 << 13;
  std::vector<cplx> gv(M);
  for (int i = 0; i < M; ++i) gv[i] = oracle.g(-kPi + 2.0 * kPi * i / M);
  CVector xi(n);
  for (int j = 0; j < n; ++j) {
    cplx s = 0.0;
    for (int i = 0; i < M; ++i) {
      double w = -kPi + 2.0 * kPi * i / M;
      s += gv[i] * std::polar(1.0, j * w);
    }
    xi(j) = s / double(M);
  }
  return xi;
}

// Floor-quantized Riemann sum approximating int h / ((b-a) h_max), with the
// magnitude floor-discretized to n_abs levels and Arg in [0, 2pi) to n_arg.
inline cplx riemann_block(const std::function<cplx(double)>& h, double a, double b,
                          double h_max, int n_in, int n_abs, int n_arg) {
  if (h_max <= 0.0) throw std::invalid_argument("riemann_block: h_max must be positive");
  cplx sum = 0.0;
  for (int k = 0; k < n_in; ++k) {
    double x = a + (b - a) * k / n_in;  // left endpoints
    cplx v = h(x);
    double mag = std::min(std::abs(v) / h_max, 1.0);
    double qmag = std::floor(mag * n_abs) / n_abs;
    double arg = std::arg(v);
    if (arg < 0.0) arg += 2.0 * kPi;
    double qarg = std::floor(arg * n_arg / (2.0 * kPi)) * 2.0 * kPi / n_arg;
    sum += qmag * std::polar(1.0, qarg);
  }
  return sum / double(n_in);
}

inline double riemann_block_error_bound(double mu, double a, double b, double h_max, int n_in,
                                        int n_abs, int n_arg) {
  return 2.0 * kPi / n_arg + 1.0 / n_abs + mu * (b - a) / (2.0 * n_in * h_max);
}

struct FourierSizes {
  long long n_in = 0;        // per the pinned formula
  int n_in_effective = 0;    // evaluated sample count (capped at desk scale)
  int n_abs = 0;
  int n_arg = 0;
};

inline FourierSizes fourier_sizes(const FourierOracle& oracle, int n, double eps,
                                  int cap = 1 << 16) {
  FourierSizes s;
  double ln_n = std::log(std::max(double(n), 2.0));
  double v = 8.0 * (oracle.gprime_max * n * ln_n / (oracle.g_max * eps) +
                    double(n) * n * ln_n / eps);
  s.n_in = (long long)std::ceil(v);
  s.n_in_effective = int(std::min<long long>(s.n_in, cap));
  s.n_abs = int(std::ceil(8.0 / eps));
  s.n_arg = s.n_abs;
  return s;
}

struct ConvolutionParts {
  cplx part[4];
  double budget[4];   // normalization of each part
  double magnitude[4];
  cplx total;
};

// sum_{j<n} xi_j e^{-ij pi m / n} through the 4-part split of
// (1/pi) int_{-pi/2}^{pi/2} g(m pi/n - 2v) e^{-(n-1)iv} sin(nv)/sin(v) dv,
// with v = e^s rescaling away from the kernel peak.
inline ConvolutionParts rescaled_convolution(const FourierOracle& oracle, int n, int m,
                                             const FourierSizes& sizes) {
  const double w0 = m * kPi / n;
  auto kernel = [n](double v) -> double {
    if (std::abs(v) < 1e-14) return double(n);
    return std::sin(n * v) / std::sin(v);
  };
  auto integrand = [&](double v, int sgn) -> cplx {
    // sgn=+1: original variable; sgn=-1: mirrored v -> -v
    return oracle.g(w0 - 2.0 * sgn * v) *
           std::polar(1.0, -double(n - 1) * sgn * v) * kernel(v);
  };
  ConvolutionParts out;
  const double hmax_near = (kPi / 2.0) * n * oracle.g_max;
  const double hmax_far = (kPi / 2.0) * oracle.g_max;
  const double a_near = 0.0, b_near = kPi / (2.0 * n);
  const double a_far = std::log(kPi / (2.0 * n)), b_far = std::log(kPi / 2.0);
  const int n_in = sizes.n_in_effective;
  for (int side = 0; side < 2; ++side) {
    int sgn = side == 0 ? 1 : -1;
    // near part on [0, pi/2n]
    cplx rb = riemann_block([&](double v) { return integrand(v, sgn); }, a_near, b_near,
                            hmax_near, n_in, sizes.n_abs, sizes.n_arg);
    out.budget[2 * side] = (1.0 / kPi) * (b_near - a_near) * hmax_near;  // = pi/4 g_max
    out.part[2 * side] = out.budget[2 * side] * rb;
    // far part, v = e^s
    cplx rb2 = riemann_block(
        [&](double s) {
          double v = std::exp(s);
          return integrand(v, sgn) * v;
        },
        a_far, b_far, hmax_far, n_in, sizes.n_abs, sizes.n_arg);
    out.budget[2 * side + 1] = (1.0 / kPi) * (b_far - a_far) * hmax_far;  // = ln(n)/2 g_max
    out.part[2 * side + 1] = out.budget[2 * side + 1] * rb2;
  }
  out.total = 0.0;
  for (int i = 0; i < 4; ++i) {
    out.magnitude[i] = std::abs(out.part[i]);
    out.total += out.part[i];
  }
  return out;
}

inline int worker_count() {
  if (const char* env = std::getenv("QEVP_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

template <typename F>
inline void parallel_for(int count, F&& body) {
  int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

struct FourierOperator {
  BlockEncoding encoding;   // sum xi_j L^j / ((pi/2 + ln n) g_max)
  CVector diagonal;         // quantized convolution values at each m
  FourierSizes sizes;
  double normalization;     // (pi/2 + ln n) g_max
  double max_budget_ratio;  // max over m and parts of |part| / budget
};

// Assemble sum_{j<n} xi_j L^j by evaluating the convolution at every m and
// conjugating the diagonal with the 2n-point DFT; Pi (.) Pi picks the block.
inline FourierOperator fourier_coeff_operator(const FourierOracle& oracle, int n, double eps) {
  if (n > 512) throw std::invalid_argument("fourier_coeff_operator: n <= 512");
  FourierSizes sizes = fourier_sizes(oracle, n, eps);
  CVector diag(2 * n);
  RVector ratio = RVector::Zero(2 * n);
  parallel_for(2 * n, [&](int m) {
    ConvolutionParts cp = rescaled_convolution(oracle, n, m, sizes);
    diag(m) = cp.total;
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, cp.magnitude[i] / cp.budget[i]);
    ratio(m) = r;
  });
  const int N = 2 * n;
  CMatrix F(N, N);
  for (int l = 0; l < N; ++l)
    for (int j = 0; j < N; ++j) F(l, j) = std::polar(1.0 / std::sqrt(double(N)), -kPi * l * j / n);
  CMatrix op = (F.adjoint() * diag.asDiagonal() * F).topLeftCorner(n, n);
  double norm = (kPi / 2.0 + std::log(double(n))) * oracle.g_max;
  FourierOperator out{BlockEncoding(op / norm, norm), diag, sizes, norm, ratio.maxCoeff()};
  return out;
}

struct ChebCoeffStateResult {
  CVector coeff_state;    // reversed coefficient state
  CVector shifted_state;  // after (I - L^2), normalized
  double amp_cost;
};

// Chebyshev coefficient state via the Fourier route: g(w) = p(cos w) (already
// even), operator applied to |0>, index reverse, then the two-step difference.
inline ChebCoeffStateResult chebyshev_coeff_state(const ChebExpansion& coeffs, double eps) {
  const int n = coeffs.order();
  FourierOracle oracle;
  oracle.g = [coeffs](double w) { return cheb_expansion_eval(coeffs, std::cos(w)); };
  double gmax = 0.0, gpmax = 0.0;
  const int M = 1 << 12;
  cplx prev = oracle.g(-kPi);
  for (int i = 1; i <= M; ++i) {
    double w = -kPi + 2.0 * kPi * i / M;
    cplx v = oracle.g(w);
    gmax = std::max(gmax, std::abs(v));
    gpmax = std::max(gpmax, std::abs(v - prev) * M / (2.0 * kPi));
    prev = v;
  }
  oracle.g_max = gmax * (1.0 + 1e-6);
  oracle.gprime_max = gpmax * 1.5 + 1e-9;
  FourierOperator op = fourier_coeff_operator(oracle, n, eps);

  CVector col = op.encoding.m.col(0);  // (xi_j / alpha) = beta~_j / (2 alpha)
  CVector rev(n);
  for (int j = 0; j < n; ++j) rev(j) = col(n - 1 - j);
  CVector shifted(n);
  for (int j = 0; j < n; ++j) shifted(j) = rev(j) - (j >= 2 ? rev(j - 2) : cplx(0.0));

  ChebCoeffStateResult out;
  out.coeff_state = rev / rev.norm();
  double sn = shifted.norm();
  if (sn < 1e-300) throw std::invalid_argument("chebyshev_coeff_state: degenerate coefficients");
  out.shifted_state = shifted / sn;
  auto [sc, alpha_beta] = shifted_coeff_state(coeffs);
  (void)sc;
  out.amp_cost = 2.0 * op.normalization / alpha_beta;
  return out;
}

// Raw L1 norm of the Dirichlet kernel D_n = sum_{|j|<=n} e^{-ij w}.
inline double dirichlet_l1(int n) {
  const int M = 1 << 15;
  double s = 0.0;
  for (int i = 0; i < M; ++i) {
    double w = -kPi + 2.0 * kPi * (i + 0.5) / M;
    double d;
    double x = std::sin(w / 2.0);
    if (std::abs(x) < 1e-12) d = 2.0 * n + 1.0;
    else d = std::sin((n + 0.5) * w) / x;
    s += std::abs(d);
  }
  return s * 2.0 * kPi / M;
}

}  // namespace qevp
