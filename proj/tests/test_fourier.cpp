#include "qevp/fourier.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qevp;

namespace {

// band-limited test oracle g(w) = sum_k c_k e^{-ikw}, k = 0..K
FourierOracle harmonic_oracle(const std::vector<cplx>& c) {
  FourierOracle o;
  o.g = [c](double w) {
    cplx e = std::polar(1.0, -w), acc = 0.0;
    for (int k = int(c.size()) - 1; k >= 0; --k) acc = acc * e + c[k];
    return acc;
  };
  double cmax = 0.0, dmax = 0.0;
  for (int k = 0; k < int(c.size()); ++k) {
    cmax += std::abs(c[k]);
    dmax += k * std::abs(c[k]);
  }
  o.g_max = cmax * (1.0 + 1e-9);
  o.gprime_max = dmax + 1e-9;
  return o;
}

}  // namespace

TEST_CASE("direct coefficients pick out harmonics") {
  FourierOracle o = harmonic_oracle({cplx(0.3, 0.0), cplx(0.0, 0.5), cplx(-0.2, 0.1)});
  o.validate();
  CVector xi = direct_fourier_coeffs(o, 6);
  REQUIRE(std::abs(xi(0) - cplx(0.3, 0.0)) <= 1e-12);
  REQUIRE(std::abs(xi(1) - cplx(0.0, 0.5)) <= 1e-12);
  REQUIRE(std::abs(xi(2) - cplx(-0.2, 0.1)) <= 1e-12);
  for (int j = 3; j < 6; ++j) REQUIRE(std::abs(xi(j)) <= 1e-12);
}

TEST_CASE("oracle validation rejects an understated g_max") {
  FourierOracle o = harmonic_oracle({cplx(1.0, 0.0), cplx(0.5, 0.0)});
  o.g_max = 1.0;  // true max is 1.5 at w = 0
  REQUIRE_THROWS_AS(o.validate(), std::invalid_argument);
}

TEST_CASE("quantized Riemann block is exact on a saturating constant") {
  cplx r = riemann_block([](double) { return cplx(2.0, 0.0); }, 0.0, 1.0, 2.0, 64, 100, 100);
  REQUIRE(r == cplx(1.0, 0.0));
  REQUIRE_THROWS_AS(riemann_block([](double) { return cplx(1.0); }, 0.0, 1.0, 0.0, 8, 8, 8),
                    std::invalid_argument);
}

TEST_CASE("Riemann block error stays under the stated bound") {
  auto h = [](double x) { return std::exp(cplx(0.0, 1.0) * x) * (1.2 + 0.5 * std::sin(3.0 * x)); };
  const double a = 0.0, b = 1.5, h_max = 1.8;
  // mu: max |h'| on [a,b], crude overestimate
  const double mu = 1.8 + 1.5 * 1.2;
  const int M = 1 << 14;
  cplx exact = 0.0;
  for (int i = 0; i < M; ++i) exact += h(a + (b - a) * (i + 0.5) / M);
  exact *= 1.0 / (double(M) * h_max);
  for (int n_in : {256, 1024}) {
    for (int n_q : {128, 4096}) {
      cplx approx = riemann_block(h, a, b, h_max, n_in, n_q, n_q);
      double bound = riemann_block_error_bound(mu, a, b, h_max, n_in, n_q, n_q);
      REQUIRE(std::abs(approx - exact) <= bound);
    }
  }
}

TEST_CASE("sample-count formulas") {
  FourierOracle o = harmonic_oracle({cplx(1.0, 0.0)});
  o.g_max = 1.0;
  o.gprime_max = 2.0;
  FourierSizes s = fourier_sizes(o, 16, 1e-3);
  double ln16 = std::log(16.0);
  long long want =
      (long long)std::ceil(8.0 * (2.0 * 16.0 * ln16 / 1e-3 + 256.0 * ln16 / 1e-3));
  REQUIRE(s.n_in == want);
  REQUIRE(s.n_in_effective == int(std::min<long long>(want, 1 << 16)));
  REQUIRE(s.n_abs == 8000);
  REQUIRE(s.n_arg == 8000);
}

TEST_CASE("convolution parts respect their budgets and sum near the true value") {
  FourierOracle o = harmonic_oracle({cplx(0.4, 0.0), cplx(0.3, 0.2), cplx(0.0, -0.3)});
  const int n = 16;
  FourierSizes sizes = fourier_sizes(o, n, 1e-4);
  CVector xi = direct_fourier_coeffs(o, n);
  for (int m : {0, 3, 17, 31}) {
    ConvolutionParts cp = rescaled_convolution(o, n, m, sizes);
    for (int i = 0; i < 4; ++i) REQUIRE(cp.magnitude[i] <= cp.budget[i] * (1.0 + 1e-12));
    double btot = 0.0;
    for (int i = 0; i < 4; ++i) btot += cp.budget[i];
    REQUIRE(btot == Catch::Approx((kPi / 2.0 + std::log(double(n))) * o.g_max).epsilon(1e-12));
    cplx want = 0.0;
    for (int j = 0; j < n; ++j) want += xi(j) * std::polar(1.0, -kPi * j * m / double(n));
    REQUIRE(std::abs(cp.total - want) <= 1e-3);
  }
}

TEST_CASE("coefficient operator reproduces the lower shift series") {
  Rng rng(60);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double eps = 1e-4;
  struct Case {
    int n;
    int K;
  };
  for (Case c : {Case{16, 4}, Case{16, 7}, Case{64, 5}}) {
    std::vector<cplx> coef(c.K + 1);
    for (auto& v : coef) v = 0.3 * cplx(gauss(rng), gauss(rng));
    FourierOracle o = harmonic_oracle(coef);
    FourierOperator fop = fourier_coeff_operator(o, c.n, eps);
    REQUIRE(fop.max_budget_ratio <= 1.0 + 1e-12);
    REQUIRE(spectral_norm(fop.encoding.m) <= 1.0 + 1e-12);
    CVector xi = direct_fourier_coeffs(o, c.n);
    CMatrix want = CMatrix::Zero(c.n, c.n);
    CMatrix L = lower_shift(c.n), Lp = CMatrix::Identity(c.n, c.n);
    for (int j = 0; j < c.n; ++j) {
      want += xi(j) * Lp;
      Lp = L * Lp;
    }
    CMatrix got = fop.encoding.m * fop.normalization;
    double scale = want.cwiseAbs().maxCoeff();
    REQUIRE((got - want).cwiseAbs().maxCoeff() <= eps * std::max(scale, 1.0));
  }
}

TEST_CASE("Chebyshev coefficient state through the Fourier route") {
  CVector beta(12);
  beta.setZero();
  beta(0) = 0.6;
  beta(2) = -0.8;
  beta(5) = 0.4;
  beta(9) = -0.2;
  ChebExpansion e(beta);
  ChebCoeffStateResult res = chebyshev_coeff_state(e, 1e-4);
  // reversed coefficient state: beta~_j / 2 at slot n-1-j, normalized
  CVector want(12);
  for (int j = 0; j < 12; ++j) want(j) = beta(11 - j) / 2.0;
  want /= want.norm();
  REQUIRE((res.coeff_state - want).cwiseAbs().maxCoeff() <= 1e-3);
  auto [sc, alpha_beta] = shifted_coeff_state(e);
  REQUIRE((res.shifted_state - sc).cwiseAbs().maxCoeff() <= 1e-3);
  (void)alpha_beta;
  REQUIRE(res.amp_cost > 0.0);
}

TEST_CASE("Dirichlet kernel L1 closed form at n = 1") {
  REQUIRE(dirichlet_l1(1) == Catch::Approx(2.0 * kPi / 3.0 + 4.0 * std::sqrt(3.0)).margin(1e-4));
}

TEST_CASE("Lebesgue constant slope") {
  std::vector<double> xs, ys;
  for (int n : {64, 128, 256, 512}) {
    xs.push_back(std::log(double(n)));
    ys.push_back(dirichlet_l1(n) / (2.0 * kPi));
  }
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  double slope = num / den;
  double want = 4.0 / (kPi * kPi);
  REQUIRE(slope >= 0.9 * want);
  REQUIRE(slope <= 1.1 * want);
}
