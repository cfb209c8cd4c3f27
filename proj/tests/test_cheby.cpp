#include "qevp/cheby.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qevp;

TEST_CASE("trigonometric definitions of T, Ttilde, U") {
  Rng rng(1);
  std::uniform_real_distribution<double> uth(0.05, kPi - 0.05);
  for (int t = 0; t < 50; ++t) {
    double th = uth(rng);
    double x = std::cos(th);
    for (int j : {0, 1, 2, 7, 31, 64}) {
      REQUIRE(cheb_eval(ChebKind::T, j, x).real() ==
              Catch::Approx(std::cos(j * th)).margin(1e-10));
      double ttilde = (j == 0) ? 0.5 : std::cos(j * th);
      REQUIRE(cheb_eval(ChebKind::Ttilde, j, x).real() == Catch::Approx(ttilde).margin(1e-10));
      REQUIRE(cheb_eval(ChebKind::U, j, x).real() ==
              Catch::Approx(std::sin((j + 1) * th) / std::sin(th)).margin(1e-9));
    }
  }
}

TEST_CASE("Pell identity") {
  Rng rng(2);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    double x = ux(rng);
    for (int j : {1, 2, 5, 16, 64}) {
      cplx T = cheb_eval(ChebKind::T, j, x);
      cplx U = cheb_eval(ChebKind::U, j - 1, x);
      cplx pell = T * T - (x * x - 1.0) * U * U;
      REQUIRE(std::abs(pell - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("l2 norm bounds on the half interval") {
  const double c = std::sqrt(3.0) / 3.0;
  for (int n : {8, 16, 32, 64, 128, 256}) {
    for (int i = 0; i < 1000; ++i) {
      double x = -0.5 + double(i) / 999.0;
      double st = 0.0, stt = 0.0;
      for (int j = 0; j < n; ++j) {
        double T = cheb_eval(ChebKind::T, j, x).real();
        st += T * T;
        stt += (j == 0) ? 0.25 : T * T;
      }
      REQUIRE(st >= n / 2.0 - c - 1e-12);
      REQUIRE(st <= n / 2.0 + c + 1e-12);
      REQUIRE(stt >= n / 2.0 - c - 0.75 - 1e-12);
      REQUIRE(stt <= n / 2.0 + c - 0.75 + 1e-12);
    }
  }
}

TEST_CASE("exp coefficients match the quadrature and the function") {
  for (double tau : {0.5, 2.0, 10.0}) {
    int n = 32 + int(2 * tau);
    ChebExpansion e = exp_coeffs(tau, n);
    REQUIRE(std::abs(e.coeffs(0) -
                     2.0 * (tau == 0.0 ? 1.0 : std::cyl_bessel_j(0.0, tau))) <= 1e-14);
    ChebExpansion q = cheb_coeffs_numeric(
        [tau](cplx x) { return std::exp(cplx(0.0, -tau) * x); }, n);
    REQUIRE((e.coeffs - q.coeffs).cwiseAbs().maxCoeff() <= 1e-10);
    for (double x : {-0.9, -0.3, 0.0, 0.45, 1.0}) {
      cplx val = cheb_expansion_eval(e, x);
      cplx want = std::exp(cplx(0.0, -tau * x));
      REQUIRE(std::abs(val - want) <= 1e-9);
    }
  }
}

TEST_CASE("erf coefficients reproduce the error function") {
  for (double c : {2.0, 5.0}) {
    int n = int(8 * c) + 60;
    ChebExpansion e = erf_coeffs(c, n);
    for (int j = 0; j < n; j += 2) REQUIRE(e.coeffs(j) == cplx(0.0, 0.0));
    for (double x : {-0.8, -0.2, 0.0, 0.1, 0.6, 1.0}) {
      cplx val = cheb_expansion_eval(e, x);
      REQUIRE(std::abs(val - std::erf(c * x)) <= 1e-8);
    }
  }
}

TEST_CASE("scaled modified Bessel row switches branches consistently") {
  auto lo = scaled_bessel_i_row(49.0, 12);
  for (int k = 0; k <= 12; ++k) {
    double direct = std::exp(-49.0) * std::cyl_bessel_i(double(k), 49.0);
    REQUIRE(lo[k] == Catch::Approx(direct).epsilon(1e-12));
  }
  // above the switch the quadrature path must agree with the direct formula
  auto hi = scaled_bessel_i_row(60.0, 12);
  for (int k = 0; k <= 12; ++k) {
    double direct = std::exp(-60.0) * std::cyl_bessel_i(double(k), 60.0);
    REQUIRE(hi[k] == Catch::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("generating functions agree with closed forms") {
  Rng rng(3);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  std::uniform_real_distribution<double> uy(-0.8, 0.8);
  for (int t = 0; t < 50; ++t) {
    cplx x(ux(rng), 0.2 * ux(rng));
    cplx y(uy(rng), 0.4 * uy(rng));
    // T_j(x) grows like rho^j off the interval; keep |y| rho < 1
    cplx s = std::sqrt(x * x - 1.0);
    double rho = std::max(std::abs(x + s), std::abs(x - s));
    if (std::abs(y) * rho >= 0.8) continue;
    GenFunctionCheck g = gen_function_check(x, y);
    REQUIRE(std::abs(g.lhs_ttilde - g.rhs_ttilde) <= 1e-10 * (1.0 + std::abs(g.rhs_ttilde)));
    REQUIRE(std::abs(g.lhs_u - g.rhs_u) <= 1e-10 * (1.0 + std::abs(g.rhs_u)));
  }
  REQUIRE_THROWS_AS(gen_function_check(0.3, cplx(1.0, 0.2)), std::invalid_argument);
}

TEST_CASE("numeric coefficients recover Chebyshev orthogonality") {
  const int n = 24;
  for (int k : {0, 1, 3, 11}) {
    ChebExpansion e = cheb_coeffs_numeric(
        [k](cplx x) { return cheb_eval(ChebKind::T, k, x); }, n);
    for (int j = 0; j < n; ++j) {
      double want = (j == k) ? (k == 0 ? 2.0 : 1.0) : 0.0;
      REQUIRE(std::abs(e.coeffs(j) - want) <= 1e-12);
    }
  }
}

TEST_CASE("matrix Chebyshev evaluation matches the spectral calculus") {
  Rng rng(4);
  CMatrix U = random_unitary(4, rng);
  RVector lam(4);
  lam << -0.7, -0.1, 0.3, 0.9;
  CMatrix A = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  for (int j : {0, 1, 5, 12}) {
    CMatrix lhs = cheb_eval_matrix(ChebKind::T, j, A);
    RVector tv(4);
    for (int i = 0; i < 4; ++i) tv(i) = cheb_eval(ChebKind::T, j, lam(i)).real();
    CMatrix rhs = U * tv.cast<cplx>().asDiagonal() * U.adjoint();
    REQUIRE(spectral_norm(lhs - rhs) <= 1e-11);
  }
}

TEST_CASE("monomial coefficients of T_j") {
  CVector t5 = cheb_t_monomial(5);
  CVector want(6);
  want << 0.0, 5.0, 0.0, -20.0, 0.0, 16.0;
  REQUIRE((t5 - want).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(cheb_t_monomial(0)(0) == cplx(1.0, 0.0));
}

TEST_CASE("matrix exponential truncation bound calibrates then dominates") {
  JordanSpec spec;
  spec.blocks = {{cplx(-0.2, 0.0), 2}, {cplx(0.3, 0.0), 2}};
  spec.kappa_target = 4.0;
  spec.seed = 7;
  JordanTriple jt = build_from_jordan(spec);
  const double tau = 2.0;
  double C = 0.0;
  for (int n : {8, 12, 16, 20}) {
    BoundPair bp = matrix_exp_trunc_bound(jt, 2, tau, n, 1.0);
    if (n == 8) {
      C = 2.0 * bp.actual / bp.bound;
    } else {
      REQUIRE(bp.actual <= C * bp.bound);
    }
  }
}

TEST_CASE("expansion conventions stay consistent") {
  CVector c(4);
  c << cplx(2.0, 0.0), cplx(-1.0, 0.5), cplx(0.3, 0.0), cplx(0.0, 1.0);
  ChebExpansion e(c);
  // beta~_0 Ttilde_0 = beta~_0 / 2 at x where all higher terms vanish is
  // awkward to isolate; instead compare against a direct plain-T evaluation
  for (double x : {-0.6, 0.2, 0.9}) {
    cplx plain = (c(0) / 2.0) * cheb_eval(ChebKind::T, 0, x);
    for (int j = 1; j < 4; ++j) plain += c(j) * cheb_eval(ChebKind::T, j, x);
    REQUIRE(std::abs(cheb_expansion_eval(e, x) - plain) <= 1e-13);
  }
}
