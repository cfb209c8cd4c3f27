#include "qevp/analysis.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qevp;

TEST_CASE("numerical range of a Hermitian matrix is the spectral segment") {
  Rng rng(70);
  CMatrix U = random_unitary(4, rng);
  RVector lam(4);
  lam << -0.9, -0.2, 0.4, 0.7;
  CMatrix H = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  RangeBoundary b = numerical_range(H, 360);
  for (cplx z : b.points) {
    REQUIRE(std::abs(z.imag()) <= 1e-10);
    REQUIRE(z.real() >= -0.9 - 1e-10);
    REQUIRE(z.real() <= 0.7 + 1e-10);
  }
  double lo = 1e300, hi = -1e300;
  for (cplx z : b.points) {
    lo = std::min(lo, z.real());
    hi = std::max(hi, z.real());
  }
  REQUIRE(lo == Catch::Approx(-0.9).margin(1e-9));
  REQUIRE(hi == Catch::Approx(0.7).margin(1e-9));
}

TEST_CASE("numerical range of the shift is a disk of radius cos(pi/(n+1))") {
  const int n = 8;
  RangeBoundary b = numerical_range(lower_shift(n), 720);
  const double rad = std::cos(kPi / (n + 1.0));
  double mn = 1e300, mx = 0.0;
  for (cplx z : b.points) {
    mn = std::min(mn, std::abs(z));
    mx = std::max(mx, std::abs(z));
  }
  REQUIRE(mx == Catch::Approx(rad).margin(1e-6));
  REQUIRE(mn == Catch::Approx(rad).margin(1e-6));
}

TEST_CASE("numerical range of a normal matrix is the eigenvalue hull") {
  Rng rng(71);
  CMatrix U = random_unitary(5, rng);
  CVector eig(5);
  eig << cplx(0.4, 0.3), cplx(-0.5, 0.1), cplx(0.0, -0.6), cplx(0.2, 0.0), cplx(-0.1, 0.5);
  CMatrix A = U * eig.asDiagonal() * U.adjoint();
  RangeBoundary b = numerical_range(A, 360);
  std::vector<cplx> hull(eig.data(), eig.data() + 5);
  for (cplx z : b.points) REQUIRE(point_in_hull(hull, z, 1e-8));
  REQUIRE(is_convex_polygon(b.points, 1e-6));
  // eigenvalues sit inside the range
  for (cplx lam : hull) REQUIRE(point_in_hull(b.points, lam, 1e-8));
}

TEST_CASE("real part of the range projects correctly") {
  Rng rng(72);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix C(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) C(i, j) = 0.4 * cplx(gauss(rng), gauss(rng));
  RangeBoundary b = numerical_range(C, 720);
  double max_re = -1e300;
  for (cplx z : b.points) max_re = std::max(max_re, z.real());
  CMatrix H = (C + C.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  REQUIRE(max_re == Catch::Approx(es.eigenvalues().maxCoeff()).margin(1e-8));
}

TEST_CASE("pseudospectrum of a normal matrix is the eigenvalue distance") {
  Rng rng(73);
  CMatrix U = random_unitary(3, rng);
  CVector eig(3);
  eig << cplx(0.3, 0.2), cplx(-0.4, 0.0), cplx(0.0, -0.3);
  CMatrix A = U * eig.asDiagonal() * U.adjoint();
  PseudospecGrid g = pseudospectrum(A, 0.1, -0.6, 0.6, -0.5, 0.5, 12, 12);
  for (size_t i = 0; i < g.grid.size(); ++i) {
    double want = 1e300;
    for (int k = 0; k < 3; ++k) want = std::min(want, std::abs(g.grid[i] - eig(k)));
    REQUIRE(g.sigma_min[i] == Catch::Approx(want).margin(1e-9));
  }
  REQUIRE_THROWS_AS(pseudospectrum(A, 0.1, -1, 1, -1, 1, 300, 300), std::invalid_argument);
}

TEST_CASE("pseudospectrum sits inside the delta-inflated numerical range") {
  Rng rng(74);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix C(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) C(i, j) = 0.3 * cplx(gauss(rng), gauss(rng));
  const double delta = 0.05;
  PseudospecGrid g = pseudospectrum(C, delta, -1.5, 1.5, -1.5, 1.5, 24, 24);
  RangeBoundary b = numerical_range(C, 360);
  for (size_t i = 0; i < g.grid.size(); ++i) {
    if (g.sigma_min[i] > delta) continue;  // outside the delta level set
    REQUIRE(point_in_hull(b.points, g.grid[i], delta + 1e-8));
  }
}

TEST_CASE("polynomial norm on the shift against the range maximum") {
  const int n = 8;
  CMatrix L = lower_shift(n);
  CVector p = CVector::Zero(6);
  p(5) = 1.0;  // z^5
  BoundPair bp = crouzeix_check(L, p, 720);
  REQUIRE(bp.actual == Catch::Approx(1.0).margin(1e-10));
  double rad = std::cos(kPi / (n + 1.0));
  REQUIRE(bp.bound == Catch::Approx((1.0 + std::sqrt(2.0)) * std::pow(rad, 5)).margin(1e-4));
  REQUIRE(bp.actual <= bp.bound);
}

TEST_CASE("Crouzeix holds across random instances") {
  Rng rng(75);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 25; ++t) {
    const int d = 2 + t % 5;
    CMatrix C(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) C(i, j) = 0.5 * cplx(gauss(rng), gauss(rng));
    const int deg = 1 + t % 8;
    CVector p(deg + 1);
    for (int k = 0; k <= deg; ++k) p(k) = cplx(gauss(rng), gauss(rng));
    BoundPair bp = crouzeix_check(C, p, 360);
    REQUIRE(bp.actual <= bp.bound * (1.0 + 1e-9));
  }
}

TEST_CASE("Bernstein bound collapses to kappa for diagonalizable input") {
  JordanSpec spec;
  spec.blocks = {{cplx(-0.3, 0.0), 1}, {cplx(0.1, 0.0), 1}, {cplx(0.4, 0.0), 1}};
  spec.kappa_target = 6.0;
  spec.seed = 5;
  JordanTriple jt = build_from_jordan(spec);
  CVector p(4);
  p << cplx(0.2, 0.0), cplx(-1.0, 0.0), cplx(0.0, 0.3), cplx(0.7, 0.0);
  BoundPair bp = bernstein_matrix_bound(jt, 1, p, -0.5, 0.5, 0.1, 1.0);
  double pmax = 0.0;
  for (int i = 0; i < 2001; ++i) {
    double x = -0.5 + i / 2000.0;
    pmax = std::max(pmax, std::abs(poly_eval(p, x)));
  }
  REQUIRE(bp.bound == Catch::Approx(6.0 * pmax).epsilon(1e-3));
  REQUIRE(bp.actual <= bp.bound);
}

TEST_CASE("exponential norm bounds") {
  // anti-Hermitian: norm exactly one, abscissa bound exactly one
  Rng rng(76);
  CMatrix U = random_unitary(4, rng);
  RVector lam(4);
  lam << -0.8, -0.1, 0.3, 0.9;
  CMatrix H = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  CMatrix K = cplx(0.0, 1.0) * H;
  ExpNormBounds eb = exp_norm_bounds(K, 3.0);
  REQUIRE(eb.actual == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(eb.abscissa_bound == Catch::Approx(1.0).margin(1e-10));

  // strictly dissipative: decay at the abscissa rate
  CMatrix D = -0.5 * CMatrix::Identity(3, 3) + 0.1 * cplx(0.0, 1.0) * CMatrix::Identity(3, 3);
  ExpNormBounds eb2 = exp_norm_bounds(D, 10.0);
  REQUIRE(eb2.actual <= std::exp(-5.0) * (1.0 + 1e-9));
  REQUIRE(eb2.abscissa_bound == Catch::Approx(std::exp(-5.0)).epsilon(1e-9));

  // Jordan block: polynomial factor in the bound tracks the true growth
  JordanSpec spec;
  spec.blocks = {{cplx(0.0, 0.0), 2}};
  spec.kappa_target = 1.0;
  spec.seed = 3;
  JordanTriple jt = build_from_jordan(spec);
  ExpNormBounds e4 = exp_norm_bounds(jt.A, 4.0, &jt, 1.0);
  ExpNormBounds e8 = exp_norm_bounds(jt.A, 8.0, &jt, 1.0);
  REQUIRE(e8.jordan_bound / e4.jordan_bound == Catch::Approx(2.0).epsilon(1e-10));
  REQUIRE(e8.actual / e4.actual == Catch::Approx(2.0).epsilon(0.1));
  // ||I + 4 N|| = 2 + sqrt(5) for the 2x2 nilpotent block
  REQUIRE(e4.actual == Catch::Approx(2.0 + std::sqrt(5.0)).margin(1e-9));
}

TEST_CASE("partial sums of a decaying expansion stay flat") {
  const int n_max = 1024;
  CVector c(n_max);
  for (int j = 0; j < n_max; ++j) c(j) = std::pow(2.0, -double(j));
  ChebExpansion p(c);
  Rng rng(77);
  CarlesonCurves cc = carleson_experiment(p, {128, 256, 512, 1024}, 30, rng);
  for (size_t i = 1; i < cc.worst.size(); ++i)
    REQUIRE(cc.worst[i] <= cc.worst[0] * 1.01 + 1e-12);
  for (double a : cc.avg) REQUIRE(a <= cc.worst.back() + 1e-12);
  REQUIRE_THROWS_AS(carleson_experiment(p, {128}, 10, rng), std::invalid_argument);
}

TEST_CASE("adversarial expansion grows like log n in the worst case only") {
  const int n_max = 2048;
  CVector c(n_max);
  c(0) = 0.0;
  for (int j = 1; j < n_max; ++j) c(j) = std::sin(1.3 * j) / j;
  ChebExpansion p(c);
  Rng rng(78);
  std::vector<int> ns = {256, 512, 1024, 2048};
  CarlesonCurves cc = carleson_experiment(p, ns, 30, rng);
  for (size_t i = 0; i < ns.size(); ++i) {
    double r = cc.worst[i] / std::log(double(ns[i]));
    REQUIRE(r >= 0.2);
    REQUIRE(r <= 0.8);
  }
  // averages stay bounded while the worst case climbs
  REQUIRE(cc.avg.back() <= 3.0 * cc.avg.front());
  REQUIRE(cc.worst.back() > cc.worst.front());
}

TEST_CASE("convexity and hull membership helpers") {
  std::vector<cplx> square = {cplx(1, 1), cplx(-1, 1), cplx(-1, -1), cplx(1, -1)};
  REQUIRE(is_convex_polygon(square));
  REQUIRE(point_in_hull(square, cplx(0.2, -0.4)));
  REQUIRE(!point_in_hull(square, cplx(1.4, 0.0)));
  std::vector<cplx> bent = {cplx(0, 0), cplx(2, 0), cplx(1, 0.2), cplx(1, 2)};
  REQUIRE(!is_convex_polygon(bent));
}
