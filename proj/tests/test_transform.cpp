#include "qevp/transform.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qevp;

namespace {

BlockEncoding random_encoding(int d, Rng& rng, double scale = 0.5) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = cplx(gauss(rng), gauss(rng));
  return BlockEncoding(G * (scale / spectral_norm(G)), 1.0);
}

}  // namespace

TEST_CASE("shifted coefficient state") {
  CVector c(4);
  c << 1.0, 2.0, 3.0, 4.0;
  ChebExpansion e(c);
  auto [v, alpha] = shifted_coeff_state(e);
  CVector want(4);
  // slot n-1-k holds b_k - b_{k+2}
  want << 4.0, 3.0, -2.0, -2.0;
  REQUIRE(alpha == Catch::Approx(want.norm()).margin(1e-14));
  REQUIRE((v * alpha - want).cwiseAbs().maxCoeff() <= 1e-14);
  CVector z = CVector::Zero(3);
  REQUIRE_THROWS_AS(shifted_coeff_state(ChebExpansion(z)), std::invalid_argument);
}

TEST_CASE("state transformation matches direct polynomial application") {
  Rng rng(30);
  for (int inst = 0; inst < 50; ++inst) {
    const int d = 2 + inst % 4;
    const int n = 6 + inst % 7;
    BlockEncoding be = random_encoding(d, rng);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector beta(n);
    for (int j = 0; j < n; ++j) beta(j) = cplx(gauss(rng), gauss(rng));
    ChebExpansion coeffs{beta};
    CVector psi = random_unit_vector(d, rng);
    CVector direct = cheb_expansion_eval_matrix(coeffs, be.m) * psi;
    if (direct.norm() < 1e-3) continue;  // skip near-degenerate draws
    TransformReport rep = qevt(be, coeffs, psi, 0.0, rng);
    CVector want = direct / direct.norm();
    cplx phase = want(0) / rep.output(0);
    REQUIRE(std::abs(std::abs(phase) - 1.0) <= 1e-9);
    REQUIRE((rep.output * phase - want).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("amplitude ratio tracks the sector-1 weight") {
  Rng rng(31);
  const int d = 3, n = 10;
  BlockEncoding be = random_encoding(d, rng);
  ChebExpansion coeffs = exp_coeffs(1.0, n);
  CVector psi = random_unit_vector(d, rng);
  TransformReport rep = qevt(be, coeffs, psi, 0.0, rng);
  HistoryState h = chebyshev_history(be, coeffs, psi, 1, 0.0, rng);
  REQUIRE(rep.amp_ratio == Catch::Approx(1.0 / h.sector_norms[1]).epsilon(1e-10));
  REQUIRE(rep.predicted_queries == Catch::Approx(rep.amp_ratio * std::log(100.0)).epsilon(1e-10));
}

TEST_CASE("block-encoded transformation reproduces p(A/alpha)") {
  Rng rng(32);
  for (int inst = 0; inst < 10; ++inst) {
    const int d = 2 + inst % 3;
    const int n = 5 + inst % 5;
    BlockEncoding be = random_encoding(d, rng);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector beta(n);
    for (int j = 0; j < n; ++j) beta(j) = cplx(gauss(rng), gauss(rng));
    ChebExpansion coeffs{beta};
    BlockEncoding out = qevt_block(be, coeffs);
    CMatrix direct = cheb_expansion_eval_matrix(coeffs, be.m);
    REQUIRE((out.m * out.alpha - direct).cwiseAbs().maxCoeff() <= 1e-9);
    REQUIRE(spectral_norm(out.m) <= 1.0 + 1e-12);
  }
}

TEST_CASE("diffeq order grows with time and shrinks with accuracy") {
  REQUIRE(diffeq_order(1.0, 1.0, 1e-6, 1.0, 1) >= 4);
  REQUIRE(diffeq_order(1.0, 10.0, 1e-6, 1.0, 1) > diffeq_order(1.0, 1.0, 1e-6, 1.0, 1));
  REQUIRE(diffeq_order(1.0, 1.0, 1e-12, 1.0, 1) > diffeq_order(1.0, 1.0, 1e-3, 1.0, 1));
  REQUIRE(diffeq_order(1.0, 1.0, 1e-6, 1.0, 3) > diffeq_order(1.0, 1.0, 1e-6, 1.0, 1));
}

TEST_CASE("Hamiltonian simulation through the history state") {
  Rng rng(33);
  const int d = 5;
  CMatrix U = random_unitary(d, rng);
  RVector lam(d);
  lam << -0.8, -0.3, 0.1, 0.5, 0.9;
  CMatrix A = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  BlockEncoding be = BlockEncoding::from_operator(A, 2.0);
  CVector psi = random_unit_vector(d, rng);
  for (double t : {0.5, 3.0}) {
    TransformReport rep = solve_diffeq(be, t, psi, 1e-8, rng);
    REQUIRE(rep.fidelity >= 1.0 - 1e-8);
  }
}

TEST_CASE("ground state preparation on a gapped instance") {
  Rng rng(34);
  const int d = 5;
  CMatrix U = random_unitary(d, rng);
  RVector lam(d);
  const double delta = 0.4;
  lam << -delta / 2.0 - 0.1, delta / 2.0, delta / 2.0 + 0.15, 0.5, 0.8;
  CMatrix A = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  BlockEncoding be(A, 1.0);
  // initial state with |gamma_0| about 0.6
  CVector psi = 0.6 * U.col(0) + 0.8 * U.col(2);
  psi /= psi.norm();
  GroundOptions opt;
  opt.gamma0_abs = 0.5;
  const double eps = 1e-4;
  TransformReport rep = prepare_ground(be, delta, psi, eps, rng, opt);
  double overlap = std::abs(CVector(U.col(0)).dot(rep.output));
  REQUIRE(overlap >= 1.0 - eps);
  // filtering twice changes nothing measurable
  TransformReport rep2 = prepare_ground(be, delta, rep.output, eps, rng, opt);
  REQUIRE(std::abs(CVector(U.col(0)).dot(rep2.output)) >= 1.0 - eps);
}

TEST_CASE("ground parameter formulas") {
  GroundOptions opt;
  opt.gamma0_abs = 0.2;
  opt.kappa_S = 1.0;
  auto [c, n] = ground_params(1.0, 0.3, 1e-5, opt);
  double eps_t = std::min(0.2 * 1e-5 / 4.0, 0.1);
  double cw = 2.0 * (1.0 / 0.3) * std::sqrt(std::log(2.0 / (0.2 * eps_t)));
  REQUIRE(c == Catch::Approx(cw).epsilon(1e-12));
  REQUIRE(n == int(std::ceil(2.0 * cw + cw * std::sqrt(2.0 * std::log(1.0 / eps_t)))) + 8);
}

TEST_CASE("perturbed normalized application stays within the two-term bound") {
  Rng rng(35);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const int d = 4;
    CMatrix C(d, d), dC(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        C(i, j) = cplx(gauss(rng), gauss(rng));
        dC(i, j) = 0.02 * cplx(gauss(rng), gauss(rng));
      }
    CVector psi = random_unit_vector(d, rng);
    CVector psit = perturb_unit(psi, 0.03, rng);
    CVector a = C * psi;
    CVector b = (C + dC) * psit;
    if (a.norm() < 0.3) continue;
    double lhs = (b / b.norm() - a / a.norm()).norm();
    double rhs = 2.0 * (spectral_norm(dC) + spectral_norm(C) * (psit - psi).norm()) / a.norm();
    REQUIRE(lhs <= rhs + 1e-12);
  }
}

TEST_CASE("sign truncation bound calibrates then dominates") {
  JordanSpec spec;
  spec.blocks = {{cplx(-0.35, 0.0), 2}, {cplx(0.3, 0.0), 2}};
  spec.kappa_target = 3.0;
  spec.seed = 11;
  JordanTriple jt = build_from_jordan(spec);
  const double c = 16.0, delta_tilde = 0.25;
  double C0 = 0.0;
  for (int n : {60, 90, 120, 150}) {
    BoundPair raw = matrix_sign_trunc_check(jt, 2, c, n, delta_tilde, 1.0);
    if (n == 60) {
      C0 = 2.0 * raw.actual / raw.bound;
    } else {
      BoundPair bp = matrix_sign_trunc_check(jt, 2, c, n, delta_tilde, C0);
      REQUIRE(bp.actual <= bp.bound);
    }
  }
}
