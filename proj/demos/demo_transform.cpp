// Small end-to-end walkthrough: build a Hermitian operator, run the history
// state, transform it with exp coefficients, and estimate an eigenvalue.

#include "qevp/estimate.hpp"
#include "qevp/transform.hpp"

#include <cstdio>

using namespace qevp;

int main() {
  Rng rng(2024);
  const int d = 4;
  CMatrix U = random_unitary(d, rng);
  RVector lam(d);
  lam << -0.7, -0.2, 0.3, 0.8;
  CMatrix A = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  BlockEncoding be = BlockEncoding::from_operator(A, 2.0);

  // history state sector weights for a modest evolution
  ChebExpansion coeffs = exp_coeffs(2.0, 24);
  CVector psi = random_unit_vector(d, rng);
  HistoryState h = chebyshev_history(be, coeffs, psi, 1, 0.0, rng);
  std::printf("history sector norms: %.6f %.6f\n", h.sector_norms[0], h.sector_norms[1]);

  // Schrodinger evolution fidelity against the dense exponential
  TransformReport rep = solve_diffeq(be, 1.5, psi, 1e-8, rng);
  std::printf("diffeq: n=%d fidelity=%.12f queries~%.1f\n", rep.n_used, rep.fidelity,
              rep.predicted_queries);

  // eigenvalue estimation from an exact eigenstate
  double est = qeve(be, U.col(2), 0.01, 0.01, rng);
  std::printf("qeve: estimate %.6f (true %.6f)\n", est, lam(2));
  return 0;
}
