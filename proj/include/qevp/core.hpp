#pragma once

// Dense complex linear algebra carriers, block-encoding bookkeeping,
// shift matrices, centered modulus, and constructive Jordan test matrices.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qevp {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;

// Spectral norm by SVD. Desk scale only.
inline double spectral_norm(const CMatrix& M) {
  if (M.size() == 0) return 0.0;
  if (M.rows() == 1 || M.cols() == 1) return M.norm();
  if (M.rows() <= 32 && M.cols() <= 32) {
    Eigen::JacobiSVD<CMatrix> svd(M);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<CMatrix> svd(M);
  return svd.singularValues()(0);
}

inline double smallest_singular_value(const CMatrix& M) {
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

// (M, alpha) pair representing A = alpha*M with ||M|| <= 1.
struct BlockEncoding {
  CMatrix m;
  double alpha = 1.0;

  BlockEncoding() = default;
  BlockEncoding(CMatrix m_, double alpha_) : m(std::move(m_)), alpha(alpha_) {
    if (alpha <= 0.0) throw std::invalid_argument("BlockEncoding: alpha must be positive");
    if (spectral_norm(m) > 1.0 + 1e-12)
      throw std::invalid_argument("BlockEncoding: ||m|| exceeds 1");
  }

  CMatrix operator_matrix() const { return alpha * m; }
  Eigen::Index dim() const { return m.rows(); }

  static BlockEncoding from_operator(const CMatrix& A, double alpha) {
    return BlockEncoding(A / alpha, alpha);
  }
};

struct JordanSpec {
  std::vector<std::pair<cplx, int>> blocks;  // (eigenvalue, size)
  double kappa_target = 1.0;
  std::uint64_t seed = 0;

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.second;
    return d;
  }
  int d_max() const {
    int m = 0;
    for (const auto& b : blocks) m = std::max(m, b.second);
    return m;
  }
};

struct JordanTriple {
  CMatrix A, S, J;
  double kappa_S = 1.0;  // measured ||S|| ||S^-1||
};

inline CMatrix lower_shift(int n) {
  if (n < 1) throw std::invalid_argument("lower_shift: n >= 1 required");
  CMatrix L = CMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) L(k + 1, k) = 1.0;
  return L;
}

inline CMatrix cyclic_shift(int n) {
  CMatrix X = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) X((k + 1) % n, k) = 1.0;
  return X;
}

inline CMatrix random_unitary(int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ();
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    cplx r = R(j, j);
    Q.col(j) *= (std::abs(r) > 0.0) ? r / std::abs(r) : cplx(1.0, 0.0);
  }
  return Q;
}

inline CVector random_unit_vector(int d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return v / v.norm();
}

// A = S J S^-1 with J assembled from the block list and S = Q1 D Q2,
// D geometric between 1 and 1/kappa_target. Constructed, never decomposed.
inline JordanTriple build_from_jordan(const JordanSpec& spec) {
  const int d = spec.dim();
  if (d < 1 || d > 64) throw std::invalid_argument("build_from_jordan: dimension out of range");
  if (spec.kappa_target < 1.0) throw std::invalid_argument("build_from_jordan: kappa_target < 1");

  CMatrix J = CMatrix::Zero(d, d);
  int off = 0;
  for (const auto& [lam, sz] : spec.blocks) {
    if (sz < 1) throw std::invalid_argument("build_from_jordan: block size < 1");
    for (int i = 0; i < sz; ++i) {
      J(off + i, off + i) = lam;
      if (i + 1 < sz) J(off + i + 1, off + i) = 1.0;
    }
    off += sz;
  }

  Rng rng(spec.seed);
  CMatrix S;
  if (spec.kappa_target == 1.0) {
    S = random_unitary(d, rng);
  } else {
    CMatrix Q1 = random_unitary(d, rng);
    CMatrix Q2 = random_unitary(d, rng);
    RVector sv(d);
    for (int i = 0; i < d; ++i) {
      double t = (d > 1) ? double(i) / double(d - 1) : 0.0;
      sv(i) = std::pow(spec.kappa_target, -t);
    }
    S = Q1 * sv.cast<cplx>().asDiagonal() * Q2;
  }

  JordanTriple out;
  out.S = S;
  out.J = J;
  out.A = S * J * S.inverse();
  out.kappa_S = spectral_norm(S) * spectral_norm(S.inverse());
  return out;
}

// Max deviation of Pi X_{2n}^j Pi from L_n^j embedded in 2n dims. Exact zero expected.
inline double shift_encoding_check(int n, int j) {
  if (j < 0 || j > n - 1) throw std::invalid_argument("shift_encoding_check: j out of range");
  CMatrix X = cyclic_shift(2 * n);
  CMatrix Xj = CMatrix::Identity(2 * n, 2 * n);
  for (int k = 0; k < j; ++k) Xj = X * Xj;
  CMatrix Pi = CMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) Pi(k, k) = 1.0;
  CMatrix lhs = Pi * Xj * Pi;
  CMatrix L = lower_shift(n);
  CMatrix Lj = CMatrix::Identity(n, n);
  for (int k = 0; k < j; ++k) Lj = L * Lj;
  CMatrix rhs = CMatrix::Zero(2 * n, 2 * n);
  rhs.topLeftCorner(n, n) = Lj;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

// sqrt(max column sum of block norms) * sqrt(max row sum of block norms).
inline double block_norm_bound(const std::vector<std::vector<CMatrix>>& blocks) {
  const std::size_t rows = blocks.size();
  if (rows == 0) return 0.0;
  const std::size_t cols = blocks[0].size();
  for (const auto& r : blocks)
    if (r.size() != cols) throw std::invalid_argument("block_norm_bound: ragged grid");
  std::vector<std::vector<double>> nb(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) nb[i][j] = spectral_norm(blocks[i][j]);
  double max_row = 0.0, max_col = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += nb[i][j];
    max_row = std::max(max_row, s);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += nb[i][j];
    max_col = std::max(max_col, s);
  }
  return std::sqrt(max_col) * std::sqrt(max_row);
}

// Centered modulus, result in [-q/2, q/2); ties land on -q/2.
inline double cmod(double q, double x) {
  if (q <= 0.0) throw std::invalid_argument("cmod: q must be positive");
  double r = x - q * std::floor((x + q / 2.0) / q);
  if (r >= q / 2.0) r -= q;  // guard round-off at the boundary
  if (r < -q / 2.0) r += q;
  return r;
}

inline BlockEncoding rescale_encoding(const BlockEncoding& be, double alpha_new) {
  if (alpha_new < be.alpha) throw std::invalid_argument("rescale_encoding: alpha_new < alpha");
  BlockEncoding out;
  out.m = be.m * (be.alpha / alpha_new);
  out.alpha = alpha_new;
  return out;
}

inline CMatrix kron(const CMatrix& A, const CMatrix& B) {
  return Eigen::kroneckerProduct(A, B).eval();
}

inline CMatrix matrix_power(const CMatrix& M, int j) {
  CMatrix P = CMatrix::Identity(M.rows(), M.cols());
  for (int k = 0; k < j; ++k) P = M * P;
  return P;
}

}  // namespace qevp
