#ifndef SPECRECON_LINALG_HPP_
#define SPECRECON_LINALG_HPP_

#include <Eigen/Dense>

#include <stdexcept>

namespace specrecon {

inline Eigen::MatrixXd kronecker(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Block-diagonal expansion: `blocks` copies of `a` on the diagonal
// (identity-Kronecker form).
inline Eigen::MatrixXd expand_block_diagonal(const Eigen::MatrixXd& a,
                                             int blocks) {
  if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
  Eigen::MatrixXd out =
      Eigen::MatrixXd::Zero(a.rows() * blocks, a.cols() * blocks);
  for (int k = 0; k < blocks; ++k) {
    out.block(k * a.rows(), k * a.cols(), a.rows(), a.cols()) = a;
  }
  return out;
}

// Nearest-in-spirit PSD repair: symmetrize, then zero out negative
// eigenvalues. Used where a moment-matrix subtraction can go indefinite.
inline Eigen::MatrixXd clamp_to_psd(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
}

// Pseudoinverse-solve for a symmetric PSD system: returns pinv(a) * rhs.
// Eigenvalues below rel_tol * max_eigenvalue are treated as zero, so
// rank-deficient systems resolve to the minimum-norm solution on the range.
inline Eigen::MatrixXd psd_pseudo_solve(const Eigen::MatrixXd& a,
                                        const Eigen::MatrixXd& rhs,
                                        double rel_tol = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const double cutoff = lam.cwiseAbs().maxCoeff() * rel_tol;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > cutoff) inv(i) = 1.0 / lam(i);
  }
  return eig.eigenvectors() * inv.asDiagonal() *
         (eig.eigenvectors().transpose() * rhs);
}

inline Eigen::VectorXd tile_vector(const Eigen::VectorXd& v, int times) {
  Eigen::VectorXd out(v.size() * times);
  for (int k = 0; k < times; ++k) out.segment(k * v.size(), v.size()) = v;
  return out;
}

}  // namespace specrecon

#endif  // SPECRECON_LINALG_HPP_
