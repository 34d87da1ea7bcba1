#include "rcl/linalg.hpp"

#include <cmath>

namespace rcl {

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double clamp_tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_sqrt needs a square matrix");
  if (m.rows() == 0) return m;
  if (!is_hermitian(m)) throw NonHermitian("hermitian_sqrt input");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -clamp_tol) throw IndefiniteMatrix("eigenvalue " + std::to_string(ev(i)));
    ev(i) = ev(i) < clamp_tol ? 0.0 : std::sqrt(ev(i));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

SubspaceBasis orthonormal_range(const ComplexMatrix& m, double rank_tol) {
  SubspaceBasis b;
  b.ambient_dim = m.rows();
  b.tol = rank_tol;
  if (m.rows() == 0 || m.cols() == 0) {
    b.vectors = ComplexMatrix(m.rows(), 0);
    return b;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = std::max(rank_tol * sv(0), kRankFloor);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  b.vectors = svd.matrixU().leftCols(r);
  return b;
}

double contraction_margin(const ComplexMatrix& m) { return 1.0 - spectral_norm(m); }

double psd_margin(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("psd_margin needs a square matrix");
  if (m.rows() == 0) return 1.0;
  if (!is_hermitian(m)) throw NonHermitian("psd_margin input");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) return ComplexMatrix(m.cols(), m.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd sv = svd.singularValues();
  const double cut = std::max(rank_tol * sv(0), kRankFloor);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Index numerical_rank(const ComplexMatrix& m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = std::max(rank_tol * sv(0), kRankFloor);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

}  // namespace rcl
