#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rcl/errors.hpp"

namespace rcl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kClampTol = 1e-10;
inline constexpr double kRankTol = 1e-10;
inline constexpr double kRankFloor = 1e-12;
inline constexpr double kHermitianTol = 1e-10;

// Orthonormal basis of a subspace, stored as columns in the ambient space.
struct SubspaceBasis {
  Index ambient_dim = 0;
  ComplexMatrix vectors;  // ambient_dim x dim, Gram matrix = I to 1e-12
  double tol = kRankTol;

  Index dim() const { return vectors.cols(); }
  ComplexMatrix projector() const { return vectors * vectors.adjoint(); }
  // Coordinates of ambient columns in this basis.
  ComplexMatrix coords(const ComplexMatrix& ambient) const { return vectors.adjoint() * ambient; }
  ComplexMatrix lift(const ComplexMatrix& c) const { return vectors * c; }
};

bool all_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

double spectral_norm(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// (-clamp_tol, clamp_tol) are clamped to zero; anything below -clamp_tol
// raises IndefiniteMatrix.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double clamp_tol = kClampTol);

// Orthonormal basis of the column space: singular directions with
// sigma > rank_tol * sigma_max and sigma > 1e-12.
SubspaceBasis orthonormal_range(const ComplexMatrix& m, double rank_tol = kRankTol);

// 1 - sigma_max(m); nonnegative iff m is a contraction.
double contraction_margin(const ComplexMatrix& m);

// Smallest eigenvalue of a Hermitian matrix; nonnegative iff PSD.
// A 0x0 matrix is vacuously PSD with margin 1.
double psd_margin(const ComplexMatrix& m);

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rank_tol = kRankTol);
Index numerical_rank(const ComplexMatrix& m, double rank_tol = kRankTol);

}  // namespace rcl
