#pragma once

#include <vector>

#include "rcl/linalg.hpp"

namespace rcl {

inline constexpr int kDefaultDegree = 32;
inline constexpr int kDefaultBoundarySamples = 64;

// Matrix-valued truncated Taylor series sum_n coeffs[n] lambda^n on the unit
// disk. Coefficients are out_dim x in_dim; there is always at least one.
struct TaylorFn {
  Index out_dim = 0;
  Index in_dim = 0;
  std::vector<ComplexMatrix> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const ComplexMatrix& coeff(int n) const { return coeffs[static_cast<size_t>(n)]; }
  // Coefficients beyond the stored degree are zero.
  ComplexMatrix coeff_or_zero(int n) const {
    if (n >= 0 && n <= degree()) return coeffs[static_cast<size_t>(n)];
    return ComplexMatrix::Zero(out_dim, in_dim);
  }

  static TaylorFn zero(Index out_dim, Index in_dim, int degree = 0);
  static TaylorFn constant(const ComplexMatrix& m, int degree = 0);
  static TaylorFn identity(Index dim, int degree = 0);
};

// Section norms certifying membership in the Schur class (values that are
// contractions on the disk). Both routes are necessary conditions; the
// section route is also sufficient as n_sections grows.
struct SchurCertificate {
  double section_margin = 0.0;
  double boundary_margin = 0.0;
  int sections_tested = 0;
  int samples_tested = 0;
  bool pass(double tol) const { return section_margin >= -tol && boundary_margin >= -tol; }
};

ComplexMatrix eval(const TaylorFn& t, Complex lambda);

TaylorFn add(const TaylorFn& a, const TaylorFn& b);
TaylorFn sub(const TaylorFn& a, const TaylorFn& b);
TaylorFn scaled(const TaylorFn& a, Complex s);
// Multiplication by lambda (coefficient index shift up), truncated.
TaylorFn shift_up(const TaylorFn& a, int out_degree);
TaylorFn vstack(const TaylorFn& top, const TaylorFn& bottom);
// Pad with zero coefficients or truncate to the requested degree.
TaylorFn resized(const TaylorFn& a, int degree);

// Pointwise product a(lambda) * b(lambda); Cauchy product of coefficients.
// Default output degree is min(a.degree, b.degree).
TaylorFn mul(const TaylorFn& a, const TaylorFn& b);
TaylorFn mul(const TaylorFn& a, const TaylorFn& b, int out_degree);

// Series inverse of t; requires sigma_min(t(0)) > 1e-10.
TaylorFn invert_unit(const TaylorFn& t, int out_degree);

// K = (I + lambda C)(I - lambda C)^{-1}; K(0) = I exactly.
TaylorFn cayley(const TaylorFn& c, int out_degree);
// Inverse map C = lambda^{-1}(K - I)(I + K)^{-1}; the lambda^{-1} is an exact
// coefficient index shift. Requires ||K(0) - I|| <= 1e-10.
TaylorFn inverse_cayley(const TaylorFn& k, int out_degree);

// n x n block Toeplitz section of the real part: diagonal (W0* + W0)/2,
// subdiagonal blocks W_k / 2, superdiagonal blocks W_k* / 2.
ComplexMatrix toeplitz_real_section(const TaylorFn& w, int n);

// min over n = 1..n_max of psd_margin(toeplitz_real_section(w, n));
// nonnegative iff all tested sections are PSD.
double positive_real_margin(const TaylorFn& w, int n_max);

SchurCertificate schur_margin(const TaylorFn& t, int n_sections,
                              int n_boundary_samples = kDefaultBoundarySamples);

// max over n <= through_degree of the spectral norm of the coefficient
// difference (degrees beyond either operand read as zero).
double max_coeff_dist(const TaylorFn& a, const TaylorFn& b, int through_degree);

}  // namespace rcl
