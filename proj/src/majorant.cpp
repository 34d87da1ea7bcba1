#include "rcl/majorant.hpp"

#include <cmath>

namespace rcl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kGapRadii[] = {0.3, 0.6, 0.9, 0.99};
}  // namespace

TaylorFn v_from_theta(const TaylorFn& theta, int out_degree) {
  const Index a = theta.in_dim;
  TaylorFn v = TaylorFn::zero(a, a, out_degree);
  for (int n = 0; n <= out_degree; ++n) {
    ComplexMatrix s = ComplexMatrix::Zero(a, a);
    for (int nu = 0; nu + n <= theta.degree(); ++nu)
      s += theta.coeff(nu).adjoint() * theta.coeff(nu + n);
    v.coeffs[n] = n == 0 ? s : ComplexMatrix(2.0 * s);
  }
  return v;
}

double majorant_gap(const TaylorFn& theta, const TaylorFn& w, int n_samples) {
  if (w.out_dim != w.in_dim || w.in_dim != theta.in_dim)
    throw DimensionMismatch("majorant_gap: w must be square on theta's input space");
  if (n_samples < 8) throw Error("majorant_gap: need at least 8 samples per circle");
  double gap = 1.0;
  bool first = true;
  for (double r : kGapRadii)
    for (int k = 0; k < n_samples; ++k) {
      const double phi = kTwoPi * k / n_samples;
      const Complex lambda = r * Complex(std::cos(phi), std::sin(phi));
      const ComplexMatrix wl = eval(w, lambda);
      const ComplexMatrix tl = eval(theta, lambda);
      const double m = psd_margin((wl + wl.adjoint()) / 2.0 - tl.adjoint() * tl);
      gap = first ? m : std::min(gap, m);
      first = false;
    }
  return gap;
}

TaylorFn w_from_contraction_parameter(const GammaOp& g, const TaylorFn& c, int out_degree,
                                      double rank_tol, double tol) {
  const ComplexMatrix dg = gamma_defect(g);
  const SubspaceBasis dgb = orthonormal_range(dg, rank_tol);
  if (c.out_dim != dgb.dim() || c.in_dim != dgb.dim())
    throw DimensionMismatch("w_from_contraction_parameter: c must act on Gamma-defect coords");
  if (!schur_margin(c, c.degree() + 1).pass(tol))
    throw ParameterNotSchur("w_from_contraction_parameter: c margin below -tol");

  TaylorFn w = v_from_theta(g.theta, out_degree);
  const TaylorFn k = cayley(c, out_degree);
  const ComplexMatrix lift = dg * dgb.vectors;  // a x dg
  for (int n = 0; n <= out_degree; ++n) w.coeffs[n] += lift * k.coeff(n) * lift.adjoint();
  return w;
}

TaylorFn factor_delta(const GammaOp& g, const TaylorFn& w, double rank_tol, double tol) {
  if (w.out_dim != w.in_dim || w.in_dim != g.theta.in_dim)
    throw DimensionMismatch("factor_delta: w must be square on theta's input space");
  if (positive_real_margin(w, w.degree() + 1) < -tol)
    throw NotPositiveReal("factor_delta: w fails the section test");

  const TaylorFn v = v_from_theta(g.theta, w.degree());
  const ComplexMatrix dg = gamma_defect(g);
  const SubspaceBasis dgb = orthonormal_range(dg, rank_tol);
  const ComplexMatrix dr = dgb.coords(dg * dgb.vectors);  // restricted defect, PD
  const ComplexMatrix dr_inv = pseudo_inverse(dr, rank_tol);
  const ComplexMatrix lift = dg * dgb.vectors;

  TaylorFn k = TaylorFn::zero(dgb.dim(), dgb.dim(), w.degree());
  double residual = 0.0;
  for (int n = 0; n <= w.degree(); ++n) {
    const ComplexMatrix delta = w.coeff(n) - v.coeff(n);
    k.coeffs[n] = dr_inv * dgb.coords(delta * dgb.vectors) * dr_inv;
    residual = std::max(residual, spectral_norm(lift * k.coeffs[n] * lift.adjoint() - delta));
  }
  if (dgb.dim() > 0) {
    residual = std::max(residual, spectral_norm(k.coeffs[0] - ComplexMatrix::Identity(dgb.dim(), dgb.dim())));
    k.coeffs[0] = ComplexMatrix::Identity(dgb.dim(), dgb.dim());
  }
  if (residual > tol)
    throw ResidualTooLarge("factor_delta: residual " + std::to_string(residual));
  if (k.degree() >= 0 && positive_real_margin(k, k.degree() + 1) < -tol)
    throw NotPositiveReal("factor_delta: recovered K fails the section test");
  return k;
}

PoissonCheck poisson_cross_check(const TaylorFn& theta, Complex lambda, int n_nodes) {
  if (theta.out_dim != 1 || theta.in_dim != 1)
    throw NotScalar("poisson_cross_check: theta must be scalar-valued");
  if (std::abs(lambda) > 0.9 + 1e-12)
    throw OutsideDisk("poisson_cross_check: budget only holds for |lambda| <= 0.9");
  if (n_nodes < 16) throw Error("poisson_cross_check: need at least 16 nodes");

  PoissonCheck chk;
  chk.series = eval(v_from_theta(theta, theta.degree()), lambda)(0, 0);
  Complex acc = 0.0;
  for (int j = 0; j < n_nodes; ++j) {
    const double wj = kTwoPi * j / n_nodes;
    const Complex z(std::cos(wj), std::sin(wj));
    const Complex tv = eval(theta, z)(0, 0);
    acc += (z + lambda) / (z - lambda) * std::norm(tv);
  }
  chk.quadrature = acc / static_cast<double>(n_nodes);
  chk.mismatch = std::abs(chk.series - chk.quadrature);
  return chk;
}

}  // namespace rcl
