#include "rcl/param_map.hpp"

#include <cmath>

namespace rcl {

SOmegaReport s_omega_margin(const TaylorFn& c, const BigOmegaData& bo, double tol) {
  if (c.out_dim != bo.dg() || c.in_dim != bo.dg())
    throw DimensionMismatch("s_omega_margin: c must act on Gamma-defect coords");
  SOmegaReport rep;
  rep.cert = schur_margin(c, c.degree() + 1);
  const ComplexMatrix xc = bo.dgamma_basis.coords(bo.FGamma_basis.vectors);  // dg x fg
  rep.restriction_residual = 0.0;
  for (int n = 0; n <= c.degree(); ++n) {
    const ComplexMatrix want =
        n == 0 ? bo.Omega : ComplexMatrix::Zero(bo.dg(), bo.fg());
    rep.restriction_residual =
        std::max(rep.restriction_residual, spectral_norm(c.coeff(n) * xc - want));
  }
  rep.pass = rep.cert.pass(tol) && rep.restriction_residual <= tol;
  return rep;
}

TaylorFn canonical_parameter(const BigOmegaData& bo) {
  const ComplexMatrix xc = bo.dgamma_basis.coords(bo.FGamma_basis.vectors);
  return TaylorFn::constant(bo.Omega * xc.adjoint());
}

TaylorFn parameter_to_constrained(const BigOmegaData& bo, const TaylorFn& c1, int out_degree,
                                  double tol) {
  if (c1.out_dim != bo.sg() || c1.in_dim != bo.gg())
    throw DimensionMismatch(
        "parameter_to_constrained: c1 must map G_Gamma coords to Omega*-defect coords");
  if (!schur_margin(c1, c1.degree() + 1).pass(tol))
    throw ParameterNotSchur("parameter_to_constrained: c1 margin below -tol");

  const ComplexMatrix base = canonical_parameter(bo).coeff(0);
  const ComplexMatrix lift = bo.OmegaStar_defect * bo.OmegaStar_basis.vectors;  // dg x sg
  const ComplexMatrix pg = bo.dgamma_basis.coords(bo.GGamma_basis.vectors).adjoint();  // gg x dg

  TaylorFn c = TaylorFn::zero(bo.dg(), bo.dg(), out_degree);
  for (int n = 0; n <= out_degree; ++n) {
    c.coeffs[n] = lift * c1.coeff_or_zero(n) * pg;
    if (n == 0) c.coeffs[n] += base;
  }
  return c;
}

SchurPair j_gamma(const GammaOp& g, const TaylorFn& c, int out_degree, const BigOmegaData* bo,
                  double rank_tol, double* bias_deviation) {
  if (bo) {
    const SOmegaReport rep = s_omega_margin(c, *bo);
    if (!rep.pass)
      throw ParameterNotInSOmega("j_gamma: margin " + std::to_string(rep.cert.section_margin) +
                                 ", restriction residual " +
                                 std::to_string(rep.restriction_residual));
  }
  const Index a = g.theta.in_dim;
  const TaylorFn w = w_from_contraction_parameter(g, c, out_degree + 1, rank_tol);
  const TaylorFn id = TaylorFn::constant(ComplexMatrix::Identity(a, a));
  const TaylorFn w_plus_inv = invert_unit(add(w, id), out_degree + 1);

  SchurPair p;
  p.F = mul(scaled(g.theta, 2.0), w_plus_inv, out_degree);

  TaylorFn num = sub(w, id);
  const double bias = spectral_norm(num.coeff(0));
  if (bias_deviation) *bias_deviation = bias;
  num.coeffs[0].setZero();  // subtract the truncation bias; the shift below is exact
  const TaylorFn prod = mul(num, w_plus_inv, out_degree + 1);
  p.G = TaylorFn::zero(a, a, out_degree);
  for (int n = 0; n <= out_degree; ++n) p.G.coeffs[n] = prod.coeff(n + 1);
  return p;
}

}  // namespace rcl
