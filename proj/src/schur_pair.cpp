#include "rcl/schur_pair.hpp"

#include <cmath>

namespace rcl {

namespace {
// F and G subspace vectors expressed in A-defect coordinates.
ComplexMatrix f_coords(const OmegaData& od) { return od.da_basis.coords(od.F_basis.vectors); }
ComplexMatrix g_coords(const OmegaData& od) { return od.da_basis.coords(od.G_basis.vectors); }
}  // namespace

SchurPair pair_from_parameter(const OmegaData& od, const TaylorFn& h, int out_degree, double tol) {
  if (h.out_dim != od.s() || h.in_dim != od.g())
    throw DimensionMismatch("pair_from_parameter: parameter must map G coords to D_{omega*} coords");
  if (!schur_margin(h, h.degree() + 1).pass(tol))
    throw ParameterNotSchur("pair_from_parameter: parameter margin below -tol");

  const Index t = od.t();
  const Index a = od.a();
  const ComplexMatrix base = od.omega * f_coords(od).adjoint();              // (t+a) x a
  const ComplexMatrix lift = od.Dstar_defect * od.Dstar_basis.vectors;      // (t+a) x s
  const ComplexMatrix pg = g_coords(od).adjoint();                          // g x a

  SchurPair p;
  p.F = TaylorFn::zero(t, a, out_degree);
  p.G = TaylorFn::zero(a, a, out_degree);
  for (int n = 0; n <= out_degree; ++n) {
    ComplexMatrix col = lift * h.coeff_or_zero(n) * pg;
    if (n == 0) col += base;
    p.F.coeffs[n] = col.topRows(t);
    p.G.coeffs[n] = col.bottomRows(a);
  }
  p.omega = od;
  return p;
}

PairReport verify_pair(const SchurPair& p, int n_sections, int n_boundary_samples, double tol) {
  if (!p.omega) throw Error("verify_pair: pair carries no omega frame");
  const OmegaData& od = *p.omega;
  const TaylorFn col = vstack(p.F, p.G);

  PairReport rep;
  rep.cert = schur_margin(col, n_sections, n_boundary_samples);

  const ComplexMatrix fc = f_coords(od);  // a x f
  rep.restriction_residual = 0.0;
  for (int n = 0; n <= col.degree(); ++n) {
    const ComplexMatrix want = n == 0 ? od.omega : ComplexMatrix::Zero(od.t() + od.a(), od.f());
    rep.restriction_residual =
        std::max(rep.restriction_residual, spectral_norm(col.coeff(n) * fc - want));
  }

  rep.sampled_residual = 0.0;
  for (int k = 0; k < n_boundary_samples; ++k) {
    const double phi = 6.283185307179586 * k / n_boundary_samples;
    const Complex lambda = 0.9 * Complex(std::cos(phi), std::sin(phi));
    rep.sampled_residual =
        std::max(rep.sampled_residual, spectral_norm(eval(col, lambda) * fc - od.omega));
  }

  rep.pass = rep.cert.pass(tol) && rep.restriction_residual <= tol &&
             rep.sampled_residual <= 10.0 * tol;
  return rep;
}

TaylorFn parameter_from_pair(const SchurPair& p, double rank_tol, double tol) {
  if (!p.omega) throw Error("parameter_from_pair: pair carries no omega frame");
  const OmegaData& od = *p.omega;
  const TaylorFn col = vstack(p.F, p.G);
  const ComplexMatrix base = od.omega * f_coords(od).adjoint();
  const ComplexMatrix lift = od.Dstar_defect * od.Dstar_basis.vectors;  // (t+a) x s
  const ComplexMatrix gc = g_coords(od);                                // a x g

  // Restricted defect is positive definite on its range basis.
  const ComplexMatrix ds_r = od.Dstar_basis.coords(od.Dstar_defect * od.Dstar_basis.vectors);
  const ComplexMatrix ds_r_inv = pseudo_inverse(ds_r, rank_tol);

  TaylorFn h = TaylorFn::zero(od.s(), od.g(), col.degree());
  double residual = 0.0;
  for (int n = 0; n <= col.degree(); ++n) {
    const ComplexMatrix z = col.coeff(n) - (n == 0 ? base : ComplexMatrix::Zero(base.rows(), base.cols()));
    h.coeffs[n] = ds_r_inv * od.Dstar_basis.coords(z) * gc;
    residual = std::max(residual, spectral_norm(lift * h.coeffs[n] * gc.adjoint() - z));
  }
  if (residual > tol)
    throw ResidualTooLarge("parameter_from_pair: pair not of the parameterized form, residual " +
                           std::to_string(residual));
  return h;
}

}  // namespace rcl
