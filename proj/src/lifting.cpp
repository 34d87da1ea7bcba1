#include "rcl/lifting.hpp"

#include <algorithm>
#include <cmath>

namespace rcl {

namespace {
ComplexMatrix theta_gram(const TaylorFn& theta) {
  ComplexMatrix s = ComplexMatrix::Zero(theta.in_dim, theta.in_dim);
  for (const auto& c : theta.coeffs) s += c.adjoint() * c;
  return s;
}
}  // namespace

GammaOp gamma_from_pair(const SchurPair& p, int out_degree) {
  if (p.G.out_dim != p.G.in_dim || p.F.in_dim != p.G.in_dim)
    throw DimensionMismatch("gamma_from_pair: need F t x a and G a x a");
  TaylorFn theta = TaylorFn::zero(p.F.out_dim, p.F.in_dim, out_degree);
  theta.coeffs[0] = p.F.coeff(0);
  for (int n = 1; n <= out_degree; ++n) {
    ComplexMatrix c = p.F.coeff_or_zero(n);
    for (int k = 0; k < n; ++k) c += theta.coeffs[k] * p.G.coeff_or_zero(n - 1 - k);
    theta.coeffs[n] = c;
  }
  return GammaOp{theta};
}

SolutionReport verify_solution(const DataSet& ds, const GammaOp& g, double tol, double rank_tol) {
  const OmegaData od = build_omega(ds, rank_tol);
  if (g.theta.out_dim != od.t() || g.theta.in_dim != od.a())
    throw DimensionMismatch("verify_solution: theta must map A-defect to T'-defect coords");

  const ComplexMatrix daq = od.da_basis.coords(od.DA * ds.Q);
  const ComplexMatrix dar = od.da_basis.coords(od.DA * ds.R);
  const ComplexMatrix dtar = od.dt_basis.coords(od.DT * ds.A * ds.R);

  SolutionReport rep;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(theta_gram(g.theta), Eigen::EigenvaluesOnly);
  rep.margin = od.a() > 0 ? 1.0 - es.eigenvalues().maxCoeff() : 1.0;

  rep.residuals.push_back(spectral_norm(g.theta.coeff(0) * daq - dtar));
  for (int n = 0; n < g.degree(); ++n)
    rep.residuals.push_back(spectral_norm(g.theta.coeff(n + 1) * daq - g.theta.coeff(n) * dar));
  rep.max_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());
  rep.pass = rep.margin >= -tol && rep.max_residual <= tol;
  return rep;
}

BlockSolution make_solution(const DataSet& ds, const GammaOp& g, double rank_tol) {
  return BlockSolution{ds, build_omega(ds, rank_tol), g};
}

std::pair<ComplexVector, TruncatedH2> apply_solution(const BlockSolution& b,
                                                     const ComplexVector& h) {
  if (h.size() != b.ds.dim_h()) throw DimensionMismatch("apply_solution: h must live in H");
  TruncatedH2 tail;
  const ComplexVector dah = b.od.da_basis.coords(b.od.DA * h);
  for (const auto& c : b.gamma.theta.coeffs) tail.coeffs.push_back(c * dah);
  return {b.ds.A * h, tail};
}

ComplexMatrix gamma_defect(const GammaOp& g, double clamp_tol) {
  const Index a = g.theta.in_dim;
  return hermitian_sqrt(ComplexMatrix::Identity(a, a) - theta_gram(g.theta), clamp_tol);
}

BigOmegaData build_big_omega(const DataSet& ds, const GammaOp& g, double rank_tol, double tol) {
  const SolutionReport rep = verify_solution(ds, g, tol, rank_tol);
  if (!rep.pass)
    throw SolutionInvalid("build_big_omega: margin " + std::to_string(rep.margin) +
                          ", residual " + std::to_string(rep.max_residual));
  const OmegaData od = build_omega(ds, rank_tol);

  BigOmegaData bo;
  bo.DGamma = gamma_defect(g);
  bo.dgamma_basis = orthonormal_range(bo.DGamma, rank_tol);
  const Index a = od.a();

  const ComplexMatrix daq = od.da_basis.coords(od.DA * ds.Q);
  const ComplexMatrix dar = od.da_basis.coords(od.DA * ds.R);
  bo.FGamma_basis = orthonormal_range(bo.DGamma * daq, rank_tol);
  bo.GGamma_basis = orthonormal_range(
      (ComplexMatrix::Identity(a, a) - bo.FGamma_basis.projector()) * bo.DGamma, rank_tol);

  const ComplexMatrix x = bo.FGamma_basis.coords(bo.DGamma * daq);  // fg x h0
  const ComplexMatrix y = bo.dgamma_basis.coords(bo.DGamma * dar);  // dg x h0
  bo.Omega = y * pseudo_inverse(x, rank_tol);

  const Index dg = bo.dg();
  bo.OmegaStar_defect =
      hermitian_sqrt(ComplexMatrix::Identity(dg, dg) - bo.Omega * bo.Omega.adjoint());
  bo.OmegaStar_basis = orthonormal_range(bo.OmegaStar_defect, rank_tol);

  // Independent route: Omega D_Gamma f = D_Gamma omega2 f for f in F.
  const ComplexMatrix fc = od.da_basis.coords(od.F_basis.vectors);
  bo.intertwine_residual =
      spectral_norm(bo.Omega * bo.FGamma_basis.coords(bo.DGamma * fc) -
                    bo.dgamma_basis.coords(bo.DGamma * od.omega2));
  bo.isometric = spectral_norm(bo.Omega.adjoint() * bo.Omega -
                               ComplexMatrix::Identity(bo.fg(), bo.fg())) <= tol;
  return bo;
}

Uniqueness uniqueness_check(const DataSet& ds, double tol, double rank_tol) {
  const Index h0 = ds.dim_h0();
  const ComplexMatrix id = ComplexMatrix::Identity(h0, h0);
  const bool r_isometric = spectral_norm(ds.R.adjoint() * ds.R - id) <= tol;
  const bool q_isometric = spectral_norm(ds.Q.adjoint() * ds.Q - id) <= tol;
  if (!r_isometric || !q_isometric) return Uniqueness::not_applicable;

  const OmegaData od = build_omega(ds, rank_tol);
  if (od.f() == od.a()) return Uniqueness::unique;
  if (numerical_rank(od.omega, rank_tol) == od.t() + od.a()) return Uniqueness::unique;
  return Uniqueness::non_unique;
}

}  // namespace rcl
