#pragma once

#include "rcl/lifting.hpp"

namespace rcl {

// Positive real function attached to theta: V_0 = sum theta_n* theta_n,
// V_n = 2 sum_nu theta_nu* theta_{nu+n}; satisfies theta(lambda)* theta(lambda)
// <= Re V(lambda) on the disk. Sums truncate at theta's stored degree.
TaylorFn v_from_theta(const TaylorFn& theta, int out_degree);

// min over sampled lambda (n_samples equispaced points on circles of radii
// 0.3, 0.6, 0.9, 0.99) of psd_margin(Re w(lambda) - theta(lambda)* theta(lambda)).
double majorant_gap(const TaylorFn& theta, const TaylorFn& w, int n_samples = kDefaultBoundarySamples);

// W = V + D_Gamma cayley(C) D_Gamma with C Schur class on the Gamma-defect
// space; W(0) = I up to the truncation tail of theta.
TaylorFn w_from_contraction_parameter(const GammaOp& g, const TaylorFn& c, int out_degree,
                                      double rank_tol = kRankTol, double tol = 1e-9);

// Unique factorization of Delta = W - V as D_Gamma K D_Gamma with K positive
// real, K(0) = I. Returns K; residuals outside the defect range or a
// non-positive-real result raise.
TaylorFn factor_delta(const GammaOp& g, const TaylorFn& w, double rank_tol = kRankTol,
                      double tol = 1e-9);

struct PoissonCheck {
  Complex series = 0.0;      // eval of v_from_theta
  Complex quadrature = 0.0;  // boundary integral of the half-plane kernel
  double mismatch = 0.0;
};

// Scalar-only cross-check of V against the boundary integral
// (1/2pi) int (e^{iw}+lambda)/(e^{iw}-lambda) |theta(e^{iw})|^2 dw,
// trapezoid rule with n_nodes; budget 1e-6 for |lambda| <= 0.9.
PoissonCheck poisson_cross_check(const TaylorFn& theta, Complex lambda, int n_nodes = 4096);

}  // namespace rcl
