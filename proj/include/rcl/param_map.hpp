#pragma once

#include "rcl/majorant.hpp"

namespace rcl {

// Membership report for the constrained class S_Omega: Schur functions C on
// the Gamma-defect space whose restriction to F_Gamma equals Omega for every
// lambda (so C(0) agrees with Omega there and higher coefficients vanish).
struct SOmegaReport {
  SchurCertificate cert;
  double restriction_residual = 0.0;
  bool pass = false;
};

SOmegaReport s_omega_margin(const TaylorFn& c, const BigOmegaData& bo, double tol = 1e-8);

// The distinguished member C(lambda) = Omega P_{F_Gamma} (constant).
TaylorFn canonical_parameter(const BigOmegaData& bo);

// Free parameterization of S_Omega:
// C(lambda) = Omega P_{F_Gamma} + D_{Omega*} C1(lambda) P_{G_Gamma}
// with C1 Schur class from G_Gamma coords to D_{Omega*} coords.
TaylorFn parameter_to_constrained(const BigOmegaData& bo, const TaylorFn& c1, int out_degree,
                                  double tol = 1e-8);

// Pair attached to Gamma and a parameter C in S_Omega:
//   W(lambda) = V(lambda) + D_Gamma (I + lambda C)(I - lambda C)^{-1} D_Gamma,
//   F = 2 theta (W + I)^{-1},  G = lambda^{-1} (W - I)(W + I)^{-1}.
// The lambda^{-1} is an exact index shift after the constant-term bias of
// W - I is subtracted; the bias norm is written to *bias_deviation if given.
// When bo is supplied the parameter is gated through s_omega_margin.
SchurPair j_gamma(const GammaOp& g, const TaylorFn& c, int out_degree,
                  const BigOmegaData* bo = nullptr, double rank_tol = kRankTol,
                  double* bias_deviation = nullptr);

}  // namespace rcl
