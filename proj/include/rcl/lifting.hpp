#pragma once

#include <vector>

#include "rcl/schur_pair.hpp"

namespace rcl {

// Symbol of the contraction Gamma from the A-defect space into H^2 of the
// T'-defect space: Gamma x = sum_n lambda^n (theta_n x). The lift it encodes
// is B = [A; Gamma D_A] against the shift realization of the minimal
// isometric dilation of T'.
struct GammaOp {
  TaylorFn theta;  // t x a
  int degree() const { return theta.degree(); }
};

// Truncated H^2 element: coefficient vectors in T'-defect coordinates.
struct TruncatedH2 {
  std::vector<ComplexVector> coeffs;
};

struct BlockSolution {
  DataSet ds;
  OmegaData od;
  GammaOp gamma;
};

struct SolutionReport {
  double margin = 0.0;  // 1 - lambda_max(sum theta_n* theta_n)
  std::vector<double> residuals;
  double max_residual = 0.0;
  bool pass = false;
};

enum class Uniqueness { unique, non_unique, not_applicable };

// theta = F (I - lambda G)^{-1} via the coefficient recursion
// theta_n = F_n + sum_{k<n} theta_k G_{n-1-k}; exact through out_degree.
GammaOp gamma_from_pair(const SchurPair& p, int out_degree);

// Checks the contraction bound and the intertwining constraints in
// coefficients: theta_0 D_A Q = D_T' A R and theta_{n+1} D_A Q = theta_n D_A R.
SolutionReport verify_solution(const DataSet& ds, const GammaOp& g, double tol = 1e-9,
                               double rank_tol = kRankTol);

BlockSolution make_solution(const DataSet& ds, const GammaOp& g, double rank_tol = kRankTol);

// Applies the lift to h in H: (A h, theta(lambda) D_A h).
std::pair<ComplexVector, TruncatedH2> apply_solution(const BlockSolution& b,
                                                     const ComplexVector& h);

// D_Gamma = sqrt(I - sum theta_n* theta_n) on A-defect coordinates.
ComplexMatrix gamma_defect(const GammaOp& g, double clamp_tol = kClampTol);

// Second coupling: Omega(D_Gamma D_A Q h) = D_Gamma D_A R h on
// F_Gamma = closure(D_Gamma F) inside the Gamma-defect space.
struct BigOmegaData {
  ComplexMatrix DGamma;            // a x a, on A-defect coords
  SubspaceBasis dgamma_basis;      // range of DGamma (ambient a)
  SubspaceBasis FGamma_basis;      // ambient a
  SubspaceBasis GGamma_basis;      // Gamma-defect complement of F_Gamma (ambient a)
  ComplexMatrix Omega;             // dg x fg, F_Gamma coords -> Gamma-defect coords
  ComplexMatrix OmegaStar_defect;  // dg x dg
  SubspaceBasis OmegaStar_basis;   // ambient dg
  double intertwine_residual = 0.0;  // || Omega D_Gamma f - D_Gamma omega2 f || on F
  bool isometric = false;

  Index dg() const { return dgamma_basis.dim(); }
  Index fg() const { return FGamma_basis.dim(); }
  Index gg() const { return GGamma_basis.dim(); }
  Index sg() const { return OmegaStar_basis.dim(); }
};

// Requires verify_solution to pass at the (looser) coupling tolerance.
BigOmegaData build_big_omega(const DataSet& ds, const GammaOp& g, double rank_tol = kRankTol,
                             double tol = 1e-8);

// Applicable when R and Q are both isometries; then the solution is unique
// iff F is the whole A-defect space or omega maps F onto the product space.
Uniqueness uniqueness_check(const DataSet& ds, double tol = 1e-9, double rank_tol = kRankTol);

}  // namespace rcl
