#pragma once

#include <cstdint>

#include "rcl/linalg.hpp"

namespace rcl {

// Lifting data {A, T', R, Q}: A maps H -> H', T' acts on H', R and Q map
// H0 -> H. Constraints: A and T' contractions, T'AR = AQ, R*R <= Q*Q.
struct DataSet {
  ComplexMatrix A;       // hprime x h
  ComplexMatrix Tprime;  // hprime x hprime
  ComplexMatrix R;       // h x h0
  ComplexMatrix Q;       // h x h0

  Index dim_h0() const { return R.cols(); }
  Index dim_h() const { return A.cols(); }
  Index dim_hprime() const { return A.rows(); }
};

struct ValidationReport {
  double intertwining_residual = 0.0;  // ||T'AR - AQ||
  double equality_margin = 0.0;        // smallest eigenvalue of Q*Q - R*R
  double a_margin = 0.0;               // 1 - ||A||
  double tprime_margin = 0.0;          // 1 - ||T'||
  bool pass = false;
};

// Coupling contraction omega(D_A Q h) = (D_T' A R h, D_A R h) together with
// the coordinate frames every downstream computation uses. F is the closure
// of D_A Q H inside the A-defect space, G its orthogonal complement there.
struct OmegaData {
  ComplexMatrix DA;          // defect operator of A, on H
  ComplexMatrix DT;          // defect operator of T', on H'
  SubspaceBasis da_basis;    // range of DA (ambient H)
  SubspaceBasis dt_basis;    // range of DT (ambient H')
  SubspaceBasis F_basis;     // ambient H
  SubspaceBasis G_basis;     // ambient H
  ComplexMatrix omega;       // (t + a) x f, F coords -> DT (+) DA coords
  ComplexMatrix omega1;      // t x f
  ComplexMatrix omega2;      // a x f
  ComplexMatrix Dstar_defect;  // D_{omega*} on DT (+) DA coords
  SubspaceBasis Dstar_basis;   // ambient t + a
  bool isometric = false;

  Index t() const { return dt_basis.dim(); }
  Index a() const { return da_basis.dim(); }
  Index f() const { return F_basis.dim(); }
  Index g() const { return G_basis.dim(); }
  Index s() const { return Dstar_basis.dim(); }
};

ValidationReport validate(const DataSet& ds, double tol = 1e-9);

// Requires validate(ds) to pass at 1e-9 (ValidationFailed otherwise).
OmegaData build_omega(const DataSet& ds, double rank_tol = kRankTol);

enum class Preset { generic, exact_equality, treil_volberg, classical };

struct Dims {
  int h0 = 1;
  int h = 2;
  int hprime = 1;
};

// Deterministic in (seed, dims, preset). The intertwining relation is solved
// exactly: T', R, Q are drawn first and A is the projection of a random draw
// onto the kernel of A |-> T'AR - AQ, rescaled to a strict contraction.
// Throws GenerationFailed when the dims/seed combination is infeasible.
DataSet random_dataset(std::uint64_t seed, Dims dims, Preset preset);

}  // namespace rcl
