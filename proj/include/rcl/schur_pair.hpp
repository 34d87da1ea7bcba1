#pragma once

#include <optional>

#include "rcl/dataset.hpp"
#include "rcl/taylor.hpp"

namespace rcl {

// Pair {F, G} with col[F, G] Schur class and col[F, G](lambda) restricted to
// F equal to omega for every lambda. F maps A-defect coords to T'-defect
// coords (t x a), G maps A-defect coords to themselves (a x a).
struct SchurPair {
  TaylorFn F;
  TaylorFn G;
  std::optional<OmegaData> omega;  // frame the pair was built against
};

struct PairReport {
  SchurCertificate cert;
  double restriction_residual = 0.0;   // coefficient-level check against omega
  double sampled_residual = 0.0;       // same restriction at sampled lambda
  bool pass = false;
};

// col[F, G](lambda) = omega P_F + D_{omega*} H(lambda) P_G with H a Schur
// class parameter from G coords to D_{omega*} coords.
SchurPair pair_from_parameter(const OmegaData& od, const TaylorFn& h, int out_degree,
                              double tol = 1e-9);

PairReport verify_pair(const SchurPair& p, int n_sections, int n_boundary_samples = kDefaultBoundarySamples,
                       double tol = 1e-9);

// Inverse of pair_from_parameter: recovers H from the G-compression of the
// pair. ResidualTooLarge when the pair is not of the parameterized form.
TaylorFn parameter_from_pair(const SchurPair& p, double rank_tol = kRankTol, double tol = 1e-9);

}  // namespace rcl
