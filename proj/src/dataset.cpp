#include "rcl/dataset.hpp"

#include <optional>

#include "rcl/rng.hpp"

namespace rcl {

namespace {

ComplexMatrix kron(const ComplexMatrix& b, const ComplexMatrix& c) {
  ComplexMatrix k(b.rows() * c.rows(), b.cols() * c.cols());
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      k.block(i * c.rows(), j * c.cols(), c.rows(), c.cols()) = b(i, j) * c;
  return k;
}

// Projection of a0 onto the kernel of A |-> T'AR - AQ, via the vectorized
// system (R^T (x) T' - Q^T (x) I) vec(A) = 0. Empty when the kernel is
// trivial or the projection degenerates.
std::optional<ComplexMatrix> project_intertwining(const ComplexMatrix& tp, const ComplexMatrix& r,
                                                  const ComplexMatrix& q, const ComplexMatrix& a0) {
  const Index hp = tp.rows();
  const Index h = r.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(hp, hp);
  const ComplexMatrix m = kron(r.transpose(), tp) - kron(q.transpose(), id);

  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = std::max(1e-9 * (sv.size() > 0 ? sv(0) : 0.0), kRankFloor);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  const Index nullity = m.cols() - rank;
  if (nullity == 0) return std::nullopt;

  const ComplexMatrix n = svd.matrixV().rightCols(nullity);
  const Eigen::Map<const ComplexVector> va0(a0.data(), a0.size());
  const ComplexVector va = n * (n.adjoint() * va0);
  if (va.norm() < 1e-8) return std::nullopt;
  return Eigen::Map<const ComplexMatrix>(va.data(), hp, h);
}

// Unitary conjugation of blkdiag(phase, tail); gives T' and Q a shared
// unimodular eigenvalue so the intertwining kernel is nontrivial.
ComplexMatrix embed_phase(Rng& rng, Index n, Complex phase, const ComplexMatrix& tail) {
  ComplexMatrix blk = ComplexMatrix::Zero(n, n);
  blk(0, 0) = phase;
  if (n > 1) blk.bottomRightCorner(n - 1, n - 1) = tail;
  const ComplexMatrix v = rng.unitary(n);
  return v * blk * v.adjoint();
}

}  // namespace

ValidationReport validate(const DataSet& ds, double tol) {
  const Index h0 = ds.dim_h0();
  const Index h = ds.dim_h();
  const Index hp = ds.dim_hprime();
  if (h0 < 1 || h < 1 || hp < 1) throw DimensionMismatch("validate: empty spaces");
  if (ds.Tprime.rows() != hp || ds.Tprime.cols() != hp)
    throw DimensionMismatch("validate: Tprime must act on H'");
  if (ds.R.rows() != h || ds.Q.rows() != h || ds.Q.cols() != h0)
    throw DimensionMismatch("validate: R and Q must map H0 -> H");

  ValidationReport rep;
  rep.intertwining_residual = spectral_norm(ds.Tprime * ds.A * ds.R - ds.A * ds.Q);
  rep.equality_margin = psd_margin(ds.Q.adjoint() * ds.Q - ds.R.adjoint() * ds.R);
  rep.a_margin = contraction_margin(ds.A);
  rep.tprime_margin = contraction_margin(ds.Tprime);
  rep.pass = rep.intertwining_residual <= tol && rep.equality_margin >= -tol &&
             rep.a_margin >= -tol && rep.tprime_margin >= -tol;
  return rep;
}

OmegaData build_omega(const DataSet& ds, double rank_tol) {
  const ValidationReport rep = validate(ds);
  if (!rep.pass) throw ValidationFailed("build_omega: data set constraints violated");

  const Index h = ds.dim_h();
  const Index hp = ds.dim_hprime();
  OmegaData od;
  od.DA = hermitian_sqrt(ComplexMatrix::Identity(h, h) - ds.A.adjoint() * ds.A);
  od.DT = hermitian_sqrt(ComplexMatrix::Identity(hp, hp) - ds.Tprime.adjoint() * ds.Tprime);
  od.da_basis = orthonormal_range(od.DA, rank_tol);
  od.dt_basis = orthonormal_range(od.DT, rank_tol);

  const ComplexMatrix daq = od.DA * ds.Q;
  od.F_basis = orthonormal_range(daq, rank_tol);
  od.G_basis = orthonormal_range(
      (ComplexMatrix::Identity(h, h) - od.F_basis.projector()) * od.DA, rank_tol);

  // omega is defined on F by omega(D_A Q h) = (D_T' A R h, D_A R h); solve in
  // coordinates by least squares against the h0 generators.
  const Index t = od.t();
  const Index a = od.a();
  const ComplexMatrix x = od.F_basis.coords(daq);  // f x h0
  ComplexMatrix y(t + a, ds.dim_h0());
  y.topRows(t) = od.dt_basis.coords(od.DT * ds.A * ds.R);
  y.bottomRows(a) = od.da_basis.coords(od.DA * ds.R);
  od.omega = y * pseudo_inverse(x, rank_tol);
  od.omega1 = od.omega.topRows(t);
  od.omega2 = od.omega.bottomRows(a);

  od.Dstar_defect = hermitian_sqrt(ComplexMatrix::Identity(t + a, t + a) -
                                   od.omega * od.omega.adjoint());
  od.Dstar_basis = orthonormal_range(od.Dstar_defect, rank_tol);
  od.isometric =
      spectral_norm(od.omega.adjoint() * od.omega -
                    ComplexMatrix::Identity(od.f(), od.f())) <= 1e-9;
  return od;
}

DataSet random_dataset(std::uint64_t seed, Dims dims, Preset preset) {
  if (dims.h0 < 1 || dims.h < 1 || dims.hprime < 1)
    throw GenerationFailed("dims must be positive");
  if ((preset == Preset::classical || preset == Preset::treil_volberg) && dims.h0 != dims.h)
    throw GenerationFailed("preset needs dim H0 = dim H");

  Rng rng(seed);
  const Index h0 = dims.h0;
  const Index h = dims.h;
  const Index hp = dims.hprime;

  for (int attempt = 0; attempt < 64; ++attempt) {
    DataSet ds;
    const double phi = rng.uniform(0.0, 6.283185307179586);
    const Complex phase(std::cos(phi), std::sin(phi));

    switch (preset) {
      case Preset::generic:
      case Preset::exact_equality: {
        ds.Tprime = rng.with_norm(hp, hp, rng.uniform(0.3, 0.95));
        ds.Q = rng.with_norm(h, h0, rng.uniform(0.9, 1.4));
        const ComplexMatrix qq = ds.Q.adjoint() * ds.Q;
        if (psd_margin(qq) < 1e-8) continue;
        if (preset == Preset::exact_equality) {
          ds.R = rng.unitary(h) * ds.Q;  // R*R = Q*Q exactly
        } else {
          const ComplexMatrix rt = rng.gaussian(h, h0);
          const ComplexMatrix s_inv = pseudo_inverse(hermitian_sqrt(qq), kRankTol);
          const ComplexMatrix x = s_inv * (rt.adjoint() * rt) * s_inv;
          Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((x + x.adjoint()) / 2.0,
                                                          Eigen::EigenvaluesOnly);
          const double lmax = es.eigenvalues().maxCoeff();
          if (lmax < 1e-10) continue;
          ds.R = rt * (0.9 / std::sqrt(lmax));
        }
        break;
      }
      case Preset::classical: {
        ds.Tprime = embed_phase(rng, hp, phase,
                                hp > 1 ? rng.with_norm(hp - 1, hp - 1, rng.uniform(0.3, 0.9))
                                       : ComplexMatrix(0, 0));
        ds.Q = embed_phase(rng, h, phase, h > 1 ? rng.unitary(h - 1) : ComplexMatrix(0, 0));
        ds.R = ComplexMatrix::Identity(h, h0);
        break;
      }
      case Preset::treil_volberg: {
        ds.Tprime = embed_phase(rng, hp, phase,
                                hp > 1 ? rng.with_norm(hp - 1, hp - 1, rng.uniform(0.3, 0.9))
                                       : ComplexMatrix(0, 0));
        ComplexMatrix expansive(0, 0);
        if (h > 1) {
          Eigen::VectorXd d(h - 1);
          for (Index i = 0; i < h - 1; ++i) d(i) = 1.0 + rng.uniform(0.05, 0.8);
          expansive = rng.unitary(h - 1) * d.cast<Complex>().asDiagonal() *
                      rng.unitary(h - 1).adjoint();
        }
        ds.Q = embed_phase(rng, h, phase, expansive);
        ds.R = ComplexMatrix::Identity(h, h0);
        break;
      }
    }

    const auto a = project_intertwining(ds.Tprime, ds.R, ds.Q, rng.gaussian(hp, h));
    if (!a) continue;
    const double na = spectral_norm(*a);
    if (na < 1e-8) continue;
    ds.A = *a * (rng.uniform(0.4, 0.9) / na);

    if (validate(ds).pass) return ds;
  }
  throw GenerationFailed("no intertwining contraction found for these dims/seed");
}

}  // namespace rcl
