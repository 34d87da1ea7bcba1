#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace rcl;
using namespace rcltest;

TEST_CASE("point mass data set validates exactly") {
  const ValidationReport rep = validate(ds3());
  CHECK(rep.pass);
  CHECK(rep.intertwining_residual == 0.0);
  CHECK(rep.equality_margin == 0.0);
  CHECK(rep.a_margin == 1.0);
  CHECK(rep.tprime_margin == 1.0);
}

TEST_CASE("dimension accessors read off the matrix shapes") {
  const DataSet ds = ds3();
  CHECK(ds.dim_h0() == 1);
  CHECK(ds.dim_h() == 2);
  CHECK(ds.dim_hprime() == 1);
}

TEST_CASE("validation flags a broken norm constraint") {
  DataSet ds;
  ds.A = ComplexMatrix::Zero(1, 1);
  ds.Tprime = ComplexMatrix::Zero(1, 1);
  ds.R = ComplexMatrix::Constant(1, 1, 2.0);
  ds.Q = ComplexMatrix::Identity(1, 1);
  const ValidationReport rep = validate(ds);
  CHECK_FALSE(rep.pass);
  CHECK(rep.equality_margin == doctest::Approx(-3.0));
  CHECK(rep.intertwining_residual == 0.0);
}

TEST_CASE("validation flags a broken intertwining relation") {
  DataSet ds;
  ds.A = ComplexMatrix::Constant(1, 1, 0.5);
  ds.Tprime = ComplexMatrix::Constant(1, 1, 0.5);
  ds.R = ComplexMatrix::Identity(1, 1);
  ds.Q = ComplexMatrix::Identity(1, 1);
  const ValidationReport rep = validate(ds);
  CHECK_FALSE(rep.pass);
  CHECK(rep.intertwining_residual == doctest::Approx(0.25));
  CHECK(build_omega(ds3()).isometric);  // sanity: good data still builds
  CHECK_THROWS_AS(build_omega(ds), ValidationFailed);
}

TEST_CASE("validation flags an expansive A") {
  DataSet ds = ds1();
  ds.A = ComplexMatrix::Constant(1, 1, 2.0);
  ds.Tprime = ComplexMatrix::Identity(1, 1);
  const ValidationReport rep = validate(ds);
  CHECK_FALSE(rep.pass);
  CHECK(rep.a_margin == doctest::Approx(-1.0));
}

TEST_CASE("coupling frames for the point mass data set") {
  const DataSet ds = ds3();
  const OmegaData od = build_omega(ds);

  CHECK(dist(od.DA, ComplexMatrix::Identity(2, 2)) == 0.0);
  CHECK(dist(od.DT, ComplexMatrix::Identity(1, 1)) == 0.0);
  CHECK(od.t() == 1);
  CHECK(od.a() == 2);
  CHECK(od.f() == 1);
  CHECK(od.g() == 1);
  CHECK(od.s() == 2);

  CHECK(dist(od.F_basis.projector(), real2(1, 0, 0, 0)) < 1e-14);
  CHECK(dist(od.G_basis.projector(), real2(0, 0, 0, 1)) < 1e-14);

  CHECK(spectral_norm(od.omega1) == 0.0);
  CHECK(od.isometric);
  CHECK(spectral_norm(od.omega.adjoint() * od.omega -
                      ComplexMatrix::Identity(od.f(), od.f())) < 1e-14);
}

TEST_CASE("coupling action matches its defining relation in ambient terms") {
  for (const DataSet& ds : {ds3(), ds1(), decaying_dataset(11, {2, 4, 3})}) {
    const OmegaData od = build_omega(ds);
    const ComplexMatrix image = od.omega * od.F_basis.coords(od.DA * ds.Q);
    const ComplexMatrix top = od.dt_basis.lift(image.topRows(od.t()));
    const ComplexMatrix bottom = od.da_basis.lift(image.bottomRows(od.a()));
    CHECK(dist(top, od.DT * ds.A * ds.R) < 1e-12);
    CHECK(dist(bottom, od.DA * ds.R) < 1e-12);
  }
}

TEST_CASE("scalar data set with a unitary lift target") {
  const DataSet ds = ds1();
  CHECK(validate(ds).pass);
  const OmegaData od = build_omega(ds);
  CHECK(od.t() == 0);  // T' unitary, no defect
  CHECK(od.a() == 1);
  CHECK(od.f() == 1);
  CHECK(od.g() == 0);
  CHECK(od.s() == 0);
  CHECK(od.isometric);
  CHECK(std::abs(od.DA(0, 0).real() - std::sqrt(3.0) / 2.0) < 1e-15);
}

TEST_CASE("defect of the coupling vanishes exactly when norms balance") {
  const OmegaData od = build_omega(ds3());
  const ComplexMatrix gram = od.omega.adjoint() * od.omega;
  CHECK(spectral_norm(gram - ComplexMatrix::Identity(od.f(), od.f())) < 1e-14);
  // D_{omega*} kills the range of omega and fixes its complement
  CHECK(spectral_norm(od.Dstar_defect * od.omega) < 1e-7);
}

TEST_CASE("generated data is deterministic in the seed") {
  const DataSet a = random_dataset(42, {2, 4, 3}, Preset::generic);
  const DataSet b = random_dataset(42, {2, 4, 3}, Preset::generic);
  CHECK(dist(a.A, b.A) == 0.0);
  CHECK(dist(a.Tprime, b.Tprime) == 0.0);
  CHECK(dist(a.R, b.R) == 0.0);
  CHECK(dist(a.Q, b.Q) == 0.0);
  const DataSet c = random_dataset(43, {2, 4, 3}, Preset::generic);
  CHECK(dist(a.A, c.A) > 1e-6);
}

TEST_CASE("generic preset satisfies every constraint with slack") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const DataSet ds = random_dataset(seed, {2, 4, 3}, Preset::generic);
    const ValidationReport rep = validate(ds, 1e-10);
    CHECK(rep.pass);
    CHECK(rep.intertwining_residual < 1e-12);
    CHECK(rep.equality_margin > 1e-6);  // strict inequality by construction
  }
}

TEST_CASE("exact equality preset balances the norms to machine precision") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const DataSet ds = random_dataset(seed, {2, 4, 3}, Preset::exact_equality);
    CHECK(validate(ds, 1e-10).pass);
    CHECK(spectral_norm(ds.R.adjoint() * ds.R - ds.Q.adjoint() * ds.Q) < 1e-12);
    CHECK(build_omega(ds).isometric);
  }
}

TEST_CASE("expansive preset keeps R trivial and pushes Q past the sphere") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const DataSet ds = random_dataset(seed, {3, 3, 2}, Preset::treil_volberg);
    CHECK(validate(ds, 1e-10).pass);
    CHECK(dist(ds.R, ComplexMatrix::Identity(3, 3)) == 0.0);
    CHECK(spectral_norm(ds.Q) > 1.0 + 1e-3);
    const ComplexMatrix excess =
        ds.Q.adjoint() * ds.Q - ComplexMatrix::Identity(3, 3);
    CHECK(psd_margin(excess) > -1e-12);
  }
}

TEST_CASE("classical preset uses an isometric pair") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const DataSet ds = random_dataset(seed, {3, 3, 2}, Preset::classical);
    CHECK(validate(ds, 1e-10).pass);
    CHECK(dist(ds.R, ComplexMatrix::Identity(3, 3)) == 0.0);
    CHECK(spectral_norm(ds.Q.adjoint() * ds.Q - ComplexMatrix::Identity(3, 3)) < 1e-12);
  }
}

TEST_CASE("generation rejects infeasible shapes") {
  CHECK_THROWS_AS(random_dataset(1, {2, 3, 2}, Preset::classical), GenerationFailed);
  CHECK_THROWS_AS(random_dataset(1, {0, 3, 2}, Preset::generic), GenerationFailed);
}
