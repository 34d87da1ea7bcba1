#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rcl/rng.hpp"
#include "rcl/taylor.hpp"

using namespace rcl;

namespace {

TaylorFn scalar(std::initializer_list<double> coeffs) {
  TaylorFn t = TaylorFn::zero(1, 1, static_cast<int>(coeffs.size()) - 1);
  int n = 0;
  for (double c : coeffs) t.coeffs[n++] = ComplexMatrix::Constant(1, 1, c);
  return t;
}

double c0(const TaylorFn& t, int n) { return t.coeff_or_zero(n)(0, 0).real(); }

TaylorFn random_contractive(Rng& rng, Index d, int degree, double total) {
  TaylorFn c = TaylorFn::zero(d, d, degree);
  double level = total / 2.0;
  for (int k = 0; k <= degree; ++k) {
    c.coeffs[k] = rng.with_norm(d, d, level);
    level /= 2.0;
  }
  return c;
}

}  // namespace

TEST_CASE("factories and coefficient access") {
  const TaylorFn z = TaylorFn::zero(2, 3, 4);
  CHECK(z.degree() == 4);
  CHECK(z.coeff(4).rows() == 2);
  CHECK(z.coeff_or_zero(9).cols() == 3);
  const TaylorFn id = TaylorFn::identity(2);
  CHECK(id.degree() == 0);
  CHECK(spectral_norm(id.coeff(0) - ComplexMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("eval uses all coefficients and rejects points outside the disk") {
  const TaylorFn t = scalar({1, 2, 3});
  CHECK(eval(t, Complex(0.5))(0, 0).real() == doctest::Approx(2.75));
  CHECK(eval(t, Complex(0.0))(0, 0).real() == doctest::Approx(1.0));
  CHECK_NOTHROW(eval(t, Complex(1.0)));  // boundary allowed
  CHECK_THROWS_AS(eval(t, Complex(1.1)), OutsideDisk);
}

TEST_CASE("arithmetic: add, sub, scaled, shift, stack, resize") {
  const TaylorFn a = scalar({1, 2});
  const TaylorFn b = scalar({0, 0, 5});
  CHECK(c0(add(a, b), 2) == 5.0);
  CHECK(c0(sub(a, b), 1) == 2.0);
  CHECK(c0(scaled(a, 3.0), 1) == 6.0);
  const TaylorFn s = shift_up(a, 2);
  CHECK(c0(s, 0) == 0.0);
  CHECK(c0(s, 1) == 1.0);
  CHECK(c0(s, 2) == 2.0);
  CHECK(c0(shift_up(a, 1), 1) == 1.0);  // truncates
  const TaylorFn v = vstack(a, b);
  CHECK(v.out_dim == 2);
  CHECK(v.degree() == 2);
  CHECK(v.coeff(2)(1, 0).real() == 5.0);
  CHECK(resized(a, 4).degree() == 4);
  CHECK(resized(b, 1).degree() == 1);
  CHECK_THROWS_AS(add(a, TaylorFn::zero(2, 1)), DimensionMismatch);
}

TEST_CASE("multiplication is the Cauchy product") {
  const TaylorFn p = mul(scalar({1, 1}), scalar({1, -1}), 2);
  CHECK(c0(p, 0) == 1.0);
  CHECK(c0(p, 1) == 0.0);
  CHECK(c0(p, 2) == -1.0);
  // default output degree is the min of the operands'
  CHECK(mul(scalar({1, 1}), scalar({1, -1})).degree() == 1);
  CHECK_THROWS_AS(mul(TaylorFn::zero(2, 3), TaylorFn::zero(2, 3)), DimensionMismatch);
}

TEST_CASE("series inverse of 1 - lambda is the geometric series") {
  const TaylorFn inv = invert_unit(scalar({1, -1}), 5);
  for (int n = 0; n <= 5; ++n) CHECK(c0(inv, n) == doctest::Approx(1.0));
  const TaylorFn check = mul(scalar({1, -1}), inv, 5);
  CHECK(c0(check, 0) == doctest::Approx(1.0));
  for (int n = 1; n <= 5; ++n) CHECK(c0(check, n) == doctest::Approx(0.0));
}

TEST_CASE("series inverse rejects singular constant terms") {
  CHECK_THROWS_AS(invert_unit(scalar({0, 1}), 3), SingularConstantTerm);
  CHECK_THROWS_AS(invert_unit(TaylorFn::zero(2, 3), 3), DimensionMismatch);
}

TEST_CASE("series inverse of a random unit series") {
  Rng rng(17);
  TaylorFn t = TaylorFn::identity(3, 4);
  for (int n = 1; n <= 4; ++n) t.coeffs[n] = rng.with_norm(3, 3, 0.4 / n);
  const TaylorFn inv = invert_unit(t, 4);
  const TaylorFn prod = mul(t, inv, 4);
  CHECK(max_coeff_dist(prod, TaylorFn::identity(3, 4), 4) < 1e-12);
}

TEST_CASE("cayley transform of lambda has the even geometric pattern") {
  // (1 + lambda^2)/(1 - lambda^2) = 1 + 2 lambda^2 + 2 lambda^4 + ...
  const TaylorFn k = cayley(scalar({0, 1}), 6);
  const double want[] = {1, 0, 2, 0, 2, 0, 2};
  for (int n = 0; n <= 6; ++n) CHECK(c0(k, n) == doctest::Approx(want[n]));
}

TEST_CASE("cayley transform of a constant") {
  // (1 + c lambda)/(1 - c lambda) = 1 + 2 sum c^n lambda^n
  const TaylorFn k = cayley(scalar({0.5}), 4);
  CHECK(c0(k, 0) == doctest::Approx(1.0));
  CHECK(c0(k, 1) == doctest::Approx(1.0));
  CHECK(c0(k, 2) == doctest::Approx(0.5));
  CHECK(c0(k, 3) == doctest::Approx(0.25));
  CHECK(c0(k, 4) == doctest::Approx(0.125));
}

TEST_CASE("cayley outputs are positive real with exact identity at zero") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 1 + trial % 4;
    const TaylorFn c = random_contractive(rng, d, 2 + trial % 5, 0.9);
    const TaylorFn k = cayley(c, 8);
    CHECK(spectral_norm(k.coeff(0) - ComplexMatrix::Identity(d, d)) == 0.0);
    CHECK(positive_real_margin(k, 8) >= -1e-9);
  }
}

TEST_CASE("inverse cayley undoes cayley coefficient by coefficient") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 1 + trial % 4;
    const int deg = trial % 7;
    const TaylorFn c = random_contractive(rng, d, deg, 0.9);
    const TaylorFn k = cayley(c, deg + 1);
    const TaylorFn back = inverse_cayley(k, deg);
    CHECK(max_coeff_dist(c, back, deg) < 1e-10);
  }
}

TEST_CASE("inverse cayley requires identity at zero") {
  CHECK_THROWS_AS(inverse_cayley(scalar({2, 1}), 2), ConstantTermNotIdentity);
}

TEST_CASE("toeplitz sections of the real part") {
  const TaylorFn w = scalar({1, 3});
  const ComplexMatrix s2 = toeplitz_real_section(w, 2);
  CHECK(s2(0, 0).real() == 1.0);
  CHECK(s2(1, 0).real() == doctest::Approx(1.5));  // subdiagonal w1/2
  CHECK(s2(0, 1).real() == doctest::Approx(1.5));  // superdiagonal w1*/2
  CHECK_THROWS_AS(toeplitz_real_section(scalar({1}), 3), DegreeTooLow);
  CHECK_THROWS_AS(toeplitz_real_section(TaylorFn::zero(1, 2), 1), DimensionMismatch);
}

TEST_CASE("positive real margin on scalar examples") {
  CHECK(positive_real_margin(scalar({1, 1}), 2) == doctest::Approx(0.5));
  CHECK(positive_real_margin(scalar({1, 3}), 2) == doctest::Approx(-0.5));
  CHECK(positive_real_margin(scalar({1}), 1) == doctest::Approx(1.0));
}

TEST_CASE("schur margins separate contractive from expansive symbols") {
  const SchurCertificate ok = schur_margin(scalar({0, 1}), 2);
  CHECK(ok.section_margin == doctest::Approx(0.0));
  CHECK(ok.boundary_margin == doctest::Approx(0.001));
  CHECK(ok.pass(1e-9));
  const SchurCertificate bad = schur_margin(scalar({0, 2}), 2);
  CHECK(bad.section_margin == doctest::Approx(-1.0));
  CHECK_FALSE(bad.pass(1e-9));
}

TEST_CASE("coefficient distance reads missing coefficients as zero") {
  CHECK(max_coeff_dist(scalar({1, 2}), scalar({1}), 3) == doctest::Approx(2.0));
  CHECK(max_coeff_dist(scalar({1, 2}), scalar({1, 2}), 9) == 0.0);
}
