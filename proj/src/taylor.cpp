#include "rcl/taylor.hpp"

#include <algorithm>
#include <cmath>

namespace rcl {

namespace {
constexpr double kBoundaryRadius = 0.999;
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_same_shape(const TaylorFn& a, const TaylorFn& b, const char* op) {
  if (a.out_dim != b.out_dim || a.in_dim != b.in_dim)
    throw DimensionMismatch(std::string(op) + ": operand shapes differ");
}
}  // namespace

TaylorFn TaylorFn::zero(Index out_dim, Index in_dim, int degree) {
  TaylorFn t;
  t.out_dim = out_dim;
  t.in_dim = in_dim;
  t.coeffs.assign(static_cast<size_t>(std::max(degree, 0)) + 1,
                  ComplexMatrix::Zero(out_dim, in_dim));
  return t;
}

TaylorFn TaylorFn::constant(const ComplexMatrix& m, int degree) {
  TaylorFn t = zero(m.rows(), m.cols(), degree);
  t.coeffs[0] = m;
  return t;
}

TaylorFn TaylorFn::identity(Index dim, int degree) {
  return constant(ComplexMatrix::Identity(dim, dim), degree);
}

ComplexMatrix eval(const TaylorFn& t, Complex lambda) {
  if (std::abs(lambda) > 1.0 + 1e-12) throw OutsideDisk("eval at |lambda| > 1");
  ComplexMatrix acc = t.coeffs.back();
  for (int n = t.degree() - 1; n >= 0; --n) acc = t.coeff(n) + lambda * acc;
  return acc;
}

TaylorFn add(const TaylorFn& a, const TaylorFn& b) {
  check_same_shape(a, b, "add");
  TaylorFn r = TaylorFn::zero(a.out_dim, a.in_dim, std::max(a.degree(), b.degree()));
  for (int n = 0; n <= r.degree(); ++n) r.coeffs[n] = a.coeff_or_zero(n) + b.coeff_or_zero(n);
  return r;
}

TaylorFn sub(const TaylorFn& a, const TaylorFn& b) {
  check_same_shape(a, b, "sub");
  TaylorFn r = TaylorFn::zero(a.out_dim, a.in_dim, std::max(a.degree(), b.degree()));
  for (int n = 0; n <= r.degree(); ++n) r.coeffs[n] = a.coeff_or_zero(n) - b.coeff_or_zero(n);
  return r;
}

TaylorFn scaled(const TaylorFn& a, Complex s) {
  TaylorFn r = a;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

TaylorFn shift_up(const TaylorFn& a, int out_degree) {
  TaylorFn r = TaylorFn::zero(a.out_dim, a.in_dim, out_degree);
  for (int n = 1; n <= out_degree; ++n) r.coeffs[n] = a.coeff_or_zero(n - 1);
  return r;
}

TaylorFn vstack(const TaylorFn& top, const TaylorFn& bottom) {
  if (top.in_dim != bottom.in_dim) throw DimensionMismatch("vstack: in_dim differs");
  TaylorFn r = TaylorFn::zero(top.out_dim + bottom.out_dim, top.in_dim,
                              std::max(top.degree(), bottom.degree()));
  for (int n = 0; n <= r.degree(); ++n) {
    r.coeffs[n].topRows(top.out_dim) = top.coeff_or_zero(n);
    r.coeffs[n].bottomRows(bottom.out_dim) = bottom.coeff_or_zero(n);
  }
  return r;
}

TaylorFn resized(const TaylorFn& a, int degree) {
  TaylorFn r = TaylorFn::zero(a.out_dim, a.in_dim, degree);
  for (int n = 0; n <= std::min(degree, a.degree()); ++n) r.coeffs[n] = a.coeff(n);
  return r;
}

TaylorFn mul(const TaylorFn& a, const TaylorFn& b) {
  return mul(a, b, std::min(a.degree(), b.degree()));
}

TaylorFn mul(const TaylorFn& a, const TaylorFn& b, int out_degree) {
  if (a.in_dim != b.out_dim) throw DimensionMismatch("mul: inner dimensions differ");
  TaylorFn r = TaylorFn::zero(a.out_dim, b.in_dim, out_degree);
  for (int n = 0; n <= out_degree; ++n) {
    const int lo = std::max(0, n - b.degree());
    const int hi = std::min(n, a.degree());
    for (int k = lo; k <= hi; ++k) r.coeffs[n] += a.coeff(k) * b.coeff(n - k);
  }
  return r;
}

TaylorFn invert_unit(const TaylorFn& t, int out_degree) {
  if (t.out_dim != t.in_dim) throw DimensionMismatch("invert_unit needs square values");
  const Index d = t.out_dim;
  if (d == 0) return TaylorFn::zero(0, 0, out_degree);
  {
    Eigen::JacobiSVD<ComplexMatrix> svd(t.coeff(0));
    if (svd.singularValues()(d - 1) <= 1e-10)
      throw SingularConstantTerm("invert_unit: sigma_min(t(0)) <= 1e-10");
  }
  const ComplexMatrix t0_inv = t.coeff(0).partialPivLu().inverse();
  TaylorFn r = TaylorFn::zero(d, d, out_degree);
  r.coeffs[0] = t0_inv;
  for (int n = 1; n <= out_degree; ++n) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (int k = 1; k <= std::min(n, t.degree()); ++k) s += t.coeff(k) * r.coeffs[n - k];
    r.coeffs[n] = -t0_inv * s;
  }
  return r;
}

TaylorFn cayley(const TaylorFn& c, int out_degree) {
  if (c.out_dim != c.in_dim) throw DimensionMismatch("cayley needs square values");
  const TaylorFn lc = shift_up(c, out_degree);
  const TaylorFn id = TaylorFn::identity(c.out_dim);
  TaylorFn k = mul(add(id, lc), invert_unit(sub(id, lc), out_degree), out_degree);
  k.coeffs[0] = ComplexMatrix::Identity(c.out_dim, c.out_dim);
  return k;
}

TaylorFn inverse_cayley(const TaylorFn& k, int out_degree) {
  if (k.out_dim != k.in_dim) throw DimensionMismatch("inverse_cayley needs square values");
  const Index d = k.out_dim;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  if (d > 0 && spectral_norm(k.coeff(0) - id) > 1e-10)
    throw ConstantTermNotIdentity("inverse_cayley: ||k(0) - I|| > 1e-10");
  TaylorFn num = sub(k, TaylorFn::constant(id));
  num.coeffs[0].setZero();  // constant term is zero by the precondition; shift is exact
  const TaylorFn den_inv = invert_unit(add(k, TaylorFn::constant(id)), out_degree + 1);
  const TaylorFn p = mul(num, den_inv, out_degree + 1);
  TaylorFn c = TaylorFn::zero(d, d, out_degree);
  for (int n = 0; n <= out_degree; ++n) c.coeffs[n] = p.coeff(n + 1);
  return c;
}

ComplexMatrix toeplitz_real_section(const TaylorFn& w, int n) {
  if (w.out_dim != w.in_dim) throw DimensionMismatch("toeplitz_real_section needs square values");
  if (n < 1) throw DegreeTooLow("section count must be >= 1");
  if (n - 1 > w.degree())
    throw DegreeTooLow("section " + std::to_string(n) + " needs degree >= " + std::to_string(n - 1));
  const Index d = w.out_dim;
  ComplexMatrix m(n * d, n * d);
  const ComplexMatrix diag = (w.coeff(0).adjoint() + w.coeff(0)) / 2.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m.block(i * d, j * d, d, d) = diag;
      else if (i > j)
        m.block(i * d, j * d, d, d) = w.coeff(i - j) / 2.0;
      else
        m.block(i * d, j * d, d, d) = w.coeff(j - i).adjoint() / 2.0;
    }
  return m;
}

double positive_real_margin(const TaylorFn& w, int n_max) {
  if (n_max < 1) throw DegreeTooLow("n_max must be >= 1");
  double margin = 1.0;
  for (int n = 1; n <= n_max; ++n) margin = std::min(margin, psd_margin(toeplitz_real_section(w, n)));
  return margin;
}

SchurCertificate schur_margin(const TaylorFn& t, int n_sections, int n_boundary_samples) {
  if (n_sections < 1) throw Error("schur_margin: n_sections must be >= 1");
  if (n_boundary_samples < 8) throw Error("schur_margin: need at least 8 boundary samples");
  SchurCertificate cert;
  cert.sections_tested = n_sections;
  cert.samples_tested = n_boundary_samples;

  ComplexMatrix section = ComplexMatrix::Zero(n_sections * t.out_dim, n_sections * t.in_dim);
  for (int i = 0; i < n_sections; ++i)
    for (int j = 0; j <= i; ++j)
      if (i - j <= t.degree())
        section.block(i * t.out_dim, j * t.in_dim, t.out_dim, t.in_dim) = t.coeff(i - j);
  cert.section_margin = 1.0 - spectral_norm(section);

  cert.boundary_margin = 1.0;
  for (int k = 0; k < n_boundary_samples; ++k) {
    const double phi = kTwoPi * k / n_boundary_samples;
    const Complex lambda = kBoundaryRadius * Complex(std::cos(phi), std::sin(phi));
    cert.boundary_margin = std::min(cert.boundary_margin, 1.0 - spectral_norm(eval(t, lambda)));
  }
  return cert;
}

double max_coeff_dist(const TaylorFn& a, const TaylorFn& b, int through_degree) {
  check_same_shape(a, b, "max_coeff_dist");
  double d = 0.0;
  for (int n = 0; n <= through_degree; ++n)
    d = std::max(d, spectral_norm(a.coeff_or_zero(n) - b.coeff_or_zero(n)));
  return d;
}

}  // namespace rcl
