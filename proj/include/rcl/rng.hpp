#pragma once

#include <cstdint>
#include <random>

#include "rcl/linalg.hpp"

namespace rcl {

// Deterministic random draws. Distributions are hand-rolled on top of the
// mt19937_64 stream so the same seed gives the same bytes on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

  ComplexMatrix gaussian(Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  // Haar-like unitary: QR of a Gaussian matrix with the R diagonal phases
  // folded in so the result does not depend on the QR sign convention.
  ComplexMatrix unitary(Index n) {
    if (n == 0) return ComplexMatrix(0, 0);
    const ComplexMatrix g = gaussian(n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
      const Complex d = r(j, j);
      q.col(j) *= std::abs(d) > 1e-14 ? d / std::abs(d) : Complex(1.0);
    }
    return q;
  }

  // Random matrix rescaled to the requested spectral norm.
  ComplexMatrix with_norm(Index rows, Index cols, double norm) {
    ComplexMatrix m = gaussian(rows, cols);
    const double s = spectral_norm(m);
    return s > 1e-14 ? ComplexMatrix(m * (norm / s)) : m;
  }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rcl
