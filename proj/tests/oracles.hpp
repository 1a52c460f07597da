#pragma once

// Reference computations used only by the tests. They deliberately take
// different routes from the library code they check.

#include "gauge/lie.hpp"

#include <complex>

namespace gauge::test {

/// Plain truncated power series sum_k M^k / k!, no scaling.
inline Matrix series_exp(const Matrix& m, int terms = 60) {
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix term = result;
  for (int k = 1; k < terms; ++k) {
    term = (term * m) / static_cast<double>(k);
    result += term;
  }
  return result;
}

/// Pauli matrices.
inline Matrix pauli(int a) {
  const Complex i(0.0, 1.0);
  Matrix s(2, 2);
  switch (a) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -i, i, 0.0;
      break;
    default:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return s;
}

/// e_a = -(i/2) sigma_a.
inline AlgebraElement su2_e(int a) { return AlgebraElement(Complex(0.0, -0.5) * pauli(a)); }

inline double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }
inline double dist(const AlgebraElement& a, const AlgebraElement& b) { return (a.matrix() - b.matrix()).norm(); }
inline double dist(const GroupElement& a, const GroupElement& b) { return (a.matrix() - b.matrix()).norm(); }

}  // namespace gauge::test
