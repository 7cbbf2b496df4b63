#pragma once

#include <array>
#include <cmath>

#include "groverphase/model.hpp"

namespace grover {

// 2x2 complex matrix, row-major. Rows and columns are indexed (B, A): index 0
// acts on the marked amplitude, index 1 on the unmarked one.
struct Mat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int row, int col) { return e[2 * row + col]; }
  const Complex& operator()(int row, int col) const { return e[2 * row + col]; }

  static Mat2 identity() {
    Mat2 m;
    m(0, 0) = Complex(1.0, 0.0);
    m(1, 1) = Complex(1.0, 0.0);
    return m;
  }
};

inline Mat2 operator*(const Mat2& l, const Mat2& r) {
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
    }
  }
  return m;
}

inline ReducedState apply(const Mat2& m, const ReducedState& s) {
  return {m(0, 0) * s.b + m(0, 1) * s.a, m(1, 0) * s.b + m(1, 1) * s.a};
}

inline Mat2 adjoint(const Mat2& m) {
  Mat2 a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = std::conj(m(j, i));
    }
  }
  return a;
}

inline Complex det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Complex trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

// max_{r,c} |(M^dagger M - I)_{r,c}|
inline double unitarity_defect(const Mat2& m) {
  const Mat2 g = adjoint(m) * m;
  double defect = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      defect = std::max(defect, std::abs(g(i, j) - want));
    }
  }
  return defect;
}

}  // namespace grover
