#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "dioph/equation.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

// 2x2 integer matrix, row-major.
struct Mat2 {
  Int m00, m01, m10, m11;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Int det() const { return m00 * m11 - m01 * m10; }

  Solution apply(const Solution& s) const {
    return {m00 * s.x + m01 * s.y, m10 * s.x + m11 * s.y};
  }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

  std::string str() const {
    return "[[" + m00.get_str() + ", " + m01.get_str() + "], [" + m10.get_str() + ", " +
           m11.get_str() + "]]";
  }
};

// M^n by binary exponentiation, exact; M^0 = I.
Mat2 matrix_power(Mat2 m, std::uint64_t n);

// 3x3 rational matrix acting on column vectors (x, y, 1).
struct Mat3Q {
  std::array<std::array<Rat, 3>, 3> m;

  static Mat3Q identity();

  friend Mat3Q operator*(const Mat3Q& a, const Mat3Q& b);
  friend bool operator==(const Mat3Q& a, const Mat3Q& b) { return a.m == b.m; }

  std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;
  std::string str() const;
};

}  // namespace dioph
