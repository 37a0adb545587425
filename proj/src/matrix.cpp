#include "dioph/matrix.hpp"

namespace dioph {

Mat2 matrix_power(Mat2 m, std::uint64_t n) {
  Mat2 acc = Mat2::identity();
  while (n > 0) {
    if (n & 1) acc = acc * m;
    m = m * m;
    n >>= 1;
  }
  return acc;
}

Mat3Q Mat3Q::identity() {
  Mat3Q r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = Rat(i == j ? 1 : 0);
  return r;
}

Mat3Q operator*(const Mat3Q& a, const Mat3Q& b) {
  Mat3Q r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s(0);
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      s.canonicalize();
      r.m[i][j] = s;
    }
  return r;
}

std::array<Rat, 3> Mat3Q::apply(const std::array<Rat, 3>& v) const {
  std::array<Rat, 3> r;
  for (int i = 0; i < 3; ++i) {
    Rat s(0);
    for (int k = 0; k < 3; ++k) s += m[i][k] * v[k];
    s.canonicalize();
    r[i] = s;
  }
  return r;
}

std::string Mat3Q::str() const {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += "[";
    for (int j = 0; j < 3; ++j) {
      out += to_decimal(m[i][j]);
      if (j < 2) out += ", ";
    }
    out += i < 2 ? "], " : "]";
  }
  return out + "]";
}

}  // namespace dioph
