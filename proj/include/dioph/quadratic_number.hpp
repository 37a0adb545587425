#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "dioph/numeric.hpp"

namespace dioph {

// Splits n >= 1 as n = core * square_part^2 with core squarefree.
std::pair<Int, Int> squarefree_core(const Int& n);

// Exact element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)),
// d squarefree and > 1. Values with q = 0 stay in this representation so
// closed-form evaluation is uniform.
class QuadraticNumber {
 public:
  QuadraticNumber(Rat p, Rat q, Int d);

  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  const Int& d() const { return d_; }

  QuadraticNumber conj() const { return QuadraticNumber(p_, -q_, d_); }

  // p^2 - q^2*d; multiplicative.
  Rat norm() const { return p_ * p_ - q_ * q_ * Rat(d_); }

  bool is_rational() const { return q_ == 0; }

  // Display-only decimal approximation; never used in computation.
  double approx() const;

  std::string str() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.d_ == y.d_ && x.p_ == y.p_ && x.q_ == y.q_;
  }
  friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

 private:
  Rat p_, q_;
  Int d_;
};

QuadraticNumber conj(const QuadraticNumber& x);

// Binary exponentiation, exact; x^0 = 1 in the same field.
QuadraticNumber pow(const QuadraticNumber& x, std::uint64_t n);

}  // namespace dioph
