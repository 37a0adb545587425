#include "dioph/quadratic_number.hpp"

#include <cmath>

namespace dioph {

std::pair<Int, Int> squarefree_core(const Int& n) {
  if (n < 1) throw std::invalid_argument("squarefree_core requires n >= 1");
  Int core = 1;
  Int square = 1;
  Int m = n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e & 1) core *= p;
    for (int i = 0; i < e / 2; ++i) square *= p;
  }
  core *= m;  // leftover factor is prime
  return {core, square};
}

namespace {

void check_field(const Int& d) {
  if (d < 2) throw std::invalid_argument("quadratic field radicand must be > 1");
  if (squarefree_core(d).first != d)
    throw std::invalid_argument("quadratic field radicand must be squarefree");
}

void check_same_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d() != y.d()) throw std::invalid_argument("mismatched quadratic fields");
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rat p, Rat q, Int d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  check_field(d_);
  p_.canonicalize();
  q_.canonicalize();
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  check_same_field(x, y);
  return QuadraticNumber(x.p_ + y.p_, x.q_ + y.q_, x.d_);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  check_same_field(x, y);
  return QuadraticNumber(x.p_ - y.p_, x.q_ - y.q_, x.d_);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  check_same_field(x, y);
  Rat d(x.d_);
  return QuadraticNumber(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, x.d_);
}

QuadraticNumber conj(const QuadraticNumber& x) { return x.conj(); }

QuadraticNumber pow(const QuadraticNumber& x, std::uint64_t n) {
  QuadraticNumber acc(Rat(1), Rat(0), x.d());
  QuadraticNumber base = x;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

double QuadraticNumber::approx() const {
  return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticNumber::str() const {
  if (q_ == 0) return to_decimal(p_);
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string qpart;
  Rat aq = q_ < 0 ? Rat(-q_) : q_;
  if (aq == 1)
    qpart = root;
  else
    qpart = to_decimal(aq) + "*" + root;
  if (p_ == 0) return (q_ < 0 ? "-" : "") + qpart;
  return to_decimal(p_) + (q_ < 0 ? " - " : " + ") + qpart;
}

}  // namespace dioph
