#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace dioph {

// Exact arbitrary-precision integer and rational types. GMP owns the
// representation; nothing on a solver path ever touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor square root; n must be nonnegative.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

// Smallest integer y with y*y >= num/den (num >= 0, den >= 1).
inline Int ceil_sqrt_ratio(const Int& num, const Int& den) {
  if (num < 0 || den < 1) throw std::invalid_argument("ceil_sqrt_ratio domain");
  Int y = isqrt(num / den);
  while (y * y * den < num) ++y;
  return y;
}

inline std::string to_decimal(const Int& n) { return n.get_str(); }

// "n" when integral, "n/d" otherwise.
inline std::string to_decimal(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace dioph
