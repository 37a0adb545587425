#include "dioph/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "dioph/reduce.hpp"

namespace dioph {

bool gcd_obstruction(const PellEquation& eq) { return eq.c % gcd(eq.a, eq.b) != 0; }

Classification classify(const PellEquation& eq) {
  if (gcd_obstruction(eq)) return {Classification::Kind::NoSolutionsGcd, 0, 0};
  Int k;
  if (is_perfect_square(eq.a * eq.b, &k))
    return {Classification::Kind::FiniteSquareDiscriminant, k, 0};
  return {Classification::Kind::InfiniteCandidate, 0, 0};
}

namespace {

// Ascending positive divisors of n > 0 by trial division.
std::vector<Int> divisors(const Int& n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Solution> solve_square_case(const PellEquation& eq) {
  Int k;
  if (!is_perfect_square(eq.a * eq.b, &k))
    throw std::invalid_argument("solve_square_case requires a*b to be a perfect square");

  // (a x - k y)(a x + k y) = -a c. Every solution corresponds to a signed
  // divisor pair d*e with a x = (d+e)/2 and k y = (e-d)/2.
  Int rhs = -eq.a * eq.c;
  std::vector<Solution> out;
  for (const Int& d0 : divisors(abs(rhs))) {
    for (int sign = 0; sign < 2; ++sign) {
      Int d = sign ? -d0 : d0;
      Int e = rhs / d;
      Int s = d + e;
      if (s % 2 != 0) continue;  // d, e of equal parity, else halves are fractional
      Int ax = s / 2;
      Int ky = (e - d) / 2;
      if (ax % eq.a != 0 || ky % k != 0) continue;
      out.push_back({ax / eq.a, ky / k});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Solution> solve_definite(const GeneralQuadratic& gq) {
  ReducedForm rf = reduce(gq);
  if (rf.a * rf.b < 0)
    throw std::invalid_argument("solve_definite: reduced form is indefinite (unbounded)");
  if (rf.a == 0 || rf.b == 0)
    throw std::invalid_argument("solve_definite: degenerate reduced form (unbounded)");

  // Orient as a u^2 + b v^2 = -c with a, b > 0; positive right side or bust.
  Int a = rf.a, b = rf.b, c = rf.c;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  std::vector<Solution> out;
  Int rhs = -c;
  if (rhs >= 0) {
    Int u_max = isqrt(rhs / a);
    for (Int u = -u_max; u <= u_max; ++u) {
      Int rem = rhs - a * u * u;
      if (rem % b != 0) continue;
      Int v;
      if (!is_perfect_square(rem / b, &v)) continue;
      if (auto s = back_substitute(rf.transform, {u, v})) out.push_back(*s);
      if (v != 0)
        if (auto s = back_substitute(rf.transform, {u, -v})) out.push_back(*s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dioph
