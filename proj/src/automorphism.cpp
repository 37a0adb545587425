#include "dioph/automorphism.hpp"

#include <stdexcept>

#include "dioph/continued_fraction.hpp"

namespace dioph {

Automorphism build_automorphism(const Int& a, const Int& b) {
  Int ab = a * b;
  if (is_perfect_square(ab))
    throw std::invalid_argument("automorphism requires a*b non-square");

  auto [t, u] = pell_fundamental(ab);

  // a | b*gamma forces gamma to be a multiple of a/gcd(a,b). gamma = a*u
  // always qualifies (a*t^2 - b*(a*u)^2 = a*(t^2 - ab*u^2) = a), so the
  // ascending scan terminates.
  Int step = a / gcd(a, b);
  Int limit = a * u;
  for (Int g = step; g <= limit; g += step) {
    Int s = (a + b * g * g) / a;
    Int alpha;
    if (!is_perfect_square(s, &alpha)) continue;
    return Automorphism{alpha, g, b * g / a};
  }
  throw std::logic_error("automorphism scan exhausted below the Pell resolvent cap");
}

Automorphism build_automorphism(const PellEquation& eq) {
  return build_automorphism(eq.a, eq.b);
}

Mat2 automorphism_inverse(const Automorphism& aut) {
  return {aut.alpha0, -aut.beta0, -aut.gamma0, aut.alpha0};
}

bool preserves_form(const Int& a, const Int& b, const Mat2& m) {
  // Coefficient match of a*(m00 x + m01 y)^2 - b*(m10 x + m11 y)^2
  // against a*x^2 - b*y^2.
  Int cxx = a * m.m00 * m.m00 - b * m.m10 * m.m10;
  Int cyy = a * m.m01 * m.m01 - b * m.m11 * m.m11;
  Int cxy = 2 * (a * m.m00 * m.m01 - b * m.m10 * m.m11);
  return cxx == a && cyy == -b && cxy == 0 && m.det() == 1;
}

}  // namespace dioph
