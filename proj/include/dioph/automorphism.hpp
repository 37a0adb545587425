#pragma once

#include "dioph/equation.hpp"
#include "dioph/matrix.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

// Integer automorphism of the form a*x^2 - b*y^2: the matrix
// [[alpha0, beta0], [gamma0, alpha0]] with beta0 = b*gamma0/a,
// a*alpha0^2 - b*gamma0^2 = a and det = 1. Maps solutions to solutions
// in both directions.
struct Automorphism {
  Int alpha0;
  Int gamma0;
  Int beta0;

  Mat2 matrix() const { return {alpha0, beta0, gamma0, alpha0}; }
};

// Smallest gamma0 >= 1 with a | b*gamma0 and (a + b*gamma0^2)/a a perfect
// square. The Pell resolvent of a*b caps the scan at gamma = a*u.
Automorphism build_automorphism(const PellEquation& eq);
Automorphism build_automorphism(const Int& a, const Int& b);

// Adjugate; exact inverse because det = 1.
Mat2 automorphism_inverse(const Automorphism& aut);

// True iff a*(alpha x + beta y)^2 - b*(gamma x + alpha y)^2 == a x^2 - b y^2
// as a polynomial identity and det = 1.
bool preserves_form(const Int& a, const Int& b, const Mat2& m);

}  // namespace dioph
