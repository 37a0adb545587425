#pragma once

#include <array>
#include <optional>
#include <string>

#include "dioph/automorphism.hpp"
#include "dioph/equation.hpp"
#include "dioph/matrix.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

// Conics the reduction cannot diagonalize: B^2 = 4AC, pure xy-forms, and
// factorable targets.
struct DegenerateConicError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear-affine substitution u = s1 x + s2 y + s3, v = t1 x + t2 y + t3
// with a positive multiplier m such that
//   m * f(x, y) = a u^2 + b v^2 + c   (polynomial identity),
// together with the exact rational inverse mapping (u, v) back to (x, y).
struct AffineTransform {
  std::array<Int, 3> u_row;
  std::array<Int, 3> v_row;
  Int multiplier;

  // x = (x_num[0] u + x_num[1] v + x_num[2]) / x_den, likewise for y;
  // rows reduced, denominators positive.
  std::array<Int, 3> x_num;
  Int x_den;
  std::array<Int, 3> y_num;
  Int y_den;

  std::pair<Int, Int> forward(const Int& x, const Int& y) const {
    return {u_row[0] * x + u_row[1] * y + u_row[2], v_row[0] * x + v_row[1] * y + v_row[2]};
  }
};

// Diagonal target a u^2 + b v^2 + c = 0 (signed coefficients) plus the
// substitution that produced it.
struct ReducedForm {
  Int a, b, c;
  AffineTransform transform;

  bool indefinite() const { return a * b < 0; }

  // Eq-shaped view a u^2 - b' v^2 + c = 0 for the indefinite case, with the
  // positive quadratic coefficient first.
  PellEquation as_pell() const;

  std::string target_str() const;
};

// 3x3 rational matrix acting on (x, y, 1); bottom row (0, 0, 1). Maps
// integer solutions of the original quadratic to integer solutions.
struct AffineAutomorphism {
  Mat3Q matrix;

  // Exact application; integral result expected for coset-preserved orbits.
  std::optional<Solution> apply(const Solution& s) const;
};

// Completes the square twice, normalizes the gcd, and orients indefinite
// targets with the positive coefficient first. Throws on degenerate conics
// (B^2 = 4AC) and on xy-only forms (A = C = 0).
ReducedForm reduce(const GeneralQuadratic& gq);

// Back-maps a reduced-space solution; empty when a coordinate is
// non-integral (congruence filter).
std::optional<Solution> back_substitute(const AffineTransform& t, const Solution& uv);

// True iff the reduced-space automorphism maps every residue
// (u, v) mod lcm(denominators) that is solution-compatible
// (a u^2 + b v^2 + c = 0 mod lcm) and integrally back-mappable to another
// integrally back-mappable residue. Solutions always sit in that set, so a
// true result means the congruence filter never drops an orbit tail.
bool coset_preservation_check(const ReducedForm& rf, const Automorphism& aut);

// T^{-1} * lift(A) * T on (x, y, 1); requires coset preservation.
AffineAutomorphism affine_automorphism(const ReducedForm& rf, const Automorphism& aut);

}  // namespace dioph
