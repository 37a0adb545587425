#pragma once

#include <cstdint>
#include <string>

#include "dioph/orbits.hpp"
#include "dioph/quadratic_number.hpp"

namespace dioph {

// Exact closed expression for an orbit:
//   x_n = px * lambda^n + conj(px) * conj(lambda)^n
//   y_n = qy * lambda^n + conj(qy) * conj(lambda)^n
// with lambda = alpha0 + s*sqrt(d) the unit eigenvalue of the automorphism
// (d the squarefree core of alpha0^2 - 1).
struct ClosedForm {
  QuadraticNumber lambda;
  QuadraticNumber px;
  QuadraticNumber qy;
  Int field_d;

  std::string x_formula() const;
  std::string y_formula() const;
};

// Coefficients solved exactly from the n = 0, 1 terms of the orbit.
ClosedForm derive_closed_form(const SolutionOrbit& orbit);

// Exact evaluation; the sqrt(d) parts must cancel and the rational parts
// must be integers, else the closed form is inconsistent.
Solution eval_closed_form(const ClosedForm& cf, std::uint64_t n);

}  // namespace dioph
