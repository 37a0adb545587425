#pragma once

#include <vector>

#include "dioph/equation.hpp"

namespace dioph {

// True iff gcd(a, b) does not divide c; then the equation provably has no
// integer solutions.
bool gcd_obstruction(const PellEquation& eq);

// Routes to NoSolutionsGcd, FiniteSquareDiscriminant(k) for a*b = k^2, or
// InfiniteCandidate.
Classification classify(const PellEquation& eq);

// Complete finite solution set when a*b = k^2, via the factorization
// (a x - k y)(a x + k y) = -a c over signed divisor pairs. Sorted by (x, y).
std::vector<Solution> solve_square_case(const PellEquation& eq);

// Complete finite solution set of a general quadratic whose reduced diagonal
// form has both quadratic coefficients of the same sign. Throws when the
// reduced form is indefinite or one quadratic coefficient vanishes with
// solutions left unbounded.
std::vector<Solution> solve_definite(const GeneralQuadratic& gq);

}  // namespace dioph
