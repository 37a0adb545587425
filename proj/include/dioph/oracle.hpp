#pragma once

#include <vector>

#include "dioph/equation.hpp"

namespace dioph {

// Independent brute-force reference solvers. These are the ground truth the
// orbit machinery is audited against; keep them free of any solver code.

// All (x, y) with |x| <= bound, |y| <= bound and a x^2 - b y^2 + c = 0,
// sorted by (x, y). Sweeps y and tests whether (b y^2 - c)/a is a perfect
// square, all in exact integer arithmetic.
std::vector<Solution> brute_force(const PellEquation& eq, const Int& bound);

// Exhaustive sweep of the square [-bound, bound]^2 for a general quadratic.
std::vector<Solution> brute_force_general(const GeneralQuadratic& gq, const Int& bound);

}  // namespace dioph
