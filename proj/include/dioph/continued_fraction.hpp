#pragma once

#include <utility>
#include <vector>

#include "dioph/numeric.hpp"

namespace dioph {

// Periodic continued fraction of sqrt(D): [a0; period...] with the period
// repeating forever. For squarefree-or-not non-square D the expansion is
// purely periodic after a0 and ends each cycle at 2*a0.
struct ContinuedFraction {
  Int a0;
  std::vector<Int> period;
};

// Expansion of sqrt(D); D >= 2 and not a perfect square.
ContinuedFraction cf_sqrt(const Int& D);

// Minimal (t, u), t, u >= 1, with t^2 - D*u^2 = 1, read off the convergents.
std::pair<Int, Int> pell_fundamental(const Int& D);

}  // namespace dioph
