#include "dioph/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

std::vector<Solution> brute_force(const PellEquation& eq, const Int& bound) {
  if (bound < 1) throw std::invalid_argument("brute_force bound must be >= 1");
  std::vector<Solution> out;
  for (Int y = 0; y <= bound; ++y) {
    Int rhs = eq.b * y * y - eq.c;
    if (rhs < 0) continue;
    if (rhs % eq.a != 0) continue;
    Int x;
    if (!is_perfect_square(rhs / eq.a, &x)) continue;
    if (x > bound) continue;
    out.push_back({x, y});
    if (x != 0) out.push_back({-x, y});
    if (y != 0) {
      out.push_back({x, -y});
      if (x != 0) out.push_back({-x, -y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Solution> brute_force_general(const GeneralQuadratic& gq, const Int& bound) {
  if (bound < 0) throw std::invalid_argument("brute_force_general bound must be >= 0");
  std::vector<Solution> out;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y)
      if (evaluate_general(gq, x, y) == 0) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dioph
