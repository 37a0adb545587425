#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dioph/automorphism.hpp"
#include "dioph/equation.hpp"

namespace dioph {

// One family of solutions A^n * seed, n in Z. The seed is the canonical
// representative: among {±A^n s}, minimal |x|, normalized to x >= 0, with
// the mirror pair (x0, -y0) ~ (x0, y0) collapsed onto the y >= 0 side.
struct SolutionOrbit {
  Solution seed;
  int sign_class;  // sign of seed.y; +1 when y = 0 (self-conjugate)
  PellEquation equation;
  Automorphism automorphism;
};

struct FundamentalSearchResult {
  std::vector<SolutionOrbit> orbits;
  Int y_searched;   // sweep actually performed
  Int y_max;        // Pell-resolvent bound u*sqrt(|ac|(t+1)/(2ab)) + 1
  bool conclusive;  // sweep covered the analytic sufficiency bound
};

struct SolutionSet {
  Classification classification;
  std::vector<SolutionOrbit> orbits;
  std::vector<Solution> finite_solutions;
  Int y_searched = 0;
  Int y_max = 0;
  bool conclusive = true;
};

// Canonical orbit representative of s: repeated A^{-1}/A steps on
// sign-normalized pairs while |x| strictly shrinks. Throws if s does not
// satisfy the equation.
Solution descend(const PellEquation& eq, const Automorphism& aut, const Solution& s);

// All orbit representatives with y within the analytic seed bound.
// y_bound_override replaces the sweep bound; a search below the analytic
// bound that finds nothing is marked inconclusive instead of empty-proven.
FundamentalSearchResult fundamental_search(const PellEquation& eq, const Automorphism& aut,
                                           const std::optional<Int>& y_bound_override = {});

// A^n * seed, exact.
Solution enumerate_orbit(const SolutionOrbit& orbit, std::uint64_t n);

// Terms n = 0..n_max, each re-checked against the equation.
std::vector<Solution> enumerate_range(const SolutionOrbit& orbit, std::uint64_t n_max);

struct OrbitAssignment {
  Solution seed;
  std::int64_t count = 0;
};

struct VerificationReport {
  Int bound;
  std::int64_t found = 0;
  std::vector<OrbitAssignment> orbit_counts;
  std::vector<Solution> failures;  // canonical form missing from the seeds

  bool ok() const { return failures.empty(); }
};

// Brute-forces every solution up to |x|, |y| <= bound, descends each to its
// canonical form, and reports any solution outside the given orbits.
VerificationReport verify_completeness(const PellEquation& eq,
                                       const std::vector<SolutionOrbit>& orbits,
                                       const Int& bound);

}  // namespace dioph
