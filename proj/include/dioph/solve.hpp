#pragma once

#include <optional>
#include <vector>

#include "dioph/classify.hpp"
#include "dioph/orbits.hpp"
#include "dioph/reduce.hpp"

namespace dioph {

struct SolveOptions {
  std::optional<Int> y_bound_override;
};

struct PellSolveResult {
  PellEquation equation;
  Classification classification;
  std::optional<Automorphism> automorphism;
  std::vector<SolutionOrbit> orbits;
  std::vector<Solution> finite_solutions;
  Int y_searched = 0;
  Int y_max = 0;
  bool conclusive = true;

  bool has_solutions() const { return !orbits.empty() || !finite_solutions.empty(); }
};

// classify -> gcd / square-discriminant / orbit machinery.
PellSolveResult solve_pell(const PellEquation& eq, const SolveOptions& opts = {});

// One (x, y) solution family of a general quadratic: the reduced-space orbit
// together with its back-substituted seed.
struct SolutionFamily {
  SolutionOrbit uv_orbit;
  Solution xy_seed;
};

struct GeneralSolveResult {
  GeneralQuadratic equation;
  ReducedForm reduced;
  Classification classification;
  std::optional<Automorphism> reduced_automorphism;
  std::optional<AffineAutomorphism> affine;
  std::vector<SolutionFamily> families;
  std::vector<Solution> finite_solutions;
  bool finite = false;

  bool has_solutions() const { return !families.empty() || !finite_solutions.empty(); }
};

// reduce -> classify the target -> solve in (u, v) -> map back through the
// congruence filter.
GeneralSolveResult solve_general(const GeneralQuadratic& gq, const SolveOptions& opts = {});

// The n-th (x, y) term of a family: back-substitution of A^n * uv_seed.
// Empty when the congruence filter rejects the term.
std::optional<Solution> family_term(const AffineTransform& t, const SolutionFamily& fam,
                                    std::uint64_t n);

}  // namespace dioph
