#include "dioph/solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

PellSolveResult solve_pell(const PellEquation& eq, const SolveOptions& opts) {
  PellSolveResult res{eq, classify(eq), {}, {}, {}};
  switch (res.classification.kind) {
    case Classification::Kind::NoSolutionsGcd:
      return res;
    case Classification::Kind::FiniteSquareDiscriminant:
      res.finite_solutions = solve_square_case(eq);
      return res;
    default:
      break;
  }
  res.automorphism = build_automorphism(eq);
  FundamentalSearchResult fs = fundamental_search(eq, *res.automorphism, opts.y_bound_override);
  res.orbits = fs.orbits;
  res.y_searched = fs.y_searched;
  res.y_max = fs.y_max;
  res.conclusive = fs.conclusive;
  if (res.orbits.empty() && fs.conclusive)
    res.classification = {Classification::Kind::NoSolutionsProven, 0, fs.y_searched};
  return res;
}

GeneralSolveResult solve_general(const GeneralQuadratic& gq, const SolveOptions& opts) {
  ReducedForm rf = reduce(gq);
  GeneralSolveResult res{gq, rf, {Classification::Kind::InfiniteCandidate, 0, 0}};

  if (!rf.indefinite()) {
    res.finite = true;
    res.classification = {Classification::Kind::FiniteDefinite, 0, 0};
    res.finite_solutions = solve_definite(gq);
    return res;
  }

  if (rf.c == 0) {
    // a u^2 = -b v^2 with ab < 0: non-square |ab| pins (0, 0); square |ab|
    // factors into rational lines, out of scope.
    if (is_perfect_square(-rf.a * rf.b))
      throw DegenerateConicError("factorable conic: reduced form splits into lines");
    res.finite = true;
    res.classification = {Classification::Kind::FiniteDefinite, 0, 0};
    if (auto s = back_substitute(rf.transform, {0, 0})) res.finite_solutions.push_back(*s);
    return res;
  }

  PellEquation target = rf.as_pell();
  PellSolveResult pell = solve_pell(target, opts);
  res.classification = pell.classification;
  res.reduced_automorphism = pell.automorphism;

  if (pell.classification.kind == Classification::Kind::FiniteSquareDiscriminant) {
    res.finite = true;
    for (const Solution& uv : pell.finite_solutions)
      if (auto s = back_substitute(rf.transform, uv)) res.finite_solutions.push_back(*s);
    std::sort(res.finite_solutions.begin(), res.finite_solutions.end());
    return res;
  }
  if (!pell.has_solutions()) return res;

  if (coset_preservation_check(rf, *pell.automorphism))
    res.affine = affine_automorphism(rf, *pell.automorphism);

  // Distinct residue/sign seeds map to distinct (x, y) families; keep every
  // orbit whose seed survives the congruence filter at some shift A^j, j
  // small, to catch seeds whose own residue is filtered but whose orbit
  // re-enters the coset.
  for (const SolutionOrbit& orbit : pell.orbits) {
    std::optional<Solution> xy = back_substitute(rf.transform, orbit.seed);
    if (xy) {
      res.families.push_back({orbit, *xy});
      continue;
    }
    // Coset not preserved (or seed outside it): probe a few iterates.
    SolutionOrbit shifted = orbit;
    for (int j = 1; j <= 8 && !xy; ++j) {
      shifted.seed = orbit.automorphism.matrix().apply(shifted.seed);
      xy = back_substitute(rf.transform, shifted.seed);
    }
    if (xy) res.families.push_back({shifted, *xy});
  }
  return res;
}

std::optional<Solution> family_term(const AffineTransform& t, const SolutionFamily& fam,
                                    std::uint64_t n) {
  return back_substitute(t, enumerate_orbit(fam.uv_orbit, n));
}

}  // namespace dioph
