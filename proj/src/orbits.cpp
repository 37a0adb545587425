#include "dioph/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dioph/classify.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/oracle.hpp"

namespace dioph {

namespace {

// x >= 0, and y >= 0 when x = 0. (s and -s solve the same equation.)
Solution normalize_sign(const Solution& s) {
  if (s.x < 0 || (s.x == 0 && s.y < 0)) return {-s.x, -s.y};
  return s;
}

Solution apply(const Mat2& m, const Solution& s) { return m.apply(s); }

// Fixed point of the shrinking walk: step toward smaller |x| with A^{-1} on
// the y >= 0 side and A on the y < 0 side.
Solution descend_to_fixpoint(const Automorphism& aut, Solution s) {
  Mat2 fwd = aut.matrix();
  Mat2 inv = automorphism_inverse(aut);
  s = normalize_sign(s);
  while (true) {
    Solution t = normalize_sign(apply(s.y >= 0 ? inv : fwd, s));
    if (abs(t.x) < s.x)
      s = t;
    else
      return s;
  }
}

// Collapse the mirror tie: a fixpoint with y < 0 whose A-image is its own
// mirror (x, -y) belongs to the same orbit as the y > 0 seed.
Solution canonical_seed(const Automorphism& aut, const Solution& fixpoint) {
  if (fixpoint.y >= 0) return fixpoint;
  Solution mirror{fixpoint.x, -fixpoint.y};
  if (normalize_sign(apply(aut.matrix(), fixpoint)) == mirror) return mirror;
  return fixpoint;
}

}  // namespace

Solution descend(const PellEquation& eq, const Automorphism& aut, const Solution& s) {
  if (!is_solution(eq, s))
    throw std::invalid_argument("descend: " + s.str() + " does not satisfy " + eq.str());
  return canonical_seed(aut, descend_to_fixpoint(aut, s));
}

FundamentalSearchResult fundamental_search(const PellEquation& eq, const Automorphism& aut,
                                           const std::optional<Int>& y_bound_override) {
  if (classify(eq).kind != Classification::Kind::InfiniteCandidate)
    throw std::invalid_argument("fundamental_search requires an infinite-family candidate");

  Int D = eq.a * eq.b;
  auto [t, u] = pell_fundamental(D);
  Int ac = abs(eq.a * eq.c);

  // Seed bound for (ax)^2 - ab y^2 = -ac from the Pell resolvent.
  Int y_max = u * ceil_sqrt_ratio(ac * (t + 1), 2 * D) + 1;
  // Every orbit contains a solution with |y| <= the classical per-class
  // bound, and the canonical seed has the orbit-minimal |y|, so sweeping to
  // the tight bound finds every representative the wide bound would.
  Int tight = ceil_sqrt_ratio(ac * (t + 1), 2 * D) + 1;

  Int sweep = y_bound_override.value_or(tight);
  bool conclusive = sweep >= tight;
  if (sweep > y_max) sweep = y_max;

  std::vector<Solution> seeds;
  for (Int y = 0; y <= sweep; ++y) {
    Int rhs = eq.b * y * y - eq.c;
    if (rhs < 0 || rhs % eq.a != 0) continue;
    Int x;
    if (!is_perfect_square(rhs / eq.a, &x)) continue;
    seeds.push_back(descend(eq, aut, {x, y}));
    if (y != 0) seeds.push_back(descend(eq, aut, {x, -y}));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  FundamentalSearchResult res;
  for (const Solution& s : seeds)
    res.orbits.push_back({s, s.y < 0 ? -1 : +1, eq, aut});
  res.y_searched = sweep;
  res.y_max = y_max;
  res.conclusive = conclusive;
  return res;
}

Solution enumerate_orbit(const SolutionOrbit& orbit, std::uint64_t n) {
  return matrix_power(orbit.automorphism.matrix(), n).apply(orbit.seed);
}

std::vector<Solution> enumerate_range(const SolutionOrbit& orbit, std::uint64_t n_max) {
  std::vector<Solution> out;
  out.reserve(n_max + 1);
  Mat2 a = orbit.automorphism.matrix();
  Solution s = orbit.seed;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (!is_solution(orbit.equation, s))
      throw std::logic_error("enumerate_range: term " + s.str() + " fails " +
                             orbit.equation.str() + " (automorphism is inconsistent)");
    out.push_back(s);
    s = a.apply(s);
  }
  return out;
}

VerificationReport verify_completeness(const PellEquation& eq,
                                       const std::vector<SolutionOrbit>& orbits,
                                       const Int& bound) {
  VerificationReport report;
  report.bound = bound;
  std::map<Solution, std::size_t> seed_index;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    report.orbit_counts.push_back({orbits[i].seed, 0});
    seed_index.emplace(orbits[i].seed, i);
  }

  std::optional<Automorphism> aut;
  if (!orbits.empty())
    aut = orbits.front().automorphism;
  else if (classify(eq).kind == Classification::Kind::InfiniteCandidate)
    aut = build_automorphism(eq);

  std::vector<Solution> failures;
  for (const Solution& s : brute_force(eq, bound)) {
    ++report.found;
    if (!aut) {
      failures.push_back(s);
      continue;
    }
    Solution canon = descend(eq, *aut, s);
    auto it = seed_index.find(canon);
    if (it == seed_index.end())
      failures.push_back(s);
    else
      ++report.orbit_counts[it->second].count;
  }
  std::sort(failures.begin(), failures.end());
  failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
  report.failures = std::move(failures);
  return report;
}

}  // namespace dioph
