#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "dioph/classify.hpp"
#include "dioph/oracle.hpp"
#include "dioph/reduce.hpp"
#include "doctest.h"

using dioph::Classification;
using dioph::classify;
using dioph::gcd_obstruction;
using dioph::GeneralQuadratic;
using dioph::Int;
using dioph::PellEquation;
using dioph::solve_definite;
using dioph::solve_square_case;
using dioph::Solution;

namespace {
std::vector<Solution> sols(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Solution> out;
  for (auto [x, y] : v) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("gcd_obstruction") {
  CHECK(gcd_obstruction(PellEquation(4, 6, 3)));
  CHECK_FALSE(gcd_obstruction(PellEquation(2, 3, -5)));
  CHECK_FALSE(gcd_obstruction(PellEquation(6, 10, 4)));
}

TEST_CASE("classify") {
  CHECK(classify(PellEquation(2, 3, -5)).kind == Classification::Kind::InfiniteCandidate);
  auto sq = classify(PellEquation(1, 4, -21));
  CHECK(sq.kind == Classification::Kind::FiniteSquareDiscriminant);
  CHECK(sq.k == 2);
  CHECK(classify(PellEquation(4, 6, 3)).kind == Classification::Kind::NoSolutionsGcd);
}

TEST_CASE("solve_square_case") {
  CHECK(solve_square_case(PellEquation(1, 4, -21)) ==
        sols({{5, 1}, {5, -1}, {-5, 1}, {-5, -1}, {11, 5}, {11, -5}, {-11, 5}, {-11, -5}}));
  // x^2 - y^2 + 1 = 0 and x^2 - 4y^2 + 4 = 0 both pin x = 0.
  CHECK(solve_square_case(PellEquation(1, 1, 1)) == sols({{0, 1}, {0, -1}}));
  CHECK(solve_square_case(PellEquation(1, 4, 4)) == sols({{0, 1}, {0, -1}}));
  // x^2 - y^2 = 2 fails the parity filter entirely.
  CHECK(solve_square_case(PellEquation(1, 1, -2)).empty());
  CHECK_THROWS_AS(solve_square_case(PellEquation(2, 3, -5)), std::invalid_argument);
}

TEST_CASE("solve_square_case equals the oracle") {
  CHECK(solve_square_case(PellEquation(1, 1, 1)) == dioph::brute_force(PellEquation(1, 1, 1), 100));
  CHECK(solve_square_case(PellEquation(1, 4, 4)) == dioph::brute_force(PellEquation(1, 4, 4), 100));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 25; ++i) {
    Int g = 1 + rng() % 5, s1 = 1 + rng() % 4, s2 = 1 + rng() % 4;
    Int a = g * s1 * s1, b = g * s2 * s2;
    Int c = Int(1 + rng() % 60) * (rng() % 2 ? 1 : -1);
    PellEquation eq(a, b, c);
    auto exact = solve_square_case(eq);
    std::vector<Solution> within;
    for (const auto& s : exact)
      if (abs(s.x) <= 10000 && abs(s.y) <= 10000) within.push_back(s);
    CHECK(within == dioph::brute_force(eq, 10000));
  }
}

TEST_CASE("solve_definite") {
  CHECK(solve_definite(GeneralQuadratic(1, 0, 1, 0, 0, -25)) ==
        sols({{0, 5}, {0, -5}, {5, 0}, {-5, 0}, {3, 4}, {3, -4}, {-3, 4}, {-3, -4},
              {4, 3}, {4, -3}, {-4, 3}, {-4, -3}}));
  CHECK(solve_definite(GeneralQuadratic(1, 0, 1, 0, 0, 1)).empty());
  CHECK(solve_definite(GeneralQuadratic(2, 0, 3, 0, 0, -5)) ==
        sols({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  // cross-term ellipse: x^2 + 2xy + 2y^2 = 25
  auto found = solve_definite(GeneralQuadratic(1, 2, 2, 0, 0, -25));
  CHECK(found == dioph::brute_force_general(GeneralQuadratic(1, 2, 2, 0, 0, -25), 30));
  CHECK_THROWS_AS(solve_definite(GeneralQuadratic(1, 0, -3, 0, 0, -4)), std::invalid_argument);
}

TEST_CASE("obstructed equations have no oracle solutions") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 20) {
    PellEquation eq(1 + rng() % 20, 1 + rng() % 20, Int(1 + rng() % 50) * (rng() % 2 ? 1 : -1));
    if (!gcd_obstruction(eq)) continue;
    ++done;
    CHECK(dioph::brute_force(eq, 500).empty());
  }
}
