#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dioph/closed_form.hpp"
#include "dioph/solve.hpp"
#include "doctest.h"

using dioph::build_automorphism;
using dioph::ClosedForm;
using dioph::derive_closed_form;
using dioph::eval_closed_form;
using dioph::Int;
using dioph::make_rat;
using dioph::PellEquation;
using dioph::QuadraticNumber;
using dioph::Rat;
using dioph::Solution;
using dioph::SolutionOrbit;

namespace {
SolutionOrbit orbit_of(const PellEquation& eq, const Solution& seed) {
  return {seed, seed.y < 0 ? -1 : 1, eq, build_automorphism(eq)};
}
}  // namespace

TEST_CASE("worked closed forms") {
  PellEquation ex1(2, 3, -5);
  for (long eps : {1L, -1L}) {
    ClosedForm cf = derive_closed_form(orbit_of(ex1, {2, eps}));
    CHECK(cf.lambda == QuadraticNumber(Rat(5), Rat(2), 6));
    CHECK(cf.px == QuadraticNumber(Rat(1), make_rat(eps, 4), 6));
    CHECK(cf.qy == QuadraticNumber(make_rat(eps, 2), make_rat(1, 3), 6));
  }

  PellEquation ex2(1, 3, -4);
  ClosedForm cf2 = derive_closed_form(orbit_of(ex2, {2, 0}));
  CHECK(cf2.lambda == QuadraticNumber(Rat(2), Rat(1), 3));
  CHECK(cf2.px == QuadraticNumber(Rat(1), Rat(0), 3));
  // y_0 = 0 and y_1 = 2 force the difference form: qy = sqrt(3)/3.
  CHECK(cf2.qy == QuadraticNumber(Rat(0), make_rat(1, 3), 3));
  CHECK(eval_closed_form(cf2, 3) == Solution{52, 30});
  CHECK(eval_closed_form(cf2, 0) == Solution{2, 0});

  // Exercise 3: eigenvalue of [[7, 24], [2, 7]] is 7 + sqrt(48) = 7 + 4 sqrt(3).
  PellEquation ex3(1, 12, 3);
  ClosedForm cf3 = derive_closed_form(orbit_of(ex3, {3, 1}));
  CHECK(cf3.lambda == QuadraticNumber(Rat(7), Rat(4), 3));
  CHECK(cf3.field_d == 3);

  ClosedForm cf1 = derive_closed_form(orbit_of(ex1, {2, 1}));
  CHECK(eval_closed_form(cf1, 1) == Solution{16, 13});
}

TEST_CASE("closed form equals matrix enumeration") {
  for (auto [a, b, c] : {std::tuple<long, long, long>{2, 3, -5},
                         {1, 3, -4},
                         {1, 12, 3},
                         {14, 3, -18},
                         {1, 5, 11},
                         {2, 7, 45}}) {
    PellEquation eq(a, b, c);
    auto fs = dioph::fundamental_search(eq, build_automorphism(eq));
    for (const auto& orbit : fs.orbits) {
      ClosedForm cf = derive_closed_form(orbit);
      for (std::uint64_t n = 0; n <= 20; ++n)
        CHECK(eval_closed_form(cf, n) == dioph::enumerate_orbit(orbit, n));
    }
  }
}

TEST_CASE("eigenvalue relations and n = 0 consistency") {
  for (auto [a, b] : {std::pair<long, long>{2, 3}, {1, 3}, {1, 12}, {14, 3}, {2, 7}}) {
    auto aut = build_automorphism(a, b);
    // (1, 1) solves a x^2 - b y^2 + (b - a) = 0 for every pair here.
    SolutionOrbit orbit{{1, 1}, 1, PellEquation(a, b, b - a), aut};
    ClosedForm cf = derive_closed_form(orbit);
    CHECK(cf.lambda * conj(cf.lambda) == QuadraticNumber(Rat(1), Rat(0), cf.field_d));
    CHECK(cf.lambda + conj(cf.lambda) == QuadraticNumber(Rat(2) * Rat(aut.alpha0), Rat(0),
                                                         cf.field_d));
    CHECK(cf.px + conj(cf.px) == QuadraticNumber(Rat(orbit.seed.x), Rat(0), cf.field_d));
    CHECK(cf.qy + conj(cf.qy) == QuadraticNumber(Rat(orbit.seed.y), Rat(0), cf.field_d));
  }
}

TEST_CASE("conjugating every coefficient leaves the sequence unchanged") {
  PellEquation eq(2, 3, -5);
  auto orbit = orbit_of(eq, {2, 1});
  ClosedForm cf = derive_closed_form(orbit);
  ClosedForm swapped{conj(cf.lambda), conj(cf.px), conj(cf.qy), cf.field_d};
  for (std::uint64_t n = 0; n <= 15; ++n)
    CHECK(eval_closed_form(swapped, n) == eval_closed_form(cf, n));
}

TEST_CASE("inconsistent closed forms are rejected") {
  PellEquation eq(2, 3, -5);
  ClosedForm cf = derive_closed_form(orbit_of(eq, {2, 1}));
  ClosedForm broken{cf.lambda, QuadraticNumber(make_rat(1, 3), Rat(0), 6), cf.qy, cf.field_d};
  CHECK_THROWS_AS(eval_closed_form(broken, 0), std::logic_error);
}

TEST_CASE("rendering") {
  PellEquation ex1(2, 3, -5);
  ClosedForm cf = derive_closed_form(orbit_of(ex1, {2, 1}));
  CHECK(cf.x_formula() ==
        "x_n = (4 + sqrt(6))/4 * (5 + 2*sqrt(6))^n + (4 - sqrt(6))/4 * (5 - 2*sqrt(6))^n");
  CHECK(cf.y_formula() ==
        "y_n = (3 + 2*sqrt(6))/6 * (5 + 2*sqrt(6))^n + (3 - 2*sqrt(6))/6 * (5 - 2*sqrt(6))^n");

  PellEquation ex2(1, 3, -4);
  ClosedForm cf2 = derive_closed_form(orbit_of(ex2, {2, 0}));
  CHECK(cf2.x_formula() == "x_n = (2 + sqrt(3))^n + (2 - sqrt(3))^n");
  CHECK(cf2.y_formula() == "y_n = sqrt(3)/3 * (2 + sqrt(3))^n - sqrt(3)/3 * (2 - sqrt(3))^n");
}
