#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "dioph/automorphism.hpp"
#include "dioph/continued_fraction.hpp"
#include "doctest.h"

using dioph::Automorphism;
using dioph::build_automorphism;
using dioph::cf_sqrt;
using dioph::Int;
using dioph::Mat2;
using dioph::matrix_power;
using dioph::pell_fundamental;

TEST_CASE("cf_sqrt") {
  auto cf6 = cf_sqrt(6);
  CHECK(cf6.a0 == 2);
  CHECK(cf6.period == std::vector<Int>{2, 4});
  auto cf3 = cf_sqrt(3);
  CHECK(cf3.a0 == 1);
  CHECK(cf3.period == std::vector<Int>{1, 2});
  auto cf2 = cf_sqrt(2);
  CHECK(cf2.a0 == 1);
  CHECK(cf2.period == std::vector<Int>{2});
  CHECK_THROWS_AS(cf_sqrt(9), std::invalid_argument);
  CHECK_THROWS_AS(cf_sqrt(1), std::invalid_argument);
}

TEST_CASE("pell_fundamental") {
  CHECK(pell_fundamental(6) == std::pair<Int, Int>{5, 2});
  CHECK(pell_fundamental(3) == std::pair<Int, Int>{2, 1});
  CHECK(pell_fundamental(12) == std::pair<Int, Int>{7, 2});
  CHECK(pell_fundamental(61).first == Int("1766319049"));
  CHECK_THROWS_AS(pell_fundamental(16), std::invalid_argument);
}

TEST_CASE("pell_fundamental minimality for D <= 200") {
  for (long d = 2; d <= 200; ++d) {
    if (dioph::is_perfect_square(Int(d))) continue;
    auto [t, u] = pell_fundamental(d);
    CHECK(t * t - d * u * u == 1);
    CHECK(t >= 1);
    CHECK(u >= 1);
    // Any smaller solution's u-component divides u, so scanning the proper
    // divisors of u is exhaustive.
    for (Int v = 1; v * v <= u; ++v) {
      if (u % v != 0) continue;
      for (const Int& w : {Int(v), Int(u / v)}) {
        if (w == u) continue;
        CHECK_FALSE(dioph::is_perfect_square(1 + d * w * w));
      }
    }
  }
}

TEST_CASE("build_automorphism") {
  CHECK(build_automorphism(2, 3).matrix() == Mat2{5, 6, 4, 5});
  CHECK(build_automorphism(1, 12).matrix() == Mat2{7, 24, 2, 7});
  auto aut = build_automorphism(14, 3);
  CHECK(aut.alpha0 == 13);
  CHECK(aut.gamma0 == 28);
  CHECK(aut.matrix() == Mat2{13, 6, 28, 13});
  CHECK(14 * aut.alpha0 * aut.alpha0 - 3 * aut.gamma0 * aut.gamma0 == 14);
  CHECK(aut.matrix().det() == 1);
  CHECK_THROWS_AS(build_automorphism(1, 4), std::invalid_argument);
}

TEST_CASE("automorphism_inverse") {
  Automorphism a{5, 4, 6};
  CHECK(dioph::automorphism_inverse(a) == Mat2{5, -6, -4, 5});
  CHECK(a.matrix() * dioph::automorphism_inverse(a) == Mat2::identity());
  Automorphism id{1, 0, 0};
  CHECK(dioph::automorphism_inverse(id) == Mat2::identity());
  Automorphism b{2, 1, 3};
  CHECK(dioph::automorphism_inverse(b) == Mat2{2, -3, -1, 2});
}

TEST_CASE("matrix_power") {
  Mat2 m{5, 6, 4, 5};
  CHECK(matrix_power(m, 0) == Mat2::identity());
  CHECK(matrix_power(m, 2) == Mat2{49, 60, 40, 49});
  CHECK(matrix_power(Mat2{2, 3, 1, 2}, 3) == Mat2{26, 45, 15, 26});
}

TEST_CASE("form preservation identity") {
  std::mt19937_64 rng(23);
  int built = 0;
  while (built < 60) {
    Int a = 1 + rng() % 20, b = 1 + rng() % 20;
    if (dioph::is_perfect_square(a * b)) continue;
    ++built;
    auto aut = build_automorphism(a, b);
    CHECK(dioph::preserves_form(a, b, aut.matrix()));
    // Eqs (4)-(6) with delta = alpha
    CHECK(a * aut.alpha0 * aut.beta0 == b * aut.gamma0 * aut.alpha0);
    CHECK(a * aut.alpha0 * aut.alpha0 - b * aut.gamma0 * aut.gamma0 == a);
    CHECK(a * aut.beta0 * aut.beta0 - b * aut.alpha0 * aut.alpha0 == -b);
    CHECK(aut.matrix().det() == 1);
    // trace and determinant of the eigen pair
    CHECK(aut.alpha0 * aut.alpha0 - aut.beta0 * aut.gamma0 == 1);
  }
}
