#pragma once

#include <string>
#include <vector>

#include "dioph/numeric.hpp"

namespace dioph {

// a*x^2 - b*y^2 + c = 0 with a, b >= 1 and c != 0. Equations given as
// "a x^2 - b y^2 = m" normalize to c = -m.
struct PellEquation {
  Int a, b, c;

  PellEquation(Int a_, Int b_, Int c_);

  std::string str() const;
};

// A*x^2 + B*xy + C*y^2 + D*x + E*y + F = 0, quadratic part not identically zero.
struct GeneralQuadratic {
  Int A, B, C, D, E, F;

  GeneralQuadratic(Int A_, Int B_, Int C_, Int D_, Int E_, Int F_);

  std::string str() const;
};

struct Solution {
  Int x, y;

  friend bool operator==(const Solution& s, const Solution& t) { return s.x == t.x && s.y == t.y; }
  friend bool operator!=(const Solution& s, const Solution& t) { return !(s == t); }
  friend bool operator<(const Solution& s, const Solution& t) {
    if (s.x != t.x) return s.x < t.x;
    return s.y < t.y;
  }
  std::string str() const { return "(" + x.get_str() + ", " + y.get_str() + ")"; }
};

struct Classification {
  enum class Kind {
    NoSolutionsGcd,            // gcd(a, b) does not divide c
    FiniteSquareDiscriminant,  // a*b = k^2: difference-of-squares case
    FiniteDefinite,            // reduced form with both quadratic signs equal
    InfiniteCandidate,         // hyperbolic, non-square a*b
    NoSolutionsProven,         // analytic seed bound exhaustively searched, empty
  };

  Kind kind;
  Int k;      // FiniteSquareDiscriminant: a*b = k^2
  Int bound;  // NoSolutionsProven: the fully searched y-bound

  std::string str() const;
};

Int evaluate_form(const PellEquation& eq, const Int& x, const Int& y);
Int evaluate_general(const GeneralQuadratic& gq, const Int& x, const Int& y);

inline bool is_solution(const PellEquation& eq, const Solution& s) {
  return evaluate_form(eq, s.x, s.y) == 0;
}
inline bool is_solution(const GeneralQuadratic& gq, const Solution& s) {
  return evaluate_general(gq, s.x, s.y) == 0;
}

}  // namespace dioph
