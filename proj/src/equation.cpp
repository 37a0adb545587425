#include "dioph/equation.hpp"

#include <sstream>

namespace dioph {

namespace {

// "- 3 y^2" / "+ 3 y^2" style term with the sign folded into the operator.
void append_term(std::ostringstream& out, const Int& coeff, const std::string& sym, bool leading) {
  if (coeff == 0) return;
  Int abs_c = abs(coeff);
  if (leading) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (abs_c != 1 || sym.empty()) {
    out << abs_c.get_str();
    if (!sym.empty()) out << " ";
  }
  out << sym;
}

}  // namespace

PellEquation::PellEquation(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a < 1) throw std::invalid_argument("PellEquation: a must be >= 1");
  if (b < 1) throw std::invalid_argument("PellEquation: b must be >= 1");
  if (c == 0) throw std::invalid_argument("PellEquation: c must be nonzero");
}

std::string PellEquation::str() const {
  std::ostringstream out;
  append_term(out, a, "x^2", true);
  append_term(out, -b, "y^2", false);
  append_term(out, c, "", false);
  out << " = 0";
  return out.str();
}

GeneralQuadratic::GeneralQuadratic(Int A_, Int B_, Int C_, Int D_, Int E_, Int F_)
    : A(std::move(A_)),
      B(std::move(B_)),
      C(std::move(C_)),
      D(std::move(D_)),
      E(std::move(E_)),
      F(std::move(F_)) {
  if (A == 0 && B == 0 && C == 0)
    throw std::invalid_argument("GeneralQuadratic: quadratic part is identically zero");
}

std::string GeneralQuadratic::str() const {
  std::ostringstream out;
  bool leading = true;
  const std::pair<const Int*, const char*> terms[] = {
      {&A, "x^2"}, {&B, "xy"}, {&C, "y^2"}, {&D, "x"}, {&E, "y"}, {&F, ""},
  };
  for (const auto& [coeff, sym] : terms) {
    if (*coeff == 0) continue;
    append_term(out, *coeff, sym, leading);
    leading = false;
  }
  if (leading) out << "0";
  out << " = 0";
  return out.str();
}

std::string Classification::str() const {
  switch (kind) {
    case Kind::NoSolutionsGcd:
      return "no solutions (gcd obstruction)";
    case Kind::FiniteSquareDiscriminant:
      return "finite (a*b = " + Int(k * k).get_str() + " = " + k.get_str() + "^2)";
    case Kind::FiniteDefinite:
      return "finite (definite form)";
    case Kind::InfiniteCandidate:
      return "infinite-family candidate (a*b non-square)";
    case Kind::NoSolutionsProven:
      return "no solutions (search exhausted up to y = " + bound.get_str() + ")";
  }
  return "?";
}

Int evaluate_form(const PellEquation& eq, const Int& x, const Int& y) {
  return eq.a * x * x - eq.b * y * y + eq.c;
}

Int evaluate_general(const GeneralQuadratic& gq, const Int& x, const Int& y) {
  return gq.A * x * x + gq.B * x * y + gq.C * y * y + gq.D * x + gq.E * y + gq.F;
}

}  // namespace dioph
