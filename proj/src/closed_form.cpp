#include "dioph/closed_form.hpp"

#include <stdexcept>

namespace dioph {

namespace {

// "(A + B*sqrt(d))/C" with one shared positive denominator, compactly:
// "2", "sqrt(6)/4", "(4 + sqrt(6))/4", "(3 - 2*sqrt(6))/6".
std::string surd_str(const QuadraticNumber& v) {
  Int den = lcm(v.p().get_den(), v.q().get_den());
  Int a = v.p().get_num() * (den / v.p().get_den());
  Int b = v.q().get_num() * (den / v.q().get_den());
  std::string root = "sqrt(" + v.d().get_str() + ")";
  std::string body;
  if (b == 0) {
    body = a.get_str();
  } else {
    std::string bpart = (abs(b) == 1 ? "" : Int(abs(b)).get_str() + "*") + root;
    if (a == 0)
      body = (b < 0 ? "-" : "") + bpart;
    else
      body = a.get_str() + (b < 0 ? " - " : " + ") + bpart;
  }
  bool composite = a != 0 && b != 0;
  if (den == 1) return body;
  return (composite ? "(" + body + ")" : body) + "/" + den.get_str();
}

std::string formula(const std::string& lhs, const QuadraticNumber& coeff,
                    const QuadraticNumber& lambda) {
  QuadraticNumber cbar = conj(coeff);
  QuadraticNumber lbar = conj(lambda);
  auto term = [](const QuadraticNumber& c, const QuadraticNumber& l) {
    std::string cs = surd_str(c);
    std::string ls = "(" + surd_str(l) + ")^n";
    if (cs == "1") return ls;
    if (cs == "-1") return "-" + ls;
    return cs + " * " + ls;
  };
  std::string first = term(coeff, lambda);
  std::string second = term(cbar, lbar);
  std::string join = " + ";
  if (!second.empty() && second[0] == '-') {
    join = " - ";
    second = second.substr(1);
  }
  return lhs + " = " + first + join + second;
}

}  // namespace

std::string ClosedForm::x_formula() const { return formula("x_n", px, lambda); }
std::string ClosedForm::y_formula() const { return formula("y_n", qy, lambda); }

ClosedForm derive_closed_form(const SolutionOrbit& orbit) {
  const Automorphism& aut = orbit.automorphism;
  auto [d, s] = squarefree_core(aut.alpha0 * aut.alpha0 - 1);  // = beta0*gamma0
  QuadraticNumber lambda(Rat(aut.alpha0), Rat(s), d);

  // Solve p + pbar = x0 and p*lambda + pbar*conj(lambda) = x1 for p; the
  // conjugate of p is forced, and likewise for q with the y components.
  // With x1 - alpha0*x0 = beta0*y0 this collapses to
  //   p = x0/2 + (beta0*y0 / (2 s d)) sqrt(d),
  //   q = y0/2 + (gamma0*x0 / (2 s d)) sqrt(d).
  Int two_sd = 2 * s * d;
  QuadraticNumber px(make_rat(orbit.seed.x, 2), make_rat(aut.beta0 * orbit.seed.y, two_sd), d);
  QuadraticNumber qy(make_rat(orbit.seed.y, 2), make_rat(aut.gamma0 * orbit.seed.x, two_sd), d);
  return ClosedForm{lambda, px, qy, d};
}

Solution eval_closed_form(const ClosedForm& cf, std::uint64_t n) {
  QuadraticNumber ln = pow(cf.lambda, n);
  auto component = [&](const QuadraticNumber& coeff) {
    QuadraticNumber term = coeff * ln;
    QuadraticNumber value = term + conj(term);
    if (!value.is_rational())
      throw std::logic_error("closed form: sqrt component did not cancel");
    if (!is_integer(value.p()))
      throw std::logic_error("closed form: non-integral term " + value.str());
    return Int(value.p().get_num());
  };
  return {component(cf.px), component(cf.qy)};
}

}  // namespace dioph
