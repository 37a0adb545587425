// Python bindings for the solver core. Integers cross the boundary as
// arbitrary-precision python ints (decimal round trip), rationals as
// fractions.Fraction.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "dioph/closed_form.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/json_io.hpp"
#include "dioph/oracle.hpp"
#include "dioph/solve.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<dioph::Int> {
  PYBIND11_TYPE_CASTER(dioph::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = dioph::Int(py::cast<std::string>(py::str(src)));
    return true;
  }

  static handle cast(const dioph::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<dioph::Rat> {
  PYBIND11_TYPE_CASTER(dioph::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = dioph::Rat(dioph::Int(py::cast<std::string>(py::str(src))));
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      dioph::Int num(py::cast<std::string>(py::str(src.attr("numerator"))));
      dioph::Int den(py::cast<std::string>(py::str(src.attr("denominator"))));
      value = dioph::make_rat(num, den);
      return true;
    }
    return false;
  }

  static handle cast(const dioph::Rat& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::cast(dioph::Int(v.get_num())), py::cast(dioph::Int(v.get_den())))
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

py::list mat2_to_list(const dioph::Mat2& m) {
  py::list rows;
  py::list r0, r1;
  r0.append(py::cast(m.m00));
  r0.append(py::cast(m.m01));
  r1.append(py::cast(m.m10));
  r1.append(py::cast(m.m11));
  rows.append(r0);
  rows.append(r1);
  return rows;
}

py::list mat3_to_list(const dioph::Mat3Q& m) {
  py::list rows;
  for (int i = 0; i < 3; ++i) {
    py::list row;
    for (int j = 0; j < 3; ++j) row.append(py::cast(m.m[i][j]));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact solver for a x^2 - b y^2 + c = 0 and general binary quadratic "
            "Diophantine equations";

  py::class_<dioph::PellEquation>(m, "PellEquation")
      .def(py::init<dioph::Int, dioph::Int, dioph::Int>(), py::arg("a"), py::arg("b"),
           py::arg("c"))
      .def_readonly("a", &dioph::PellEquation::a)
      .def_readonly("b", &dioph::PellEquation::b)
      .def_readonly("c", &dioph::PellEquation::c)
      .def("__str__", &dioph::PellEquation::str)
      .def("__repr__",
           [](const dioph::PellEquation& eq) { return "PellEquation(" + eq.str() + ")"; });

  py::class_<dioph::GeneralQuadratic>(m, "GeneralQuadratic")
      .def(py::init<dioph::Int, dioph::Int, dioph::Int, dioph::Int, dioph::Int, dioph::Int>(),
           py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("E"), py::arg("F"))
      .def_readonly("A", &dioph::GeneralQuadratic::A)
      .def_readonly("B", &dioph::GeneralQuadratic::B)
      .def_readonly("C", &dioph::GeneralQuadratic::C)
      .def_readonly("D", &dioph::GeneralQuadratic::D)
      .def_readonly("E", &dioph::GeneralQuadratic::E)
      .def_readonly("F", &dioph::GeneralQuadratic::F)
      .def("__str__", &dioph::GeneralQuadratic::str);

  py::class_<dioph::Solution>(m, "Solution")
      .def(py::init<dioph::Int, dioph::Int>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &dioph::Solution::x)
      .def_readonly("y", &dioph::Solution::y)
      .def("__iter__",
           [](const dioph::Solution& s) {
             return py::iter(py::make_tuple(py::cast(s.x), py::cast(s.y)));
           })
      .def("__eq__", [](const dioph::Solution& s, const dioph::Solution& t) { return s == t; })
      .def("__repr__", &dioph::Solution::str);

  py::class_<dioph::Classification>(m, "Classification")
      .def_property_readonly("kind",
                             [](const dioph::Classification& c) {
                               using K = dioph::Classification::Kind;
                               switch (c.kind) {
                                 case K::NoSolutionsGcd: return "no_solutions_gcd";
                                 case K::FiniteSquareDiscriminant:
                                   return "finite_square_discriminant";
                                 case K::FiniteDefinite: return "finite_definite";
                                 case K::InfiniteCandidate: return "infinite_candidate";
                                 case K::NoSolutionsProven: return "no_solutions_proven";
                               }
                               return "?";
                             })
      .def_readonly("k", &dioph::Classification::k)
      .def_readonly("bound", &dioph::Classification::bound)
      .def("__repr__", &dioph::Classification::str);

  py::class_<dioph::Automorphism>(m, "Automorphism")
      .def_readonly("alpha0", &dioph::Automorphism::alpha0)
      .def_readonly("gamma0", &dioph::Automorphism::gamma0)
      .def_readonly("beta0", &dioph::Automorphism::beta0)
      .def_property_readonly(
          "matrix", [](const dioph::Automorphism& a) { return mat2_to_list(a.matrix()); })
      .def("__repr__",
           [](const dioph::Automorphism& a) { return "Automorphism" + a.matrix().str(); });

  py::class_<dioph::SolutionOrbit>(m, "SolutionOrbit")
      .def_readonly("seed", &dioph::SolutionOrbit::seed)
      .def_readonly("sign_class", &dioph::SolutionOrbit::sign_class)
      .def_readonly("equation", &dioph::SolutionOrbit::equation)
      .def_readonly("automorphism", &dioph::SolutionOrbit::automorphism)
      .def("__repr__", [](const dioph::SolutionOrbit& o) {
        return "SolutionOrbit(seed=" + o.seed.str() + ")";
      });

  py::class_<dioph::QuadraticNumber>(m, "QuadraticNumber")
      .def(py::init<dioph::Rat, dioph::Rat, dioph::Int>(), py::arg("p"), py::arg("q"),
           py::arg("d"))
      .def_property_readonly("p", &dioph::QuadraticNumber::p)
      .def_property_readonly("q", &dioph::QuadraticNumber::q)
      .def_property_readonly("d", &dioph::QuadraticNumber::d)
      .def("conj", &dioph::QuadraticNumber::conj)
      .def("norm", &dioph::QuadraticNumber::norm)
      .def("approx", &dioph::QuadraticNumber::approx)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__pow__",
           [](const dioph::QuadraticNumber& x, std::uint64_t n) { return dioph::pow(x, n); })
      .def("__repr__", &dioph::QuadraticNumber::str);

  py::class_<dioph::ClosedForm>(m, "ClosedForm")
      .def_readonly("lam", &dioph::ClosedForm::lambda)
      .def_readonly("px", &dioph::ClosedForm::px)
      .def_readonly("qy", &dioph::ClosedForm::qy)
      .def_readonly("d", &dioph::ClosedForm::field_d)
      .def("x_formula", &dioph::ClosedForm::x_formula)
      .def("y_formula", &dioph::ClosedForm::y_formula)
      .def("__call__", &dioph::eval_closed_form, py::arg("n"))
      .def("__repr__", [](const dioph::ClosedForm& cf) {
        return cf.x_formula() + "; " + cf.y_formula();
      });

  py::class_<dioph::AffineTransform>(m, "AffineTransform")
      .def_readonly("u_row", &dioph::AffineTransform::u_row)
      .def_readonly("v_row", &dioph::AffineTransform::v_row)
      .def_readonly("multiplier", &dioph::AffineTransform::multiplier)
      .def_readonly("x_num", &dioph::AffineTransform::x_num)
      .def_readonly("x_den", &dioph::AffineTransform::x_den)
      .def_readonly("y_num", &dioph::AffineTransform::y_num)
      .def_readonly("y_den", &dioph::AffineTransform::y_den)
      .def("forward", [](const dioph::AffineTransform& t, const dioph::Int& x,
                         const dioph::Int& y) { return t.forward(x, y); });

  py::class_<dioph::ReducedForm>(m, "ReducedForm")
      .def_readonly("a", &dioph::ReducedForm::a)
      .def_readonly("b", &dioph::ReducedForm::b)
      .def_readonly("c", &dioph::ReducedForm::c)
      .def_readonly("transform", &dioph::ReducedForm::transform)
      .def("indefinite", &dioph::ReducedForm::indefinite)
      .def("__repr__", &dioph::ReducedForm::target_str);

  py::class_<dioph::AffineAutomorphism>(m, "AffineAutomorphism")
      .def_property_readonly(
          "matrix", [](const dioph::AffineAutomorphism& a) { return mat3_to_list(a.matrix); })
      .def("apply",
           [](const dioph::AffineAutomorphism& a, const dioph::Solution& s) { return a.apply(s); });

  py::class_<dioph::OrbitAssignment>(m, "OrbitAssignment")
      .def_readonly("seed", &dioph::OrbitAssignment::seed)
      .def_readonly("count", &dioph::OrbitAssignment::count);

  py::class_<dioph::VerificationReport>(m, "VerificationReport")
      .def_readonly("bound", &dioph::VerificationReport::bound)
      .def_readonly("found", &dioph::VerificationReport::found)
      .def_readonly("orbit_counts", &dioph::VerificationReport::orbit_counts)
      .def_readonly("failures", &dioph::VerificationReport::failures)
      .def("ok", &dioph::VerificationReport::ok);

  py::class_<dioph::PellSolveResult>(m, "PellSolveResult")
      .def_readonly("equation", &dioph::PellSolveResult::equation)
      .def_readonly("classification", &dioph::PellSolveResult::classification)
      .def_readonly("automorphism", &dioph::PellSolveResult::automorphism)
      .def_readonly("orbits", &dioph::PellSolveResult::orbits)
      .def_readonly("finite_solutions", &dioph::PellSolveResult::finite_solutions)
      .def_readonly("y_searched", &dioph::PellSolveResult::y_searched)
      .def_readonly("y_max", &dioph::PellSolveResult::y_max)
      .def_readonly("conclusive", &dioph::PellSolveResult::conclusive)
      .def("has_solutions", &dioph::PellSolveResult::has_solutions);

  py::class_<dioph::SolutionFamily>(m, "SolutionFamily")
      .def_readonly("uv_orbit", &dioph::SolutionFamily::uv_orbit)
      .def_readonly("xy_seed", &dioph::SolutionFamily::xy_seed);

  py::class_<dioph::GeneralSolveResult>(m, "GeneralSolveResult")
      .def_readonly("equation", &dioph::GeneralSolveResult::equation)
      .def_readonly("reduced", &dioph::GeneralSolveResult::reduced)
      .def_readonly("classification", &dioph::GeneralSolveResult::classification)
      .def_readonly("reduced_automorphism", &dioph::GeneralSolveResult::reduced_automorphism)
      .def_readonly("affine", &dioph::GeneralSolveResult::affine)
      .def_readonly("families", &dioph::GeneralSolveResult::families)
      .def_readonly("finite_solutions", &dioph::GeneralSolveResult::finite_solutions)
      .def_readonly("finite", &dioph::GeneralSolveResult::finite)
      .def("has_solutions", &dioph::GeneralSolveResult::has_solutions);

  m.def("evaluate_form", &dioph::evaluate_form, py::arg("eq"), py::arg("x"), py::arg("y"));
  m.def("evaluate_general", &dioph::evaluate_general, py::arg("gq"), py::arg("x"), py::arg("y"));
  m.def("gcd_obstruction", &dioph::gcd_obstruction, py::arg("eq"));
  m.def("classify", &dioph::classify, py::arg("eq"));
  m.def("solve_square_case", &dioph::solve_square_case, py::arg("eq"));
  m.def("solve_definite", &dioph::solve_definite, py::arg("gq"));
  m.def("cf_sqrt", [](const dioph::Int& d) {
    auto cf = dioph::cf_sqrt(d);
    return py::make_tuple(py::cast(cf.a0), py::cast(cf.period));
  }, py::arg("d"), "continued fraction of sqrt(d) as (a0, period)");
  m.def("pell_fundamental", &dioph::pell_fundamental, py::arg("d"),
        "minimal (t, u) with t^2 - d u^2 = 1");
  m.def("build_automorphism",
        py::overload_cast<const dioph::Int&, const dioph::Int&>(&dioph::build_automorphism),
        py::arg("a"), py::arg("b"));
  m.def("brute_force", &dioph::brute_force, py::arg("eq"), py::arg("bound"));
  m.def("brute_force_general", &dioph::brute_force_general, py::arg("gq"), py::arg("bound"));
  m.def("descend", &dioph::descend, py::arg("eq"), py::arg("aut"), py::arg("s"));
  m.def("enumerate_orbit", &dioph::enumerate_orbit, py::arg("orbit"), py::arg("n"));
  m.def("enumerate_range", &dioph::enumerate_range, py::arg("orbit"), py::arg("n_max"));
  m.def("verify_completeness", &dioph::verify_completeness, py::arg("eq"), py::arg("orbits"),
        py::arg("bound"));
  m.def("derive_closed_form", &dioph::derive_closed_form, py::arg("orbit"));
  m.def("eval_closed_form", &dioph::eval_closed_form, py::arg("cf"), py::arg("n"));
  m.def("reduce", &dioph::reduce, py::arg("gq"));
  m.def("back_substitute", &dioph::back_substitute, py::arg("transform"), py::arg("uv"));
  m.def("coset_preservation_check", &dioph::coset_preservation_check, py::arg("reduced"),
        py::arg("aut"));
  m.def("affine_automorphism", &dioph::affine_automorphism, py::arg("reduced"), py::arg("aut"));
  m.def("family_term", &dioph::family_term, py::arg("transform"), py::arg("family"),
        py::arg("n"));

  m.def(
      "solve_pell",
      [](const dioph::PellEquation& eq, std::optional<dioph::Int> y_bound) {
        dioph::SolveOptions opts;
        opts.y_bound_override = std::move(y_bound);
        return dioph::solve_pell(eq, opts);
      },
      py::arg("eq"), py::arg("y_bound") = std::nullopt);
  m.def(
      "solve_pell",
      [](const dioph::Int& a, const dioph::Int& b, const dioph::Int& c) {
        return dioph::solve_pell(dioph::PellEquation(a, b, c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("solve_general",
        [](const dioph::GeneralQuadratic& gq) { return dioph::solve_general(gq); },
        py::arg("gq"));

  m.def("solve_json", [](const dioph::PellEquation& eq) {
    auto res = dioph::solve_pell(eq);
    dioph::Json j{{"equation", dioph::to_json(eq)},
                  {"classification", dioph::to_json(res.classification)}};
    if (res.automorphism) j["automorphism"] = dioph::to_json(*res.automorphism);
    return j.dump();
  }, py::arg("eq"), "JSON report with decimal-string numbers");
}
