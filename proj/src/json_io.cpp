#include "dioph/json_io.hpp"

namespace dioph {

Json to_json(const Int& n) { return n.get_str(); }
Json to_json(const Rat& r) { return to_decimal(r); }

Json to_json(const Solution& s) { return Json::array({to_json(s.x), to_json(s.y)}); }

Json to_json(const PellEquation& eq) {
  return Json{{"a", to_json(eq.a)}, {"b", to_json(eq.b)}, {"c", to_json(eq.c)},
              {"text", eq.str()}};
}

Json to_json(const GeneralQuadratic& gq) {
  return Json{{"A", to_json(gq.A)}, {"B", to_json(gq.B)}, {"C", to_json(gq.C)},
              {"D", to_json(gq.D)}, {"E", to_json(gq.E)}, {"F", to_json(gq.F)},
              {"text", gq.str()}};
}

Json to_json(const Classification& c) {
  Json j{{"text", c.str()}};
  switch (c.kind) {
    case Classification::Kind::NoSolutionsGcd:
      j["kind"] = "no_solutions_gcd";
      break;
    case Classification::Kind::FiniteSquareDiscriminant:
      j["kind"] = "finite_square_discriminant";
      j["k"] = to_json(c.k);
      break;
    case Classification::Kind::FiniteDefinite:
      j["kind"] = "finite_definite";
      break;
    case Classification::Kind::InfiniteCandidate:
      j["kind"] = "infinite_candidate";
      break;
    case Classification::Kind::NoSolutionsProven:
      j["kind"] = "no_solutions_proven";
      j["searched_bound"] = to_json(c.bound);
      break;
  }
  return j;
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({to_json(m.m00), to_json(m.m01)}),
                      Json::array({to_json(m.m10), to_json(m.m11)})});
}

Json to_json(const Mat3Q& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_json(m.m[i][j]));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Automorphism& aut) {
  return Json{{"alpha0", to_json(aut.alpha0)},
              {"gamma0", to_json(aut.gamma0)},
              {"beta0", to_json(aut.beta0)},
              {"matrix", to_json(aut.matrix())}};
}

Json to_json(const QuadraticNumber& v) {
  return Json{{"p", to_json(v.p())}, {"q", to_json(v.q())}, {"d", to_json(v.d())}};
}

Json to_json(const ClosedForm& cf) {
  return Json{{"lambda", to_json(cf.lambda)},
              {"px", to_json(cf.px)},
              {"qy", to_json(cf.qy)},
              {"d", to_json(cf.field_d)},
              {"x", cf.x_formula()},
              {"y", cf.y_formula()}};
}

Json to_json(const AffineTransform& t) {
  auto row = [](const std::array<Int, 3>& r) {
    return Json::array({to_json(r[0]), to_json(r[1]), to_json(r[2])});
  };
  return Json{{"u", row(t.u_row)},
              {"v", row(t.v_row)},
              {"multiplier", to_json(t.multiplier)},
              {"back",
               {{"x", Json::array({row(t.x_num), to_json(t.x_den)})},
                {"y", Json::array({row(t.y_num), to_json(t.y_den)})}}}};
}

Json to_json(const VerificationReport& report) {
  Json orbits = Json::array();
  for (const auto& oc : report.orbit_counts)
    orbits.push_back(Json{{"seed", to_json(oc.seed)}, {"count", oc.count}});
  Json failures = Json::array();
  for (const auto& s : report.failures) failures.push_back(to_json(s));
  return Json{{"bound", to_json(report.bound)},
              {"found", report.found},
              {"orbits", orbits},
              {"failures", failures}};
}

}  // namespace dioph
