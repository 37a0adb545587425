// Command-line front end: classify, solve, enumerate, closed forms,
// general-quadratic reduction, and completeness verification, in plain text
// or JSON (all numbers as decimal strings).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conformance.hpp"
#include "dioph/closed_form.hpp"
#include "dioph/json_io.hpp"
#include "dioph/oracle.hpp"
#include "dioph/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolutions = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitVerifyFailed = 4;

using dioph::Int;
using dioph::Json;

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("'" + text + "' is not an integer");
  }
}

struct PellFlags {
  std::string a, b, c;

  void attach(CLI::App* cmd, bool required) {
    auto* oa = cmd->add_option("-a", a, "coefficient a of a x^2 - b y^2 + c = 0");
    auto* ob = cmd->add_option("-b", b, "coefficient b");
    auto* oc = cmd->add_option("-c", c, "coefficient c");
    if (required) {
      oa->required();
      ob->required();
      oc->required();
    }
  }

  dioph::PellEquation equation() const {
    return dioph::PellEquation(parse_int(a), parse_int(b), parse_int(c));
  }
};

struct GeneralFlags {
  std::string A = "0", B = "0", C = "0", D = "0", E = "0", F = "0";
  bool seen = false;

  void attach(CLI::App* cmd) {
    auto mark = [this](CLI::Option* o) { o->each([this](const std::string&) { seen = true; }); };
    mark(cmd->add_option("-A", A, "coefficient of x^2"));
    mark(cmd->add_option("-B", B, "coefficient of xy"));
    mark(cmd->add_option("-C", C, "coefficient of y^2"));
    mark(cmd->add_option("-D", D, "coefficient of x"));
    mark(cmd->add_option("-E", E, "coefficient of y"));
    mark(cmd->add_option("-F", F, "constant term"));
  }

  dioph::GeneralQuadratic equation() const {
    return dioph::GeneralQuadratic(parse_int(A), parse_int(B), parse_int(C), parse_int(D),
                                   parse_int(E), parse_int(F));
  }
};

void emit(bool json, const Json& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- solve --

int solve_pell_equation(const dioph::PellEquation& eq, std::uint64_t count,
                        const std::optional<Int>& y_bound, bool json) {
  dioph::SolveOptions opts;
  opts.y_bound_override = y_bound;
  dioph::PellSolveResult res = dioph::solve_pell(eq, opts);

  Json j{{"equation", dioph::to_json(eq)},
         {"classification", dioph::to_json(res.classification)}};
  std::ostringstream text;
  text << "equation: " << eq.str() << "\n";
  text << "classification: " << res.classification.str() << "\n";

  if (res.classification.kind == dioph::Classification::Kind::NoSolutionsGcd) {
    Int g = dioph::gcd(eq.a, eq.b);
    text << "no solutions: gcd(" << eq.a.get_str() << ", " << eq.b.get_str() << ") = "
         << g.get_str() << " does not divide " << eq.c.get_str() << "\n";
    emit(json, j, text.str());
    return kExitNoSolutions;
  }

  if (res.classification.kind == dioph::Classification::Kind::FiniteSquareDiscriminant) {
    Json sols = Json::array();
    text << "complete solution set (" << res.finite_solutions.size() << " solutions):\n";
    for (const auto& s : res.finite_solutions) {
      sols.push_back(dioph::to_json(s));
      text << "  " << s.str() << "\n";
    }
    j["solutions"] = sols;
    emit(json, j, text.str());
    return res.finite_solutions.empty() ? kExitNoSolutions : kExitOk;
  }

  j["automorphism"] = dioph::to_json(*res.automorphism);
  j["search"] = Json{{"y_searched", dioph::to_json(res.y_searched)},
                     {"y_max", dioph::to_json(res.y_max)},
                     {"conclusive", res.conclusive}};
  text << "automorphism A = " << res.automorphism->matrix().str() << "   (alpha0 = "
       << res.automorphism->alpha0.get_str() << ", gamma0 = " << res.automorphism->gamma0.get_str()
       << ")\n";
  text << "seed search: y <= " << res.y_searched.get_str() << " (resolvent cap "
       << res.y_max.get_str() << ")\n";

  if (res.orbits.empty()) {
    if (res.conclusive) {
      text << "no solutions: seed search exhausted\n";
      emit(json, j, text.str());
      return kExitNoSolutions;
    }
    text << "no solutions found below the override bound (inconclusive)\n";
    j["inconclusive"] = true;
    emit(json, j, text.str());
    return kExitNoSolutions;
  }

  Json orbits = Json::array();
  text << "orbits: " << res.orbits.size() << "\n";
  for (const auto& orbit : res.orbits) {
    std::vector<dioph::Solution> terms = dioph::enumerate_range(orbit, count ? count - 1 : 0);
    Json terms_json = Json::array();
    text << "  seed " << orbit.seed.str() << ", sign " << (orbit.sign_class > 0 ? "+1" : "-1")
         << ":\n";
    for (std::size_t n = 0; n < terms.size(); ++n) {
      terms_json.push_back(dioph::to_json(terms[n]));
      text << "    n = " << n << ": " << terms[n].str() << "\n";
    }
    orbits.push_back(Json{{"seed", dioph::to_json(orbit.seed)},
                          {"sign", orbit.sign_class},
                          {"terms", terms_json}});
  }
  j["orbits"] = orbits;
  emit(json, j, text.str());
  return kExitOk;
}

int solve_general_equation(const dioph::GeneralQuadratic& gq, std::uint64_t count, bool json) {
  dioph::GeneralSolveResult res = dioph::solve_general(gq);
  Json j{{"equation", dioph::to_json(gq)},
         {"reduced", Json{{"a", dioph::to_json(res.reduced.a)},
                          {"b", dioph::to_json(res.reduced.b)},
                          {"c", dioph::to_json(res.reduced.c)},
                          {"text", res.reduced.target_str()}}},
         {"transform", dioph::to_json(res.reduced.transform)},
         {"classification", dioph::to_json(res.classification)}};
  std::ostringstream text;
  text << "equation: " << gq.str() << "\n";
  text << "reduced: " << res.reduced.target_str() << " with multiplier "
       << res.reduced.transform.multiplier.get_str() << "\n";
  text << "classification: " << res.classification.str() << "\n";

  if (res.finite || !res.has_solutions()) {
    Json sols = Json::array();
    text << "complete solution set (" << res.finite_solutions.size() << " solutions):\n";
    for (const auto& s : res.finite_solutions) {
      sols.push_back(dioph::to_json(s));
      text << "  " << s.str() << "\n";
    }
    j["solutions"] = sols;
    emit(json, j, text.str());
    return res.finite_solutions.empty() ? kExitNoSolutions : kExitOk;
  }

  j["reduced_automorphism"] = dioph::to_json(*res.reduced_automorphism);
  if (res.affine) j["affine_automorphism"] = dioph::to_json(res.affine->matrix);
  text << "reduced automorphism: " << res.reduced_automorphism->matrix().str() << "\n";
  if (res.affine) text << "affine automorphism: " << res.affine->matrix.str() << "\n";

  Json families = Json::array();
  text << "families: " << res.families.size() << "\n";
  for (const auto& fam : res.families) {
    Json terms = Json::array();
    text << "  (u, v) seed " << fam.uv_orbit.seed.str() << " -> (x, y) seed "
         << fam.xy_seed.str() << ":\n";
    for (std::uint64_t n = 0; n < count; ++n) {
      auto s = dioph::family_term(res.reduced.transform, fam, n);
      if (!s) continue;
      terms.push_back(dioph::to_json(*s));
      text << "    n = " << n << ": " << s->str() << "\n";
    }
    families.push_back(Json{{"uv_seed", dioph::to_json(fam.uv_orbit.seed)},
                            {"xy_seed", dioph::to_json(fam.xy_seed)},
                            {"terms", terms}});
  }
  j["families"] = families;
  emit(json, j, text.str());
  return kExitOk;
}

// ---------------------------------------------------------- closed form --

int run_closed_form(const dioph::PellEquation& eq, std::uint64_t check_n, bool json) {
  dioph::PellSolveResult res = dioph::solve_pell(eq);
  if (res.classification.kind == dioph::Classification::Kind::NoSolutionsGcd) {
    std::cout << "no solutions: " << res.classification.str() << "\n";
    return kExitNoSolutions;
  }
  if (res.classification.kind == dioph::Classification::Kind::FiniteSquareDiscriminant) {
    std::cout << "square discriminant: closed forms do not apply; use solve\n";
    return kExitNoSolutions;
  }
  if (res.orbits.empty()) {
    std::cout << "no solutions: " << res.classification.str() << "\n";
    return kExitNoSolutions;
  }

  Json j{{"equation", dioph::to_json(eq)}, {"orbits", Json::array()}};
  std::ostringstream text;
  text << "equation: " << eq.str() << "\n";
  for (const auto& orbit : res.orbits) {
    dioph::ClosedForm cf = dioph::derive_closed_form(orbit);
    for (std::uint64_t n = 0; n <= check_n; ++n)
      if (dioph::eval_closed_form(cf, n) != dioph::enumerate_orbit(orbit, n))
        throw std::logic_error("closed form disagrees with matrix enumeration");
    j["orbits"].push_back(Json{{"seed", dioph::to_json(orbit.seed)},
                               {"closed_form", dioph::to_json(cf)},
                               {"checked_n", check_n}});
    text << "orbit seed " << orbit.seed.str() << ":\n";
    text << "  " << cf.x_formula() << "\n";
    text << "  " << cf.y_formula() << "\n";
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.9g", cf.lambda.approx());
    text << "  lambda = " << cf.lambda.str() << " (approx. " << approx
         << "); verified against matrix enumeration for n <= " << check_n << "\n";
  }
  emit(json, j, text.str());
  return kExitOk;
}

// --------------------------------------------------------------- reduce --

std::string affine_row_str(const std::array<Int, 3>& row) {
  std::ostringstream out;
  bool leading = true;
  const char* sym[] = {"x", "y", ""};
  for (int i = 0; i < 3; ++i) {
    const Int& coeff = row[i];
    if (coeff == 0) continue;
    Int a = abs(coeff);
    if (leading)
      out << (coeff < 0 ? "-" : "");
    else
      out << (coeff < 0 ? " - " : " + ");
    if (a != 1 || i == 2) out << a.get_str();
    out << sym[i];
    leading = false;
  }
  if (leading) out << "0";
  return out.str();
}

int run_reduce(const dioph::GeneralQuadratic& gq, std::uint64_t count, bool json) {
  dioph::GeneralSolveResult res = dioph::solve_general(gq);
  bool identity = res.reduced.transform.u_row == std::array<Int, 3>{1, 0, 0} &&
                  res.reduced.transform.v_row == std::array<Int, 3>{0, 1, 0};
  Json j{{"equation", dioph::to_json(gq)},
         {"target", Json{{"a", dioph::to_json(res.reduced.a)},
                         {"b", dioph::to_json(res.reduced.b)},
                         {"c", dioph::to_json(res.reduced.c)},
                         {"text", res.reduced.target_str()}}},
         {"transform", dioph::to_json(res.reduced.transform)},
         {"identity_transform", identity}};
  std::ostringstream text;
  text << "equation: " << gq.str() << "\n";
  text << "target: " << res.reduced.target_str() << "\n";
  text << "substitution: u = " << affine_row_str(res.reduced.transform.u_row)
       << ", v = " << affine_row_str(res.reduced.transform.v_row) << "\n";
  text << "multiplier: " << res.reduced.transform.multiplier.get_str() << "\n";
  if (identity) text << "note: input is already diagonal (identity transform)\n";

  if (res.finite || !res.has_solutions()) {
    Json sols = Json::array();
    text << "finite case; complete solution set (" << res.finite_solutions.size()
         << " solutions):\n";
    for (const auto& s : res.finite_solutions) {
      sols.push_back(dioph::to_json(s));
      text << "  " << s.str() << "\n";
    }
    j["solutions"] = sols;
    emit(json, j, text.str());
    return res.finite_solutions.empty() ? kExitNoSolutions : kExitOk;
  }

  j["reduced_automorphism"] = dioph::to_json(*res.reduced_automorphism);
  text << "reduced automorphism: " << res.reduced_automorphism->matrix().str() << "\n";
  bool coset = dioph::coset_preservation_check(res.reduced, *res.reduced_automorphism);
  j["coset_preserved"] = coset;
  text << "integrality coset preserved: " << (coset ? "yes" : "no") << "\n";
  if (res.affine) {
    j["affine_automorphism"] = dioph::to_json(res.affine->matrix);
    text << "affine automorphism: " << res.affine->matrix.str() << "\n";
  }

  Json families = Json::array();
  text << "families: " << res.families.size() << "\n";
  for (const auto& fam : res.families) {
    Json terms = Json::array();
    text << "  (u, v) seed " << fam.uv_orbit.seed.str() << " -> (x, y) seed "
         << fam.xy_seed.str() << ":\n";
    for (std::uint64_t n = 0; n < count; ++n) {
      auto s = dioph::family_term(res.reduced.transform, fam, n);
      if (!s) continue;
      terms.push_back(dioph::to_json(*s));
      text << "    n = " << n << ": " << s->str() << "\n";
    }
    families.push_back(Json{{"uv_seed", dioph::to_json(fam.uv_orbit.seed)},
                            {"xy_seed", dioph::to_json(fam.xy_seed)},
                            {"terms", terms}});
  }
  j["families"] = families;
  emit(json, j, text.str());
  return kExitOk;
}

// --------------------------------------------------------------- verify --

int run_verify(const dioph::PellEquation& eq, const Int& bound,
               const std::optional<std::size_t>& drop_orbit, bool json) {
  dioph::PellSolveResult res = dioph::solve_pell(eq);

  if (res.classification.kind == dioph::Classification::Kind::FiniteSquareDiscriminant) {
    std::vector<dioph::Solution> expected;
    for (const auto& s : res.finite_solutions)
      if (abs(s.x) <= bound && abs(s.y) <= bound) expected.push_back(s);
    std::vector<dioph::Solution> actual = dioph::brute_force(eq, bound);
    bool ok = expected == actual;
    Json j{{"equation", dioph::to_json(eq)},
           {"bound", dioph::to_json(bound)},
           {"found", actual.size()},
           {"matches_square_case", ok}};
    std::ostringstream text;
    text << "square-discriminant case: oracle found " << actual.size() << " solutions, solver "
         << (ok ? "matches exactly" : "MISMATCH") << "\n";
    emit(json, j, text.str());
    return ok ? kExitOk : kExitVerifyFailed;
  }

  std::vector<dioph::SolutionOrbit> orbits = res.orbits;
  if (drop_orbit) {
    if (*drop_orbit >= orbits.size()) throw CLI::ValidationError("--drop-orbit index out of range");
    orbits.erase(orbits.begin() + static_cast<std::ptrdiff_t>(*drop_orbit));
  }
  dioph::VerificationReport report = dioph::verify_completeness(eq, orbits, bound);

  Json j{{"equation", dioph::to_json(eq)}, {"report", dioph::to_json(report)}};
  std::ostringstream text;
  text << "equation: " << eq.str() << "\n";
  text << "oracle solutions with |x|, |y| <= " << bound.get_str() << ": " << report.found << "\n";
  for (const auto& oc : report.orbit_counts)
    text << "  orbit " << oc.seed.str() << ": " << oc.count << " assigned\n";
  if (report.ok()) {
    text << "completeness: PASS (0 failures)\n";
    emit(json, j, text.str());
    return kExitOk;
  }
  text << "completeness: FAIL, " << report.failures.size() << " unassigned solutions:\n";
  for (const auto& s : report.failures) text << "  " << s.str() << "\n";
  emit(json, j, text.str());
  return kExitVerifyFailed;
}

// ------------------------------------------------------- paper examples --

int run_paper_examples(bool json) {
  std::vector<Conformance> rows = run_conformance();
  bool all = true;
  Json j = Json::array();
  std::ostringstream text;
  for (const auto& row : rows) {
    all = all && row.pass;
    j.push_back(Json{{"name", row.name},
                     {"pass", row.pass},
                     {"detail", row.detail},
                     {"erratum", row.erratum}});
    text << (row.pass ? "PASS" : "FAIL") << "  " << row.name << ": " << row.detail << "\n";
    if (!row.erratum.empty()) text << "      erratum: " << row.erratum << "\n";
  }
  emit(json, j, text.str());
  return all ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- batch --

int run_batch(const std::string& path, std::uint64_t count, bool json) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open input file " + path);
  std::string line;
  int worst = kExitOk;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<std::string> tok;
    std::string t;
    while (row >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    int rc;
    if (tok.size() == 3) {
      rc = solve_pell_equation(
          dioph::PellEquation(parse_int(tok[0]), parse_int(tok[1]), parse_int(tok[2])), count, {},
          json);
    } else if (tok.size() == 6) {
      rc = solve_general_equation(
          dioph::GeneralQuadratic(parse_int(tok[0]), parse_int(tok[1]), parse_int(tok[2]),
                                  parse_int(tok[3]), parse_int(tok[4]), parse_int(tok[5])),
          count, json);
    } else {
      throw CLI::ValidationError("input lines must have 3 (a b c) or 6 (A..F) integers");
    }
    worst = std::max(worst, rc);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for a x^2 - b y^2 + c = 0 and general binary quadratic "
               "Diophantine equations"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "classify and solve an equation");
  PellFlags solve_pell_flags;
  GeneralFlags solve_general_flags;
  solve_pell_flags.attach(solve, false);
  solve_general_flags.attach(solve);
  std::uint64_t count = 5;
  solve->add_option("--count", count, "solutions to list per orbit (default 5)");
  std::string y_bound_str;
  solve->add_option("--y-bound", y_bound_str, "override the fundamental-seed search bound");
  std::string input_file;
  solve->add_option("--input", input_file, "batch file, one equation per line");
  bool solve_json = false;
  solve->add_flag("--json", solve_json, "JSON output");

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "exact surd expression per orbit");
  PellFlags closed_flags;
  closed_flags.attach(closed, true);
  std::uint64_t check_n = 10;
  closed->add_option("--check-n", check_n, "cross-check against enumeration up to n (default 10)");
  bool closed_json = false;
  closed->add_flag("--json", closed_json, "JSON output");

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "diagonalize a general quadratic and solve it");
  GeneralFlags reduce_flags;
  reduce_flags.attach(reduce_cmd);
  std::uint64_t reduce_count = 5;
  reduce_cmd->add_option("--count", reduce_count, "solutions to list per family (default 5)");
  bool reduce_json = false;
  reduce_cmd->add_flag("--json", reduce_json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "audit orbit completeness against brute force");
  PellFlags verify_flags;
  verify_flags.attach(verify, true);
  std::string bound_str = "10000";
  verify->add_option("--bound", bound_str, "oracle sweep bound (default 10000)");
  std::int64_t drop_orbit = -1;
  verify->add_option("--drop-orbit", drop_orbit, "drop the i-th orbit before verifying (test hook)");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "JSON output");

  // paper-examples
  auto* golden = app.add_subcommand("paper-examples", "run the built-in conformance suite");
  bool golden_json = false;
  golden->add_flag("--json", golden_json, "JSON output");

  try {
    app.parse(argc, argv);

    if (solve->parsed()) {
      if (!input_file.empty()) return run_batch(input_file, count, solve_json);
      std::optional<Int> yb;
      if (!y_bound_str.empty()) yb = parse_int(y_bound_str);
      if (solve_general_flags.seen) {
        const GeneralFlags& gf = solve_general_flags;
        if (parse_int(gf.A) == 0 && parse_int(gf.B) == 0 && parse_int(gf.C) == 0) {
          std::cerr << "unsupported equation: quadratic part is zero\n";
          return kExitUnsupported;
        }
        return solve_general_equation(gf.equation(), count, solve_json);
      }
      if (solve_pell_flags.a.empty() || solve_pell_flags.b.empty() || solve_pell_flags.c.empty())
        throw CLI::ValidationError("provide -a -b -c or -A..-F");
      return solve_pell_equation(solve_pell_flags.equation(), count, yb, solve_json);
    }
    if (closed->parsed()) return run_closed_form(closed_flags.equation(), check_n, closed_json);
    if (reduce_cmd->parsed()) {
      const GeneralFlags& gf = reduce_flags;
      if (!gf.seen) throw CLI::ValidationError("provide -A..-F coefficients");
      if (parse_int(gf.A) == 0 && parse_int(gf.B) == 0 && parse_int(gf.C) == 0) {
        std::cerr << "unsupported equation: quadratic part is zero\n";
        return kExitUnsupported;
      }
      return run_reduce(gf.equation(), reduce_count, reduce_json);
    }
    if (verify->parsed()) {
      std::optional<std::size_t> drop;
      if (drop_orbit >= 0) drop = static_cast<std::size_t>(drop_orbit);
      return run_verify(verify_flags.equation(), parse_int(bound_str), drop, verify_json);
    }
    if (golden->parsed()) return run_paper_examples(golden_json);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const dioph::DegenerateConicError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
}
