#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI built alongside the tests; path from the DIOPH_CLI env var.
RunResult run(const std::string& args) {
  const char* bin = std::getenv("DIOPH_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "DIOPH_CLI must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints the worked example") {
  auto r = run("solve -a 2 -b 3 -c -5 --count 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[[5, 6], [4, 5]]"));
  CHECK(contains(r.output, "(2, 1)"));
  CHECK(contains(r.output, "(16, 13)"));
  CHECK(contains(r.output, "(158, 129)"));
  CHECK(contains(r.output, "(2, -1)"));
}

TEST_CASE("solve lists the second worked sequence") {
  auto r = run("solve -a 1 -b 3 -c -4 --count 4");
  CHECK(r.exit_code == 0);
  for (const char* term : {"(2, 0)", "(4, 2)", "(14, 8)", "(52, 30)"})
    CHECK(contains(r.output, term));
}

TEST_CASE("gcd obstruction exits 1 with an explanation") {
  auto r = run("solve -a 4 -b 6 -c 3");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "gcd(4, 6) = 2 does not divide 3"));
}

TEST_CASE("square-discriminant solve and closed-form routing") {
  auto r = run("solve -a 1 -b 4 -c -21");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "(5, 1)"));
  CHECK(contains(r.output, "(11, 5)"));

  auto cf = run("closed-form -a 1 -b 4 -c -21");
  CHECK(cf.exit_code == 1);
  CHECK(contains(cf.output, "square discriminant: closed forms do not apply; use solve"));
}

TEST_CASE("closed-form prints exact surds") {
  auto r = run("closed-form -a 1 -b 3 -c -4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "x_n = (2 + sqrt(3))^n + (2 - sqrt(3))^n"));
  CHECK(contains(r.output,
                 "y_n = sqrt(3)/3 * (2 + sqrt(3))^n - sqrt(3)/3 * (2 - sqrt(3))^n"));

  auto ex1 = run("closed-form -a 2 -b 3 -c -5");
  CHECK(ex1.exit_code == 0);
  CHECK(contains(ex1.output, "(4 + sqrt(6))/4 * (5 + 2*sqrt(6))^n"));
  CHECK(contains(ex1.output, "(4 - sqrt(6))/4"));
}

TEST_CASE("reduce end to end") {
  auto r = run("reduce -A 9 -B 6 -C -13 -D -6 -E -16 -F 20 --count 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "2 u^2 - 7 v^2 + 45 = 0"));
  CHECK(contains(r.output, "u = 3x + y - 1, v = 2y + 1"));
  CHECK(contains(r.output, "[[15, 28], [8, 15]]"));
  CHECK(contains(r.output, "[[11, 52/3, 11/3], [12, 19, 3], [0, 0, 1]]"));
  CHECK(contains(r.output, "(1, 1)"));
  CHECK(contains(r.output, "(2, -2)"));

  auto diag = run("reduce -A 1 -C -3 -F -4");
  CHECK(diag.exit_code == 0);
  CHECK(contains(diag.output, "identity transform"));

  auto degen = run("reduce -A 1 -B 2 -C 1 -F -4");
  CHECK(degen.exit_code == 3);
}

TEST_CASE("verify") {
  auto ok = run("verify -a 2 -b 3 -c -5 --bound 10000");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "PASS"));

  auto ex3 = run("verify -a 1 -b 12 -c 3 --bound 10000");
  CHECK(ex3.exit_code == 0);

  auto broken = run("verify -a 1 -b 3 -c -4 --bound 100 --drop-orbit 0");
  CHECK(broken.exit_code == 4);
  CHECK(contains(broken.output, "(2, 0)"));
}

TEST_CASE("json output is stable and parseable") {
  auto r = run("solve -a 2 -b 3 -c -5 --count 3 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["equation"]["a"] == "2");
  CHECK(j["automorphism"]["matrix"][0][0] == "5");
  CHECK(j["orbits"].size() == 2);
  for (const auto& orbit : j["orbits"]) {
    CHECK(orbit.contains("seed"));
    CHECK(orbit["terms"].is_array());
    for (const auto& term : orbit["terms"]) {
      CHECK(term.is_array());
      CHECK(term.size() == 2);
      CHECK(term[0].is_string());
    }
  }

  auto v = run("verify -a 1 -b 3 -c -4 --bound 200 --json");
  CHECK(v.exit_code == 0);
  auto vj = nlohmann::json::parse(v.output);
  CHECK(vj["report"]["failures"].empty());
  CHECK(vj["report"]["bound"] == "200");

  auto cf = run("closed-form -a 2 -b 3 -c -5 --json");
  auto cfj = nlohmann::json::parse(cf.output);
  CHECK(cfj["orbits"][0]["closed_form"]["lambda"]["p"] == "5");
  CHECK(cfj["orbits"][0]["closed_form"]["lambda"]["q"] == "2");
  CHECK(cfj["orbits"][0]["closed_form"]["lambda"]["d"] == "6");
}

TEST_CASE("paper-examples conformance table") {
  auto r = run("paper-examples");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "PASS  Example 1"));
  CHECK(contains(r.output, "PASS  Example 7"));
  CHECK(contains(r.output, "erratum"));
  CHECK_FALSE(contains(r.output, "FAIL"));
}

TEST_CASE("batch input") {
  std::string path = "/tmp/dioph_batch_test.txt";
  {
    std::ofstream f(path);
    f << "2 3 -5\n";
    f << "# comment line\n";
    f << "9 6 -13 -6 -16 20\n";
  }
  auto r = run("solve --input " + path + " --count 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[[5, 6], [4, 5]]"));
  CHECK(contains(r.output, "2 u^2 - 7 v^2 + 45 = 0"));
  std::remove(path.c_str());
}

TEST_CASE("bound override below the analytic bound is inconclusive") {
  auto r = run("solve -a 2 -b 3 -c -5 --y-bound 0");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "inconclusive"));
}

TEST_CASE("malformed input exits 2 and never crashes") {
  CHECK(run("solve -a 0 -b 3 -c -5").exit_code == 2);
  CHECK(run("solve -a 2 -b 3 -c 0").exit_code == 2);
  CHECK(run("solve -a x -b 3 -c -5").exit_code == 2);
  CHECK(run("solve -a 2 -b 3").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("solve -A 0 -B 0 -C 0 -D 1 -E 2 -F 3").exit_code == 3);

  // exit codes stay in the documented set on a small integer grid
  for (int a = -1; a <= 2; ++a)
    for (int b = -1; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        auto r = run("solve -a " + std::to_string(a) + " -b " + std::to_string(b) + " -c " +
                     std::to_string(c) + " --count 2");
        CHECK(r.exit_code >= 0);
        CHECK(r.exit_code <= 4);
      }
}
