#pragma once

#include <string>
#include <vector>

struct Conformance {
  std::string name;
  bool pass = false;
  std::string detail;
  std::string erratum;
};

std::vector<Conformance> run_conformance();
