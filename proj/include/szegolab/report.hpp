#pragma once
// Machine-readable verification reports shared by every CLI subcommand:
// one schema, one JSON layout, uniform pass/fail accounting.

#include <complex>
#include <string>
#include <vector>

namespace szegolab::report {

using Cplx = std::complex<double>;

// One verified identity or prediction.  `ref` names the mathematical object
// being checked (e.g. "strong Szego constant"), not a document location.
struct Case {
  std::string name;
  std::string ref;
  Cplx lhs{0.0, 0.0};
  Cplx rhs{0.0, 0.0};
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Builds a Case with residual = |lhs - rhs| and verdict vs the tolerance.
Case make_case(const std::string& name, const std::string& ref, Cplx lhs, Cplx rhs,
               double tolerance);

struct Report {
  std::string command;
  std::string config_echo;  // JSON text of the effective configuration
  std::vector<Case> cases;

  bool all_pass() const;
  // {command, config_echo, cases:[{name, ref, lhs:{re,im}, rhs:{re,im},
  //  residual, tolerance, verdict}]}
  std::string to_json() const;
  // One "[PASS]/[FAIL] name: residual vs tolerance" line per case.
  std::string to_text() const;
};

}  // namespace szegolab::report
