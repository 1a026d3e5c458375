#include "szegolab/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace szegolab::report {

Case make_case(const std::string& name, const std::string& ref, Cplx lhs, Cplx rhs,
               double tolerance) {
  Case c;
  c.name = name;
  c.ref = ref;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.tolerance = tolerance;
  c.pass = c.residual < tolerance;
  return c;
}

bool Report::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["config_echo"] =
      config_echo.empty() ? nlohmann::json::object() : nlohmann::json::parse(config_echo);
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["ref"] = c.ref;
    jc["lhs"] = {{"re", c.lhs.real()}, {"im", c.lhs.imag()}};
    jc["rhs"] = {{"re", c.rhs.real()}, {"im", c.rhs.imag()}};
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["verdict"] = c.pass ? "pass" : "fail";
    j["cases"].push_back(jc);
  }
  return j.dump(2);
}

std::string Report::to_text() const {
  std::string out;
  char line[256];
  for (const auto& c : cases) {
    std::snprintf(line, sizeof(line), "[%s] %s: residual %.3e vs tolerance %.3e\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual, c.tolerance);
    out += line;
  }
  return out;
}

}  // namespace szegolab::report
