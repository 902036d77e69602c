#include "polecat/json_io.hpp"

#include <json.hpp>

namespace polecat {

using ordered_json = nlohmann::ordered_json;

std::string matrix_json(const SparseMat& m) {
  ordered_json entries = ordered_json::array();
  for (const auto& [key, v] : m.entries())
    entries.push_back(ordered_json::array({key.first, key.second, v.to_string()}));
  ordered_json out;
  out["n"] = m.target();
  out["dim"] = m.rows();
  out["entries"] = std::move(entries);
  return out.dump();
}

std::string report_json(const Report& r) {
  ordered_json checks = ordered_json::array();
  for (const Check& c : r.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["pass"] = c.pass;
    j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  ordered_json out;
  out["suite"] = r.suite;
  out["checks"] = std::move(checks);
  out["pass"] = r.pass();
  out["format"] = 1;
  return out.dump(2);
}

}  // namespace polecat
