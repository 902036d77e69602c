#pragma once

#include <string>

#include "polecat/state_matrix.hpp"
#include "polecat/suites.hpp"

namespace polecat {

/// {"n": threads, "dim": 2^n, "entries": [[row, col, "value"], ...]} for a
/// square matrix, entries in (row, col) order.
std::string matrix_json(const SparseMat& m);

/// {"suite", "checks": [{"name", "anchor", "pass", "witness"}], "pass",
/// "format": 1}.
std::string report_json(const Report& r);

}  // namespace polecat
