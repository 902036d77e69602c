// Frozen single-strand matrices of the eight generators.
//
// Produced by derive_seed_table() (closed-diagram evaluation of each
// threaded generator in every boundary state) and checked against it by
// the test suite.  Rows and columns: 0 = up, 1 = down.

#include <array>
#include <sstream>

#include "polecat/error.hpp"
#include "polecat/parse.hpp"
#include "polecat/rep.hpp"

namespace polecat {

namespace {

constexpr const char* kFrozen = R"(
e 1 0 (i*t^8 - i)/t^4
k 0 0 -i/t^2
k 1 1 i*t^2
kp 0 0 i*t^2
kp 1 1 -i/t^2
f 0 1 (i*t^8 - i)/t^4
l 0 0 -i/t^2
l 1 1 i*t^2
lp 0 0 i*t^2
lp 1 1 -i/t^2
)";

std::array<SparseMat, 8> load() {
  std::array<SparseMat, 8> table;
  for (auto& m : table) m = SparseMat(1, 1);
  std::istringstream in(kFrozen);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string name;
    StateMatrix::Index row = 0, col = 0;
    fields >> name >> row >> col;
    std::string value;
    std::getline(fields, value);
    const auto g = gen_from_name(name);
    if (!g) throw StructuralError("seed table: unknown generator " + name);
    table[static_cast<std::size_t>(*g)].set(row, col, parse_scalar(value));
  }
  return table;
}

}  // namespace

const SparseMat& rho_seed(HGen g) {
  static const std::array<SparseMat, 8> table = load();
  return table[static_cast<std::size_t>(g)];
}

}  // namespace polecat
