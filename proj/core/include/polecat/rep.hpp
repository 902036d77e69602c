#pragma once

// Threading: the pole of an element of H is replaced by n parallel strands,
// giving a 2^n x 2^n matrix rho_n(x).
//
// Two independent routes are provided:
//   rho_n          seed matrices and the coproduct (pole splitting);
//   rho_n_diagram  the literal threaded diagram fed to tl_to_matrix.

#include <array>
#include <string>
#include <vector>

#include "polecat/halg.hpp"
#include "polecat/state_matrix.hpp"
#include "polecat/tl.hpp"

namespace polecat {

/// The frozen 2x2 matrix of a generator threaded by a single strand.
const SparseMat& rho_seed(HGen g);

/// Recomputes the seed table from scratch with eval_closed.
std::array<SparseMat, 8> derive_seed_table();

/// The canonical text of the frozen table, one "name row col value" line
/// per nonzero entry.
std::string seed_table_text(const std::array<SparseMat, 8>& table);

/// The diagram of one generator threaded by n strands (grade n -> n).
TLTerm threaded_diagram(HGen g, int n);
/// A word threaded by n strands; the first letter is on top.
TLTerm threaded_diagram(const HWord& w, int n);

/// rho_n(g) for a generator, via Delta^(n-1) and the seed table.  Cached.
const SparseMat& rho_letter(HGen g, int n);

SparseMat rho_n(const HWord& w, int n);
SparseMat rho_n(const HElement& x, int n);
/// Sum over terms of kron_j rho_{threads[j]}(factor j).
SparseMat rho_tensor(const HTensor& x, const std::vector<int>& threads);

SparseMat rho_n_diagram(const HWord& w, int n);
SparseMat rho_n_diagram(const HElement& x, int n);

struct EqualityWitness {
  bool equal = true;
  int n = -1;
  StateMatrix::Index row = 0;
  StateMatrix::Index col = 0;
  Scalar lhs;
  Scalar rhs;

  std::string describe() const;
};

/// Compares rho_n(x) and rho_n(y) for n = 0..cutoff.  A difference proves
/// x != y in H'; agreement is evidence up to the cutoff only.
EqualityWitness h_equal_upto(const HElement& x, const HElement& y, int cutoff);

/// rho_m(x) F(d) == F(d) rho_n(x) for a vertex-free d: n -> m.
bool intertwine_check(const HElement& x, const TLTerm& d);

}  // namespace polecat
