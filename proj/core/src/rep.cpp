#include "polecat/rep.hpp"

#include <map>
#include <mutex>

#include "polecat/error.hpp"

namespace polecat {

namespace {

TLTerm pad(const TLTerm& piece, int left, int right) {
  TLTerm out = piece;
  if (left > 0) out = TLTerm::tensor(TLTerm::id(left), out);
  if (right > 0) out = TLTerm::tensor(out, TLTerm::id(right));
  return out;
}

}  // namespace

TLTerm threaded_diagram(HGen g, int n) {
  if (n < 0) throw PreconditionError("thread count must be nonnegative");
  const GenShape s = gen_shape(g);
  // The strand leaves its left vertex, climbs across the n threads from
  // left to right and ends at its right vertex.
  TLTerm d = pad(TLTerm::stub(Side::east, s.left, StubEnd::start), 0, n);
  for (int i = 0; i < n; ++i) {
    const TLTerm x = s.over ? TLTerm::cross_pos() : TLTerm::cross_neg();
    d = TLTerm::stack(d, pad(x, i, n - 1 - i));
  }
  return TLTerm::stack(d, pad(TLTerm::stub(Side::west, s.right, StubEnd::end), n, 0));
}

TLTerm threaded_diagram(const HWord& w, int n) {
  TLTerm d = TLTerm::id(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) d = TLTerm::stack(d, threaded_diagram(*it, n));
  return d;
}

std::array<SparseMat, 8> derive_seed_table() {
  std::array<SparseMat, 8> out;
  for (HGen g : kAllGens)
    out[static_cast<std::size_t>(g)] = tl_to_matrix_oracle(threaded_diagram(g, 1));
  return out;
}

std::string seed_table_text(const std::array<SparseMat, 8>& table) {
  std::string out;
  for (HGen g : kAllGens)
    for (const auto& [key, v] : table[static_cast<std::size_t>(g)].entries())
      out += std::string(gen_name(g)) + " " + std::to_string(key.first) + " " +
             std::to_string(key.second) + " " + v.to_string() + "\n";
  return out;
}

const SparseMat& rho_letter(HGen g, int n) {
  static std::mutex mutex;
  static std::map<std::pair<HGen, int>, SparseMat> cache;
  if (n < 0) throw PreconditionError("thread count must be nonnegative");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({g, n});
    if (it != cache.end()) return it->second;
  }
  SparseMat m;
  if (n == 0) {
    m = SparseMat::scalar(h_counit(HElement(HWord{g})));
  } else {
    m = SparseMat(n, n);
    for (const auto& [key, c] : iterate_coproduct(HElement(HWord{g}), n)) {
      SparseMat term = SparseMat::scalar(c);
      for (const HWord& factor : key) {
        SparseMat f = SparseMat::identity(1);
        for (HGen letter : factor) f = f * rho_seed(letter);
        term = kron(term, f);
      }
      m += term;
    }
  }
  std::lock_guard lock(mutex);
  // std::map never moves its nodes, so the reference stays valid.
  return cache.try_emplace({g, n}, std::move(m)).first->second;
}

SparseMat rho_n(const HWord& w, int n) {
  SparseMat out = SparseMat::identity(n);
  for (HGen g : w) out = out * rho_letter(g, n);
  return out;
}

SparseMat rho_n(const HElement& x, int n) {
  SparseMat out(n, n);
  for (const auto& [w, c] : x) out += rho_n(w, n) * c;
  return out;
}

SparseMat rho_tensor(const HTensor& x, const std::vector<int>& threads) {
  if (static_cast<int>(threads.size()) != x.arity())
    throw StructuralError("rho_tensor: one thread count per tensor factor");
  int total = 0;
  for (int n : threads) total += n;
  SparseMat out(total, total);
  for (const auto& [key, c] : x.sum()) {
    SparseMat term = SparseMat::scalar(c);
    for (std::size_t j = 0; j < key.size(); ++j) term = kron(term, rho_n(key[j], threads[j]));
    out += term;
  }
  return out;
}

SparseMat rho_n_diagram(const HWord& w, int n) { return tl_to_matrix(threaded_diagram(w, n)); }

SparseMat rho_n_diagram(const HElement& x, int n) {
  SparseMat out(n, n);
  for (const auto& [w, c] : x) out += rho_n_diagram(w, n) * c;
  return out;
}

std::string EqualityWitness::describe() const {
  if (equal) return "";
  return "n=" + std::to_string(n) + " entry (" + std::to_string(row) + "," + std::to_string(col) +
         "): " + lhs.to_string() + " vs " + rhs.to_string();
}

EqualityWitness h_equal_upto(const HElement& x, const HElement& y, int cutoff) {
  EqualityWitness w;
  for (int n = 0; n <= cutoff; ++n) {
    const SparseMat a = rho_n(x, n);
    const SparseMat b = rho_n(y, n);
    StateMatrix::Key where;
    if (StateMatrix::first_difference(a, b, where)) {
      w.equal = false;
      w.n = n;
      w.row = where.first;
      w.col = where.second;
      w.lhs = a.at(where.first, where.second);
      w.rhs = b.at(where.first, where.second);
      return w;
    }
  }
  return w;
}

bool intertwine_check(const HElement& x, const TLTerm& d) {
  if (d.has_stubs()) throw PreconditionError("intertwine_check: diagram has univalent vertices");
  const SparseMat f = tl_to_matrix(d);
  return rho_n(x, d.target()) * f == f * rho_n(x, d.source());
}

}  // namespace polecat
