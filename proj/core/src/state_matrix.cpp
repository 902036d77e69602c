#include "polecat/state_matrix.hpp"

#include <vector>

#include "polecat/error.hpp"

namespace polecat {

StateMatrix::StateMatrix(int source, int target) : source_(source), target_(target) {
  if (source < 0 || target < 0 || source > 62 || target > 62)
    throw StructuralError("state matrix grades out of range");
}

StateMatrix StateMatrix::identity(int n) {
  StateMatrix m(n, n);
  for (Index k = 0; k < m.rows(); ++k) m.entries_.emplace(Key{k, k}, Scalar(1));
  return m;
}

StateMatrix StateMatrix::scalar(const Scalar& s) {
  StateMatrix m(0, 0);
  if (!s.is_zero()) m.entries_.emplace(Key{0, 0}, s);
  return m;
}

Scalar StateMatrix::at(Index row, Index col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

void StateMatrix::add(Index row, Index col, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(Key{row, col}, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

void StateMatrix::set(Index row, Index col, Scalar v) {
  if (v.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_.insert_or_assign(Key{row, col}, std::move(v));
  }
}

StateMatrix& StateMatrix::operator+=(const StateMatrix& o) {
  if (o.source_ != source_ || o.target_ != target_)
    throw StructuralError("adding matrices of different shapes");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
  return *this;
}

StateMatrix& StateMatrix::operator-=(const StateMatrix& o) {
  if (o.source_ != source_ || o.target_ != target_)
    throw StructuralError("subtracting matrices of different shapes");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
  return *this;
}

StateMatrix& StateMatrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

StateMatrix operator*(const StateMatrix& a, const StateMatrix& b) {
  if (a.source_ != b.target_)
    throw StructuralError("matrix product: inner grades differ (" +
                          std::to_string(a.source_) + " vs " +
                          std::to_string(b.target_) + ")");
  StateMatrix out(b.source_, a.target_);
  // Bucket b by row so each entry of a meets only its partners.
  std::map<StateMatrix::Index, std::vector<std::pair<StateMatrix::Index, const Scalar*>>> rows_of_b;
  for (const auto& [k, v] : b.entries_) rows_of_b[k.first].emplace_back(k.second, &v);
  for (const auto& [ka, va] : a.entries_) {
    auto it = rows_of_b.find(ka.second);
    if (it == rows_of_b.end()) continue;
    for (const auto& [col, vb] : it->second) out.add(ka.first, col, va * *vb);
  }
  return out;
}

bool StateMatrix::first_difference(const StateMatrix& a, const StateMatrix& b, Key& where) {
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      where = ia->first;
      return true;
    }
    if (ia == a.entries_.end() || ib->first < ia->first) {
      where = ib->first;
      return true;
    }
    if (!(ia->second == ib->second)) {
      where = ia->first;
      return true;
    }
    ++ia;
    ++ib;
  }
  return false;
}

StateMatrix kron(const StateMatrix& a, const StateMatrix& b) {
  StateMatrix out(a.source() + b.source(), a.target() + b.target());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries())
      out.set((ka.first << b.target()) | kb.first, (ka.second << b.source()) | kb.second,
              va * vb);
  return out;
}

std::string state_word(StateMatrix::Index state, int n) {
  std::string w;
  for (int k = n - 1; k >= 0; --k) w += ((state >> k) & 1U) ? 'd' : 'u';
  return w;
}

}  // namespace polecat
