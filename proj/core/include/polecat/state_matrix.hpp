#pragma once

// Sparse exact matrices indexed by oriented boundary states.
//
// A morphism with `source` bottom points and `target` top points is a
// 2^target x 2^source matrix.  A basis state is a word over {up, down}
// (one letter per boundary point, leftmost point = most significant bit),
// encoded as an integer with up = 0 and down = 1.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "polecat/scalar.hpp"

namespace polecat {

enum class Arrow : std::uint8_t { up = 0, down = 1 };

class StateMatrix {
 public:
  using Index = std::uint64_t;
  using Key = std::pair<Index, Index>;  // (row, col)

  StateMatrix() = default;
  StateMatrix(int source, int target);

  static StateMatrix identity(int n);
  /// 1x1 matrix holding s.
  static StateMatrix scalar(const Scalar& s);

  int source() const { return source_; }
  int target() const { return target_; }
  Index rows() const { return Index{1} << target_; }
  Index cols() const { return Index{1} << source_; }
  bool is_square() const { return source_ == target_; }

  const std::map<Key, Scalar>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(Index row, Index col) const;
  /// Adds v to the entry; drops it if the sum vanishes.
  void add(Index row, Index col, const Scalar& v);
  void set(Index row, Index col, Scalar v);

  StateMatrix& operator+=(const StateMatrix& o);
  StateMatrix& operator-=(const StateMatrix& o);
  StateMatrix& operator*=(const Scalar& s);

  friend StateMatrix operator+(StateMatrix a, const StateMatrix& b) { return a += b; }
  friend StateMatrix operator-(StateMatrix a, const StateMatrix& b) { return a -= b; }
  friend StateMatrix operator*(StateMatrix a, const Scalar& s) { return a *= s; }
  friend StateMatrix operator*(const Scalar& s, StateMatrix a) { return a *= s; }

  /// Ordinary matrix product a*b; requires a.source() == b.target().
  friend StateMatrix operator*(const StateMatrix& a, const StateMatrix& b);

  friend bool operator==(const StateMatrix& a, const StateMatrix& b) = default;

  /// Returns the first (row, col) in lexicographic order at which the
  /// matrices differ, or nothing.
  static bool first_difference(const StateMatrix& a, const StateMatrix& b, Key& where);

 private:
  int source_ = 0;
  int target_ = 0;
  std::map<Key, Scalar> entries_;
};

/// Kronecker product; a acts on the left strands.
StateMatrix kron(const StateMatrix& a, const StateMatrix& b);

/// The square matrix used by the representation module.
using SparseMat = StateMatrix;

/// Boundary state word for index `state` on `n` points, e.g. "ud" for
/// up-down.
std::string state_word(StateMatrix::Index state, int n);

}  // namespace polecat
