#pragma once

// Temperley-Lieb diagrams with oriented univalent vertices.
//
// Diagrams enter as terms over elementary generators.  Grades are the
// number of boundary points at the bottom (source) and top (target).
//
// Drawing conventions, fixed once for the whole engine:
//   * cross_pos: the strand from bottom-left to top-right passes over.
//       cross_pos = sqrt(-q) * id(2) + 1/sqrt(-q) * (cap ; cup)
//       cross_neg = 1/sqrt(-q) * id(2) + sqrt(-q) * (cap ; cup)
//   * A closed loop is worth q + 1/q.
//   * A strand joining two vertices is worth 0 unless its arrow runs from
//     one vertex into the other; then it is worth t^r where r is the total
//     counterclockwise rotation of the tangent, in quarter turns, measured
//     along the arrow.  (A half turn is therefore sqrt(q)^(+-1).)
//   * stub(side, orient, start) is a vertex from which the strand leaves
//     horizontally towards `side` and bends up to the top boundary (grade
//     0 -> 1).  stub(side, orient, end) comes up from the bottom boundary
//     and bends into a vertex it leaves towards `side` (grade 1 -> 0).
//     `orient` says whether the arrow points into or out of the vertex.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polecat/scalar.hpp"
#include "polecat/state_matrix.hpp"

namespace polecat {

enum class Side : std::uint8_t { east, west };
enum class Orient : std::uint8_t { in, out };
enum class StubEnd : std::uint8_t { start, end };

class TLTerm {
 public:
  enum class Kind : std::uint8_t {
    identity,
    cup,
    cap,
    cross_pos,
    cross_neg,
    stub,
    tensor,
    stack,
    scale,
    sum
  };

  /// The empty diagram id(0).
  TLTerm();

  static TLTerm id(int n);
  static TLTerm cup();
  static TLTerm cap();
  static TLTerm cross_pos();
  static TLTerm cross_neg();
  static TLTerm stub(Side side, Orient orient, StubEnd which);

  /// Side by side, `left` to the left of `right`.
  static TLTerm tensor(const TLTerm& left, const TLTerm& right);
  /// `top` stacked on `bottom`; requires bottom.target() == top.source().
  static TLTerm stack(const TLTerm& bottom, const TLTerm& top);
  static TLTerm scale(const Scalar& factor, const TLTerm& operand);
  /// Requires equal grades.
  static TLTerm sum(const TLTerm& a, const TLTerm& b);

  Kind kind() const;
  int source() const;
  int target() const;

  /// id(n): n.
  int width() const;
  /// tensor: left, stack: bottom, sum: first summand, scale: operand.
  const TLTerm& first() const;
  /// tensor: right, stack: top, sum: second summand.
  const TLTerm& second() const;
  const Scalar& factor() const;
  Side side() const;
  Orient orient() const;
  StubEnd stub_end() const;

  bool has_stubs() const;
  int crossing_count() const;

  friend bool operator==(const TLTerm& a, const TLTerm& b);

 private:
  struct Node;
  explicit TLTerm(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Fully parenthesised text in the tl expression grammar.
std::string to_string(const TLTerm& term);

/// A planar perfect matching of the boundary points of an n -> m diagram.
/// Bottom points are 0..n-1 (left to right), top points n..n+m-1.
class Matching {
 public:
  using Pair = std::pair<int, int>;

  /// Throws StructuralError unless the pairs partition 0..n+m-1.
  Matching(int source, int target, std::vector<Pair> pairs);

  static Matching identity(int n);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  /// Noncrossing when drawn in a rectangle.
  bool is_planar() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  int source_;
  int target_;
  std::vector<Pair> pairs_;
};

/// Glues `top` onto `bottom`; returns the composite and the number of
/// closed loops removed.
std::pair<Matching, int> compose(const Matching& bottom, const Matching& top);
Matching tensor(const Matching& left, const Matching& right);

using MatchingSum = std::map<Matching, Scalar>;

/// Expands crossings and removes loops.  Throws PreconditionError if the
/// term has stubs.
MatchingSum kauffman_normalize(const TLTerm& term);

/// Equality of normal forms.  Throws StructuralError on a grade mismatch.
bool tl_equal(const TLTerm& a, const TLTerm& b);

std::string to_string(const MatchingSum& sum);

/// Value of a closed (0 -> 0) diagram, computed by tracing every component
/// of every crossing resolution.  This is deliberately independent of the
/// state-sum functor tl_to_matrix.
Scalar eval_closed(const TLTerm& term);

/// The oriented-state matrix of a diagram, assembled from per-generator
/// weight tables: tl_to_matrix(stack(a, b)) = M(b) * M(a) and
/// tl_to_matrix(tensor(a, b)) = kron(M(a), M(b)).
StateMatrix tl_to_matrix(const TLTerm& term);

/// Weight of an elementary stub: the single nonzero entry of its 2x1
/// (start) or 1x2 (end) matrix, and the boundary arrow it carries.
struct StubWeight {
  Arrow arrow;
  Scalar weight;
};
StubWeight stub_weight(Side side, Orient orient, StubEnd which);

/// The same matrix as tl_to_matrix, entry by entry through eval_closed:
/// each boundary point is capped off by a stub carrying the required arrow
/// and the stub weights are divided out.  Exponential in the grade; meant
/// as a cross-check.
StateMatrix tl_to_matrix_oracle(const TLTerm& term);

/// Deterministic pseudo-random vertex-free n -> m term with the given
/// number of crossings.  Throws PreconditionError when n + m is odd.
TLTerm tl_random(int n, int m, int crossings, std::uint64_t seed);

}  // namespace polecat
