// Closed-diagram evaluation by direct strand tracing.
//
// Each crossing is resolved into its two planar patterns, then every
// connected component of each resolution is traced: loops are removed for
// q + 1/q, vertex-to-vertex strands are valued by their arrows (confetti)
// and their total tangent rotation (turning).  No orientation state sums
// are involved, so this path is independent of tl_to_matrix.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "polecat/error.hpp"
#include "polecat/tl.hpp"

namespace polecat {

namespace {

// Arc endpoints: boundary slots are >= 0 (bottom points first, then top
// points); a vertex is -1 (arrow into it) or -2 (arrow out of it).
constexpr int kVertexIn = -1;
constexpr int kVertexOut = -2;

int vertex_code(Orient o) { return o == Orient::in ? kVertexIn : kVertexOut; }
bool is_vertex(int end) { return end < 0; }

// A strand piece from `a` to `b`; `rot` is the counterclockwise tangent
// rotation in quarter turns when walking from a to b.
struct Arc {
  int a;
  int b;
  int rot;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

Arc canonical(int a, int b, int rot) {
  const bool swap = (!is_vertex(a) && is_vertex(b)) ||
                    (!is_vertex(a) && !is_vertex(b) && a > b) ||
                    (is_vertex(a) && is_vertex(b) && a < b);
  return swap ? Arc{b, a, -rot} : Arc{a, b, rot};
}

using Shape = std::vector<Arc>;
using GeoSum = std::map<Shape, Scalar>;

Scalar t_pow(int k) { return Scalar(LaurentPoly(GaussRat(1), k)); }

void accumulate(GeoSum& into, Shape shape, const Scalar& c) {
  if (c.is_zero()) return;
  std::sort(shape.begin(), shape.end());
  auto [it, inserted] = into.try_emplace(std::move(shape), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

// Value of a finished strand walked from vertex `from` to vertex `to`.
Scalar vertex_strand_value(int from, int to, int rot) {
  if (from == to) return Scalar();  // both arrows in, or both out
  // Walk along the arrow: it leaves the "out" vertex.
  return t_pow(from == kVertexOut ? rot : -rot);
}

Scalar loop_value(int rot) {
  // A planar simple closed curve turns by exactly one full turn.
  if (rot != 4 && rot != -4) throw std::logic_error("traced loop with turning number != +-1");
  return t_pow(rot) + t_pow(-rot);
}

GeoSum single(Shape shape) {
  GeoSum g;
  accumulate(g, std::move(shape), Scalar(1));
  return g;
}

GeoSum crossing(bool positive) {
  const Scalar a = Scalar::sqrt_minus_q();
  const Scalar a_inv = a.inverse();
  GeoSum g;
  // Two vertical strands, or a cap below a cup.
  accumulate(g, {canonical(0, 2, 0), canonical(1, 3, 0)}, positive ? a : a_inv);
  accumulate(g, {canonical(0, 1, -2), canonical(2, 3, 2)}, positive ? a_inv : a);
  return g;
}

GeoSum stub_piece(Side side, Orient orient, StubEnd which) {
  // start: the strand leaves the vertex towards `side` and bends up to the
  // top boundary; end: it leaves towards `side` and bends down.
  int rot;
  if (which == StubEnd::start) {
    rot = side == Side::east ? 1 : -1;
  } else {
    rot = side == Side::west ? 1 : -1;
  }
  return single({canonical(vertex_code(orient), 0, rot)});
}

// Glue the top of `lower` (n -> k) to the bottom of `upper` (k -> m).
void glue(const Shape& lower, const Shape& upper, int n, int k, const Scalar& coeff,
          GeoSum& out) {
  // Global endpoint labels: kind 0 = outer result slot, 1 = middle point,
  // 2 = vertex (value = vertex code).
  struct End {
    int kind;
    int value;
  };
  struct Piece {
    End end[2];
    int rot;
  };
  std::vector<Piece> pieces;
  auto lower_end = [&](int x) {
    if (is_vertex(x)) return End{2, x};
    if (x < n) return End{0, x};
    return End{1, x - n};
  };
  auto upper_end = [&](int y) {
    if (is_vertex(y)) return End{2, y};
    if (y < k) return End{1, y};
    return End{0, n + (y - k)};
  };
  for (const Arc& arc : lower) pieces.push_back({{lower_end(arc.a), lower_end(arc.b)}, arc.rot});
  for (const Arc& arc : upper) pieces.push_back({{upper_end(arc.a), upper_end(arc.b)}, arc.rot});

  std::vector<std::vector<std::pair<std::size_t, int>>> at_middle(static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (int e = 0; e < 2; ++e)
      if (pieces[p].end[e].kind == 1)
        at_middle[static_cast<std::size_t>(pieces[p].end[e].value)].emplace_back(p, e);

  std::vector<bool> used(pieces.size(), false);
  Scalar value = coeff;
  Shape shape;

  // Walks from piece p entering at end e; returns the far end reached and
  // accumulates rotation.  Stops at a non-middle end or on returning to the
  // starting piece.
  auto walk = [&](std::size_t p, int e, int& rot) -> End {
    const std::size_t start = p;
    for (;;) {
      used[p] = true;
      rot += e == 0 ? pieces[p].rot : -pieces[p].rot;
      const End far = pieces[p].end[1 - e];
      if (far.kind != 1) return far;
      const auto& inc = at_middle[static_cast<std::size_t>(far.value)];
      const auto next = inc[0].first == p && inc[0].second == 1 - e ? inc[1] : inc[0];
      p = next.first;
      e = next.second;
      if (p == start) return far;
    }
  };

  for (std::size_t p = 0; p < pieces.size() && !value.is_zero(); ++p) {
    if (used[p]) continue;
    for (int e = 0; e < 2; ++e) {
      if (used[p] || pieces[p].end[e].kind == 1) continue;
      int rot = 0;
      const End from = pieces[p].end[e];
      const End to = walk(p, e, rot);
      if (from.kind == 2 && to.kind == 2) {
        value *= vertex_strand_value(from.value, to.value, rot);
      } else {
        shape.push_back(canonical(from.value, to.value, rot));
      }
    }
  }
  for (std::size_t p = 0; p < pieces.size() && !value.is_zero(); ++p) {
    if (used[p]) continue;
    int rot = 0;
    walk(p, 0, rot);
    value *= loop_value(rot);
  }
  if (!value.is_zero()) accumulate(out, std::move(shape), value);
}

Shape shift_shape(const Shape& shape, int n_self, int bottom_offset, int top_offset) {
  Shape out;
  for (const Arc& arc : shape) {
    auto remap = [&](int x) {
      if (is_vertex(x)) return x;
      return x < n_self ? bottom_offset + x : top_offset + (x - n_self);
    };
    out.push_back(canonical(remap(arc.a), remap(arc.b), arc.rot));
  }
  return out;
}

GeoSum expand(const TLTerm& term) {
  switch (term.kind()) {
    case TLTerm::Kind::identity: {
      Shape s;
      for (int x = 0; x < term.width(); ++x) s.push_back(canonical(x, term.width() + x, 0));
      return single(std::move(s));
    }
    case TLTerm::Kind::cup:
      return single({canonical(0, 1, 2)});
    case TLTerm::Kind::cap:
      return single({canonical(0, 1, -2)});
    case TLTerm::Kind::cross_pos:
      return crossing(true);
    case TLTerm::Kind::cross_neg:
      return crossing(false);
    case TLTerm::Kind::stub:
      return stub_piece(term.side(), term.orient(), term.stub_end());
    case TLTerm::Kind::tensor: {
      const TLTerm& l = term.first();
      const TLTerm& r = term.second();
      const int n1 = l.source(), m1 = l.target(), n2 = r.source();
      const GeoSum a = expand(l);
      const GeoSum b = expand(r);
      GeoSum out;
      for (const auto& [sa, ca] : a) {
        Shape left = shift_shape(sa, n1, 0, n1 + n2);
        for (const auto& [sb, cb] : b) {
          Shape both = left;
          Shape right = shift_shape(sb, n2, n1, n1 + n2 + m1);
          both.insert(both.end(), right.begin(), right.end());
          accumulate(out, std::move(both), ca * cb);
        }
      }
      return out;
    }
    case TLTerm::Kind::stack: {
      const GeoSum a = expand(term.first());
      const GeoSum b = expand(term.second());
      GeoSum out;
      for (const auto& [sa, ca] : a)
        for (const auto& [sb, cb] : b)
          glue(sa, sb, term.first().source(), term.first().target(), ca * cb, out);
      return out;
    }
    case TLTerm::Kind::scale: {
      GeoSum out;
      for (const auto& [s, c] : expand(term.first())) accumulate(out, s, term.factor() * c);
      return out;
    }
    case TLTerm::Kind::sum: {
      GeoSum out = expand(term.first());
      for (const auto& [s, c] : expand(term.second())) accumulate(out, s, c);
      return out;
    }
  }
  throw StructuralError("unknown diagram node");
}

}  // namespace

Scalar eval_closed(const TLTerm& term) {
  if (term.source() != 0 || term.target() != 0)
    throw PreconditionError("eval_closed: diagram has open boundary points (" +
                            std::to_string(term.source()) + " -> " +
                            std::to_string(term.target()) + ")");
  const GeoSum g = expand(term);
  auto it = g.find(Shape{});
  return it == g.end() ? Scalar() : it->second;
}

}  // namespace polecat

namespace polecat {

StateMatrix tl_to_matrix_oracle(const TLTerm& term) {
  const int n = term.source();
  const int m = term.target();
  StateMatrix out(n, m);
  for (StateMatrix::Index col = 0; col < out.cols(); ++col) {
    for (StateMatrix::Index row = 0; row < out.rows(); ++row) {
      // Bottom points: start stubs leaving east; top points: end stubs
      // arriving from the west.
      TLTerm below, above;
      Scalar weight(1);
      for (int x = 0; x < n; ++x) {
        const bool down = (col >> (n - 1 - x)) & 1;
        const Orient o = down ? Orient::in : Orient::out;
        weight *= stub_weight(Side::east, o, StubEnd::start).weight;
        below = TLTerm::tensor(below, TLTerm::stub(Side::east, o, StubEnd::start));
      }
      for (int x = 0; x < m; ++x) {
        const bool down = (row >> (m - 1 - x)) & 1;
        const Orient o = down ? Orient::out : Orient::in;
        weight *= stub_weight(Side::west, o, StubEnd::end).weight;
        above = TLTerm::tensor(above, TLTerm::stub(Side::west, o, StubEnd::end));
      }
      const Scalar v = eval_closed(TLTerm::stack(TLTerm::stack(below, term), above));
      if (!v.is_zero()) out.set(row, col, v / weight);
    }
  }
  return out;
}

}  // namespace polecat
