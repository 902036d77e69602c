#include "polecat/error.hpp"
#include "polecat/tl.hpp"

namespace polecat {

namespace {

Scalar t_pow(int k) { return Scalar(LaurentPoly(GaussRat(1), k)); }

// Quarter turns swept by a stub's strand when walked from its vertex to the
// boundary point.
int stub_rotation(Side side, StubEnd which) {
  if (which == StubEnd::start) return side == Side::east ? 1 : -1;
  return side == Side::west ? 1 : -1;
}

// Oriented cup: top state (down, up) walks left to right, turning
// counterclockwise by a half turn; (up, down) walks the other way.
StateMatrix cup_matrix() {
  StateMatrix m(0, 2);
  m.set(0b10, 0, t_pow(2));
  m.set(0b01, 0, t_pow(-2));
  return m;
}

StateMatrix cap_matrix() {
  StateMatrix m(2, 0);
  m.set(0, 0b01, t_pow(-2));
  m.set(0, 0b10, t_pow(2));
  return m;
}

StateMatrix crossing_matrix(bool positive) {
  const Scalar a = Scalar::sqrt_minus_q();
  const Scalar a_inv = a.inverse();
  StateMatrix out = StateMatrix::identity(2) * (positive ? a : a_inv);
  out += (cup_matrix() * cap_matrix()) * (positive ? a_inv : a);
  return out;
}

}  // namespace

StubWeight stub_weight(Side side, Orient orient, StubEnd which) {
  const int rot = stub_rotation(side, which);
  // Walking along the arrow: out of the vertex means vertex -> boundary.
  const int along = orient == Orient::out ? rot : -rot;
  Arrow arrow;
  if (which == StubEnd::start) {
    arrow = orient == Orient::out ? Arrow::up : Arrow::down;
  } else {
    arrow = orient == Orient::out ? Arrow::down : Arrow::up;
  }
  return {arrow, t_pow(along)};
}

StateMatrix tl_to_matrix(const TLTerm& term) {
  switch (term.kind()) {
    case TLTerm::Kind::identity:
      return StateMatrix::identity(term.width());
    case TLTerm::Kind::cup:
      return cup_matrix();
    case TLTerm::Kind::cap:
      return cap_matrix();
    case TLTerm::Kind::cross_pos:
      return crossing_matrix(true);
    case TLTerm::Kind::cross_neg:
      return crossing_matrix(false);
    case TLTerm::Kind::stub: {
      const auto [arrow, weight] = stub_weight(term.side(), term.orient(), term.stub_end());
      const auto state = static_cast<StateMatrix::Index>(arrow);
      if (term.stub_end() == StubEnd::start) {
        StateMatrix m(0, 1);
        m.set(state, 0, weight);
        return m;
      }
      StateMatrix m(1, 0);
      m.set(0, state, weight);
      return m;
    }
    case TLTerm::Kind::tensor:
      return kron(tl_to_matrix(term.first()), tl_to_matrix(term.second()));
    case TLTerm::Kind::stack:
      return tl_to_matrix(term.second()) * tl_to_matrix(term.first());
    case TLTerm::Kind::scale:
      return tl_to_matrix(term.first()) * term.factor();
    case TLTerm::Kind::sum:
      return tl_to_matrix(term.first()) + tl_to_matrix(term.second());
  }
  throw StructuralError("unknown diagram node");
}

}  // namespace polecat
