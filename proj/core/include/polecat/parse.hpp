#pragma once

// Expression language shared by all four value kinds.
//
// Precedence, loosest first:
//   a + b, a - b
//   a ; b          stack, a at the bottom (diagrams only)
//   a @ b          side by side (diagrams only)
//   a b, a * b, a / b
//   -a
//   a ^ n          integer n
//
// Scalars: integers, i, t, q (= t^4), s (= t^2).
// Diagrams: id(n), cup, cap, xp, xn, stub(e|w, in|out, start|end).
// H: e e0 f f0 k kp l lp; a word is a juxtaposition, leftmost on top.
// Uq: E F K Ki.
//
// All errors are ParseError with the offending position.

#include <string_view>

#include "polecat/halg.hpp"
#include "polecat/scalar.hpp"
#include "polecat/tl.hpp"
#include "polecat/uq.hpp"

namespace polecat {

Scalar parse_scalar(std::string_view text);
TLTerm parse_tl(std::string_view text);
HElement parse_h(std::string_view text);
UqElement parse_uq(std::string_view text);

}  // namespace polecat
