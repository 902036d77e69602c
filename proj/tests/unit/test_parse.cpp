#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/parse.hpp"

using namespace polecat;

TEST_SUITE("parse") {

TEST_CASE("scalars") {
  CHECK(parse_scalar("q + 1/q").to_string() == "(t^8 + 1)/t^4");
  CHECK(parse_scalar("s^2") == Scalar::q());
  CHECK(parse_scalar("i*t^2") == Scalar::sqrt_minus_q());
  CHECK(parse_scalar("-2^2") == Scalar(-4));
  CHECK(parse_scalar("(1 + i)(1 - i)") == Scalar(2));
  CHECK(parse_scalar("q^-1") == Scalar::q_inv());
}

TEST_CASE("diagrams") {
  const TLTerm loop = parse_tl("cup ; cap");
  CHECK(loop.source() == 0);
  CHECK(loop.target() == 0);
  CHECK(eval_closed(loop) == Scalar::loop_value());
  // @ binds tighter than ;
  const TLTerm z = parse_tl("cup @ id(1) ; id(1) @ cap");
  CHECK(tl_equal(z, TLTerm::id(1)));
  CHECK(parse_tl("xp").kind() == TLTerm::Kind::cross_pos);
  const TLTerm st = parse_tl("stub(w, out, end)");
  CHECK(st.side() == Side::west);
  CHECK(st.orient() == Orient::out);
  CHECK(st.stub_end() == StubEnd::end);
}

TEST_CASE("H elements") {
  const HElement x = parse_h("e k + q * kp e");
  CHECK(x.size() == 2);
  CHECK(x.coeff({HGen::kp, HGen::e}) == Scalar::q());
  CHECK(parse_h("k^-2") == h_word({HGen::kp, HGen::kp}));
  CHECK(parse_h("(e + f) k") == parse_h("e k + f k"));
  CHECK(parse_h("2 * e / q") == h_word({HGen::e}) * (Scalar(2) * Scalar::q_inv()));
}

TEST_CASE("Uq elements") {
  CHECK(parse_uq("K^-1") == UqElement(UqWord{UqGen::Ki}));
  CHECK(parse_uq("E F - F E").size() == 2);
}

TEST_CASE("errors carry a position") {
  try {
    parse_h("e + + f");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_h("x"), ParseError);
  CHECK_THROWS_AS(parse_tl("cup ; id(1)"), ParseError);  // grade mismatch
  CHECK_THROWS_AS(parse_tl("stub(n, in, start)"), ParseError);
  CHECK_THROWS_AS(parse_uq("e"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_h("e ^ x"), ParseError);
  CHECK_THROWS_AS(parse_h("(e"), ParseError);
  CHECK_THROWS_AS(parse_h("e f^-1"), ParseError);
}

}
