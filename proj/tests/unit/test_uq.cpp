#include <doctest.h>

#include "polecat/parse.hpp"
#include "polecat/uq.hpp"

using namespace polecat;

TEST_SUITE("uq") {

TEST_CASE("images of generators") {
  CHECK(phi(parse_uq("K")) == PBWElement(PBWMonomial{0, 2, 0}));
  CHECK(phi(parse_uq("Ki")) == PBWElement(PBWMonomial{0, -2, 0}));
  CHECK(phi(parse_uq("1")) == PBWElement(PBWMonomial{0, 0, 0}));
  CHECK(phi(parse_uq("E")) == PBWElement(PBWMonomial{0, 1, 1}, -Scalar::q_inv() / Scalar::q_minus_q_inv()));
}

TEST_CASE("phi(E) phi(F)") {
  const Scalar c = Scalar::q_minus_q_inv().pow(-2);
  CHECK(phi(parse_uq("E F")) == pbw_normalize(h_word({HGen::e, HGen::f})) * c);
  CHECK(pbw_mul(phi(parse_uq("E")), phi(parse_uq("F"))) == phi(parse_uq("E F")));
}

TEST_CASE("relations and compatibilities") {
  const auto ids = uq_relation_suite();
  CHECK(ids.size() >= 5);
  for (const Identity& id : ids) {
    CAPTURE(id.name);
    CHECK(id.holds);
    CHECK(id.residue == "0");
  }
}

TEST_CASE("two-dimensional module") {
  for (const Identity& id : vminus_identification()) {
    CAPTURE(id.name);
    CHECK(id.holds);
  }
}

TEST_CASE("parity") {
  CHECK(image_parity_check(parse_uq("K")));
  CHECK(image_parity_check(parse_uq("1")));
  CHECK(image_parity_check(parse_uq("E")));
  CHECK(image_parity_check(parse_uq("E F K + 3 F - Ki E E")));
}

TEST_CASE("hopf structure") {
  CHECK(uq_counit(parse_uq("E")).is_zero());
  CHECK(uq_counit(parse_uq("K Ki + 2")) == Scalar(3));
  CHECK(uq_antipode(parse_uq("E")) == -parse_uq("E Ki"));
  CHECK(uq_antipode(parse_uq("F")) == -parse_uq("K F"));
  UqTensor d;
  d.add({{}, {UqGen::E}}, Scalar(1));
  d.add({{UqGen::E}, {UqGen::K}}, Scalar(1));
  CHECK(uq_coproduct(parse_uq("E")) == d);
}

TEST_CASE("rendering") {
  CHECK(to_string(phi(parse_uq("K"))) == "f^0 k^2 e^0");
  const UqElement x = parse_uq("E F - q * K Ki");
  CHECK(parse_uq(to_string(x)) == x);
}

}
