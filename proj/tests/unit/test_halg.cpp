#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/halg.hpp"
#include "polecat/parse.hpp"

using namespace polecat;
using G = HGen;

namespace {

HTensor pair(const HWord& a, const HWord& b, const Scalar& c = Scalar(1)) {
  HTensor t(2);
  t.add({a, b}, c);
  return t;
}

HTensor triple(const HWord& a, const HWord& b, const HWord& c) {
  HTensor t(3);
  t.add({a, b, c}, Scalar(1));
  return t;
}

}  // namespace

TEST_SUITE("halg") {

TEST_CASE("products") {
  CHECK(h_mul(h_word({G::e}), h_word({G::k})) == h_word({G::e, G::k}));
  const HElement x = parse_h("e f + 2 kp");
  CHECK(h_mul(h_unit(), x) == x);
  CHECK(h_mul(x, h_unit()) == x);
  CHECK(h_mul(h_word({G::e}) + h_word({G::f}), h_word({G::k})) ==
        h_word({G::e, G::k}) + h_word({G::f, G::k}));
}

TEST_CASE("coproduct") {
  CHECK(h_coproduct(h_word({G::e})) == pair({G::e}, {G::k}) + pair({G::kp}, {G::e}));
  CHECK(h_coproduct(h_unit()) == HTensor::unit(2));
  CHECK(h_coproduct(h_word({G::f})) == pair({G::f}, {G::l}) + pair({G::lp}, {G::f}));
  CHECK(h_coproduct(h_word({G::e0})) == pair({G::e0}, {G::kp}) + pair({G::k}, {G::e0}));
  CHECK(h_coproduct(h_word({G::k})) == pair({G::k}, {G::k}) + pair({G::e0}, {G::e}));
}

TEST_CASE("coproduct of a word is the product of coproducts") {
  const HElement x = parse_h("e k f");
  CHECK(h_coproduct(x) ==
        h_coproduct(h_word({G::e})) * h_coproduct(h_word({G::k})) * h_coproduct(h_word({G::f})));
}

TEST_CASE("counit") {
  CHECK(h_counit(h_word({G::e})).is_zero());
  CHECK(h_counit(h_unit()) == Scalar(1));
  CHECK(h_counit(h_word({G::k, G::e})).is_zero());
  CHECK(h_counit(parse_h("k kp + 3 l")) == Scalar(4));
}

TEST_CASE("antipode") {
  CHECK(h_antipode(h_word({G::e})) == h_word({G::e}) * Scalar::q());
  CHECK(h_antipode(h_unit()) == h_unit());
  CHECK(h_antipode(h_word({G::e, G::k})) == h_word({G::kp, G::e}) * Scalar::q());
  CHECK(h_antipode_inverse(h_antipode(parse_h("e f0 l + kp"))) == parse_h("e f0 l + kp"));
}

TEST_CASE("cartan involution") {
  CHECK(h_cartan(h_word({G::e})) == h_word({G::f}));
  CHECK(h_cartan(h_word({G::e, G::k})) == h_word({G::f, G::lp}));
  const HElement x = parse_h("e e0 k kp f f0 l lp - q * e f");
  CHECK(h_cartan(h_cartan(x)) == x);
}

TEST_CASE("cartan against coproduct") {
  // Holds only after exchanging the tensor factors.
  for (HGen g : kAllGens) {
    const HTensor lhs = h_coproduct(h_cartan(h_word({g})));
    const HTensor mapped = apply_to_factor(apply_to_factor(h_coproduct(h_word({g})), 0, h_cartan), 1, h_cartan);
    CHECK(lhs == swap_factors(mapped));
  }
  const HTensor lhs = h_coproduct(h_cartan(h_word({G::e})));
  CHECK(lhs != apply_to_factor(apply_to_factor(h_coproduct(h_word({G::e})), 0, h_cartan), 1, h_cartan));
}

TEST_CASE("iterated coproduct") {
  const HElement x = parse_h("e + 2 f l");
  HTensor one(1);
  for (const auto& [w, c] : x) one.add({w}, c);
  CHECK(iterate_coproduct(x, 1) == one);
  CHECK(iterate_coproduct(h_word({G::k}), 2) == pair({G::k}, {G::k}) + pair({G::e0}, {G::e}));

  HTensor want(3);
  for (const auto& t : {triple({G::e}, {G::k}, {G::k}), triple({G::kp}, {G::e}, {G::k}),
                        triple({G::kp}, {G::kp}, {G::e}), triple({G::e}, {G::e0}, {G::e})})
    want += t;
  CHECK(iterate_coproduct(h_word({G::e}), 3) == want);
  CHECK_THROWS_AS(iterate_coproduct(x, 0), PreconditionError);
}

TEST_CASE("coassociativity on generators") {
  for (HGen g : kAllGens) {
    const HTensor d = h_coproduct(h_word({g}));
    HTensor left(3), right(3);
    for (const auto& [key, c] : d) {
      for (const auto& [k2, c2] : h_coproduct(HElement(key[0]))) left.add({k2[0], k2[1], key[1]}, c * c2);
      for (const auto& [k2, c2] : h_coproduct(HElement(key[1]))) right.add({key[0], k2[0], k2[1]}, c * c2);
    }
    CAPTURE(gen_name(g));
    CHECK(left == right);
  }
}

TEST_CASE("quotient map") {
  CHECK(quotient_to_hprime(h_word({G::e0})).is_zero());
  CHECK(quotient_to_hprime(h_word({G::l})) == h_word({G::k}));
  CHECK(quotient_to_hprime(h_word({G::e, G::f0, G::k})).is_zero());
  CHECK(quotient_to_hprime(parse_h("lp e + f")) == parse_h("kp e + f"));
}

TEST_CASE("generator shapes") {
  for (HGen g : kAllGens) {
    const GenShape s = gen_shape(g);
    CHECK(gen_from_shape(s.over, s.left, s.right) == g);
    CHECK(gen_from_name(gen_name(g)) == g);
  }
  CHECK_FALSE(gen_from_name("x").has_value());
}

TEST_CASE("rendering") {
  CHECK(to_string(h_coproduct(h_word({G::e}))) == "e @ k + kp @ e");
  CHECK(to_string(h_antipode(h_word({G::e, G::k}))) == "t^4 * kp e");
  CHECK(to_string(HElement()) == "0");
  CHECK(to_string(h_unit()) == "1");
}

TEST_CASE("parse and render round trip") {
  for (const char* s : {"e k + q * kp e", "e0 f0 - 1/q * l lp", "(t^2 + i) * e f k", "1", "0"}) {
    CAPTURE(s);
    const HElement x = parse_h(s);
    CHECK(parse_h(to_string(x)) == x);
  }
  CHECK(parse_h("e k + q * kp e").size() == 2);
}

}
