#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/parse.hpp"
#include "polecat/pbw.hpp"
#include "polecat/rng.hpp"

using namespace polecat;
using G = HGen;

TEST_SUITE("pbw") {

TEST_CASE("e k") {
  const PBWElement nf = pbw_normalize(h_word({G::e, G::k}));
  CHECK(nf == PBWElement(PBWMonomial{0, 1, 1}, -Scalar::q_inv()));
  CHECK(to_string(nf) == "-1/t^4 * f^0 k^1 e^1");
}

TEST_CASE("inverse pair") {
  CHECK(pbw_normalize(h_word({G::k, G::kp})) == PBWElement(PBWMonomial{0, 0, 0}));
  CHECK(pbw_normalize(h_word({G::kp, G::k})) == PBWElement(PBWMonomial{0, 0, 0}));
}

TEST_CASE("e f") {
  PBWElement want(PBWMonomial{1, 0, 1});
  want.add({0, 2, 0}, Scalar::q_minus_q_inv());
  want.add({0, -2, 0}, -Scalar::q_minus_q_inv());
  CHECK(pbw_normalize(h_word({G::e, G::f})) == want);
}

TEST_CASE("other rules") {
  CHECK(pbw_normalize(h_word({G::e, G::kp})) == PBWElement(PBWMonomial{0, -1, 1}, -Scalar::q()));
  CHECK(pbw_normalize(h_word({G::k, G::f})) == PBWElement(PBWMonomial{1, 1, 0}, -Scalar::q_inv()));
  CHECK(pbw_normalize(h_word({G::kp, G::f})) == PBWElement(PBWMonomial{1, -1, 0}, -Scalar::q()));
}

TEST_CASE("normal words are fixed") {
  const PBWMonomial m{2, -3, 1};
  CHECK(pbw_normalize(HElement(pbw_word(m))) == PBWElement(m));
  CHECK(pbw_redexes(pbw_word(m)).empty());
}

TEST_CASE("disallowed letters") {
  CHECK_THROWS_AS(pbw_normalize(h_word({G::e0})), PreconditionError);
  CHECK_THROWS_AS(pbw_normalize(h_word({G::e, G::l})), PreconditionError);
}

TEST_CASE("redexes") {
  const HWord w{G::e, G::k, G::f, G::kp, G::k};
  CHECK(pbw_redexes(w) == std::vector<std::size_t>{0, 1, 3});
  CHECK(pbw_rewrite_at(w, 3) == h_word({G::e, G::k, G::f}));
}

TEST_CASE("strategy independence") {
  const std::vector<HGen> letters{G::e, G::f, G::k, G::kp};
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(11, "pbw", i);
    HWord w;
    for (int n = rng.range(0, 8); n > 0; --n) w.push_back(letters[rng.below(4)]);
    CHECK(pbw_normalize(HElement(w), RedexStrategy::leftmost) ==
          pbw_normalize(HElement(w), RedexStrategy::rightmost));
  }
}

TEST_CASE("parity") {
  const PBWElement nf = pbw_normalize(parse_h("e f e f k"));
  for (const auto& [m, c] : nf) CHECK(m.degree() % 2 == 1);
}

TEST_CASE("multiplication agrees with normalizing the concatenation") {
  const HElement x = parse_h("e k + f");
  const HElement y = parse_h("f kp - 2 e");
  CHECK(pbw_mul(pbw_normalize(x), pbw_normalize(y)) == pbw_normalize(h_mul(x, y)));
}

TEST_CASE("rendered normal forms parse back") {
  const PBWElement nf = pbw_normalize(parse_h("e f kp e + q * k k f"));
  CHECK(pbw_normalize(parse_h(to_string(nf))) == nf);
}

}
