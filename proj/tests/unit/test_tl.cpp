#include <doctest.h>

#include <bit>

#include "polecat/error.hpp"
#include "polecat/parse.hpp"
#include "polecat/tl.hpp"

using namespace polecat;

namespace {

const TLTerm xp = TLTerm::cross_pos();
const TLTerm xn = TLTerm::cross_neg();
const TLTerm loop = TLTerm::stack(TLTerm::cup(), TLTerm::cap());

MatchingSum single(const Matching& m, const Scalar& c) {
  MatchingSum s;
  s.emplace(m, c);
  return s;
}

}  // namespace

TEST_SUITE("tl") {

TEST_CASE("crossing expands into two matchings") {
  MatchingSum want;
  want.emplace(Matching::identity(2), Scalar::sqrt_minus_q());
  want.emplace(Matching(2, 2, {{0, 1}, {2, 3}}), Scalar::sqrt_minus_q().inverse());
  CHECK(kauffman_normalize(xp) == want);
}

TEST_CASE("closed loop") {
  CHECK(kauffman_normalize(loop) == single(Matching(0, 0, {}), Scalar::loop_value()));
  CHECK(eval_closed(loop) == Scalar::loop_value());
}

TEST_CASE("crossing then its inverse") {
  CHECK(kauffman_normalize(TLTerm::stack(xp, xn)) == single(Matching::identity(2), Scalar(1)));
  CHECK(tl_equal(TLTerm::stack(xp, xn), TLTerm::id(2)));
  CHECK(tl_equal(TLTerm::id(1), TLTerm::id(1)));
  CHECK_FALSE(tl_equal(xp, xn));
}

TEST_CASE("grade mismatch") {
  CHECK_THROWS_AS(TLTerm::stack(TLTerm::cup(), TLTerm::id(1)), StructuralError);
  CHECK_THROWS_AS(TLTerm::sum(TLTerm::id(1), TLTerm::id(2)), StructuralError);
  CHECK_THROWS_AS(tl_equal(TLTerm::id(1), TLTerm::id(3)), StructuralError);
}

TEST_CASE("straight strand between two vertices") {
  auto strand = [](Orient a, Orient b) {
    return TLTerm::stack(TLTerm::stub(Side::east, a, StubEnd::start),
                         TLTerm::stub(Side::west, b, StubEnd::end));
  };
  CHECK(eval_closed(strand(Orient::out, Orient::in)) == Scalar(1));
  CHECK(eval_closed(strand(Orient::in, Orient::out)) == Scalar(1));
  CHECK(eval_closed(strand(Orient::out, Orient::out)).is_zero());
  CHECK(eval_closed(strand(Orient::in, Orient::in)).is_zero());
}

TEST_CASE("loop splits into its two orientations") {
  const StateMatrix cup = tl_to_matrix(TLTerm::cup());
  const StateMatrix cap = tl_to_matrix(TLTerm::cap());
  const Scalar a = cap.at(0, 0b01) * cup.at(0b01, 0);
  const Scalar b = cap.at(0, 0b10) * cup.at(0b10, 0);
  CHECK(a * b == Scalar(1));
  CHECK(((a == Scalar::q() && b == Scalar::q_inv()) || (a == Scalar::q_inv() && b == Scalar::q())));
}

TEST_CASE("eval_closed rejects open diagrams") {
  CHECK_THROWS_AS(eval_closed(TLTerm::id(1)), PreconditionError);
  CHECK_THROWS_AS(eval_closed(TLTerm::cup()), PreconditionError);
}

TEST_CASE("matrices of small diagrams") {
  CHECK(tl_to_matrix(TLTerm::id(1)) == StateMatrix::identity(1));
  StateMatrix loop_m(0, 0);
  loop_m.set(0, 0, Scalar::loop_value());
  CHECK(tl_to_matrix(loop) == loop_m);
}

TEST_CASE("ice rule") {
  for (const TLTerm& x : {xp, xn}) {
    const StateMatrix m = tl_to_matrix(x);
    // from up-up only up-up is reachable
    for (StateMatrix::Index row = 1; row < 4; ++row) CHECK(m.at(row, 0).is_zero());
    CHECK_FALSE(m.at(0, 0).is_zero());
    for (const auto& [key, v] : m.entries()) CHECK(std::popcount(key.first) == std::popcount(key.second));
  }
}

TEST_CASE("elementary matrices agree with closed evaluation") {
  std::vector<TLTerm> gens{TLTerm::id(1), TLTerm::cup(), TLTerm::cap(), xp, xn};
  for (Side s : {Side::east, Side::west})
    for (Orient o : {Orient::in, Orient::out})
      for (StubEnd w : {StubEnd::start, StubEnd::end}) gens.push_back(TLTerm::stub(s, o, w));
  for (const TLTerm& g : gens) {
    CAPTURE(to_string(g));
    CHECK(tl_to_matrix(g) == tl_to_matrix_oracle(g));
  }
}

TEST_CASE("stack and tensor laws") {
  const TLTerm a = tl_random(2, 2, 2, 5);
  const TLTerm b = tl_random(2, 0, 1, 6);
  CHECK(tl_to_matrix(TLTerm::stack(a, b)) == tl_to_matrix(b) * tl_to_matrix(a));
  CHECK(tl_to_matrix(TLTerm::tensor(a, b)) == kron(tl_to_matrix(a), tl_to_matrix(b)));
  CHECK(tl_to_matrix_oracle(TLTerm::stack(a, b)) == tl_to_matrix(b) * tl_to_matrix(a));
}

TEST_CASE("zigzag") {
  const TLTerm z = TLTerm::stack(TLTerm::tensor(TLTerm::cup(), TLTerm::id(1)),
                                 TLTerm::tensor(TLTerm::id(1), TLTerm::cap()));
  CHECK(tl_equal(z, TLTerm::id(1)));
  CHECK(tl_to_matrix(z) == StateMatrix::identity(1));
}

TEST_CASE("matching composition counts loops") {
  const Matching cup(0, 2, {{0, 1}});
  const Matching cap(2, 0, {{0, 1}});
  const auto [m, loops] = compose(cup, cap);
  CHECK(loops == 1);
  CHECK(m == Matching(0, 0, {}));
  CHECK_FALSE(Matching(2, 2, {{0, 3}, {1, 2}}).is_planar());
  CHECK_THROWS_AS(Matching(1, 1, {{0, 0}}), StructuralError);
}

TEST_CASE("random terms") {
  const TLTerm e = tl_random(0, 0, 0, 3);
  CHECK(e.source() == 0);
  CHECK(e.target() == 0);
  CHECK(kauffman_normalize(e) == single(Matching(0, 0, {}), Scalar(1)));
  CHECK(tl_equal(tl_random(1, 1, 0, 1), TLTerm::id(1)));
  CHECK(tl_random(2, 2, 2, 42) == tl_random(2, 2, 2, 42));
  CHECK(tl_random(2, 2, 2, 42).crossing_count() == 2);
  for (int seed = 0; seed < 20; ++seed) {
    const TLTerm d = tl_random(3, 1, 3, static_cast<std::uint64_t>(seed));
    CHECK(d.source() == 3);
    CHECK(d.target() == 1);
    CHECK(d.crossing_count() == 3);
    CHECK_FALSE(d.has_stubs());
  }
  CHECK_THROWS_AS(tl_random(1, 2, 0, 0), PreconditionError);
}

TEST_CASE("parse and render round trip") {
  for (const char* s : {"cup ; cap", "xp ; xn", "(id(1) @ cup) ; (cap @ id(1))",
                        "i*t^2 * id(2) + xn", "stub(e, out, start) ; stub(w, in, end)"}) {
    CAPTURE(s);
    const TLTerm d = parse_tl(s);
    CHECK(parse_tl(to_string(d)) == d);
  }
}

}
