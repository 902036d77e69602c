#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/json_io.hpp"
#include "polecat/parse.hpp"
#include "polecat/rep.hpp"

using namespace polecat;
using G = HGen;

TEST_SUITE("rep") {

TEST_CASE("seed table") {
  CHECK(rho_seed(G::e0).is_zero());
  CHECK(rho_seed(G::f0).is_zero());
  CHECK(rho_seed(G::k) * rho_seed(G::kp) == SparseMat::identity(1));
  // k^2 has eigenvalue -q: k is diagonal here, so some diagonal entry of k^2 is -q.
  const SparseMat k2 = rho_seed(G::k) * rho_seed(G::k);
  CHECK((k2.at(0, 0) == -Scalar::q() || k2.at(1, 1) == -Scalar::q()));
  CHECK(rho_seed(G::e).nonzeros() == 1);
  CHECK(rho_seed(G::e).at(1, 0) == parse_scalar("(i*t^8 - i)/t^4"));
}

TEST_CASE("seed table matches closed evaluation") {
  const auto derived = derive_seed_table();
  for (HGen g : kAllGens) {
    CAPTURE(gen_name(g));
    CHECK(derived[static_cast<std::size_t>(g)] == rho_seed(g));
    CHECK(rho_n_diagram(HWord{g}, 1) == rho_seed(g));
  }
}

TEST_CASE("threading zero strands is the counit") {
  CHECK(rho_n(h_word({G::k}), 0) == SparseMat::scalar(Scalar(1)));
  CHECK(rho_n(h_word({G::e}), 0).is_zero());
  CHECK(matrix_json(rho_n(h_word({G::k}), 0)) == R"({"n":0,"dim":1,"entries":[[0,0,"1"]]})");
}

TEST_CASE("kernel and the k'k relation") {
  CHECK(rho_n(h_word({G::e0}), 2).is_zero());
  const HElement x = h_word({G::kp, G::k}) + h_word({G::e, G::e0}) * Scalar::q_inv();
  CHECK(rho_n(x, 3) == SparseMat::identity(3));
}

TEST_CASE("two paths") {
  CHECK(rho_n_diagram(HWord{G::e}, 2) == rho_n(h_word({G::e}), 2));
  CHECK(rho_n_diagram(HWord{G::e0}, 1).is_zero());
  CHECK(rho_n_diagram(HWord{G::f, G::k, G::lp}, 3) == rho_n(HWord{G::f, G::k, G::lp}, 3));
  CHECK(threaded_diagram(G::e, 3).source() == 3);
  CHECK(threaded_diagram(G::f, 3).crossing_count() == 3);
}

TEST_CASE("equality up to a cutoff") {
  const HElement ek = h_word({G::e, G::k});
  const HElement ke = h_word({G::k, G::e}) * -Scalar::q_inv();
  CHECK(h_equal_upto(ek, ke, 4).equal);
  CHECK(h_equal_upto(h_word({G::l}), h_word({G::k}), 5).equal);
  const EqualityWitness w = h_equal_upto(h_word({G::e}), h_word({G::f}), 1);
  CHECK_FALSE(w.equal);
  CHECK(w.n == 1);
  CHECK(w.lhs != w.rhs);
  CHECK_FALSE(w.describe().empty());
}

TEST_CASE("intertwining") {
  CHECK(intertwine_check(h_word({G::e}), TLTerm::cup()));
  CHECK(intertwine_check(h_word({G::k}), TLTerm::id(1)));
  CHECK(intertwine_check(parse_h("e f k lp"), tl_random(3, 3, 2, 42)));
  CHECK(intertwine_check(parse_h("e0 + l f"), TLTerm::cross_neg()));
  CHECK_THROWS_AS(intertwine_check(h_word({G::e}), TLTerm::stub(Side::east, Orient::in, StubEnd::start)),
                  PreconditionError);
}

TEST_CASE("tensor threading") {
  const HTensor d = h_coproduct(h_word({G::e}));
  CHECK(rho_tensor(d, {1, 2}) == rho_n(h_word({G::e}), 3));
  CHECK_THROWS_AS(rho_tensor(d, {1}), StructuralError);
}

TEST_CASE("matrix json") {
  const std::string j = matrix_json(rho_n(h_word({G::k}), 1));
  CHECK(j == R"({"n":1,"dim":2,"entries":[[0,0,"-i/t^2"],[1,1,"i*t^2"]]})");
}

}
