// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// line fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polecat/halg.hpp"
#include "polecat/json_io.hpp"
#include "polecat/rep.hpp"
#include "polecat/rng.hpp"
#include "polecat/suites.hpp"
#include "polecat/tl.hpp"

using namespace polecat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

TLTerm pad(const TLTerm& piece, int left, int right) {
  TLTerm out = piece;
  if (left > 0) out = TLTerm::tensor(TLTerm::id(left), out);
  if (right > 0) out = TLTerm::tensor(out, TLTerm::id(right));
  return out;
}

MatchingSum scaled(const MatchingSum& s, const Scalar& c) {
  MatchingSum out;
  for (const auto& [m, v] : s) out.emplace(m, v * c);
  return out;
}

// Requires every check of the report whose name is listed (or every check
// when the list is empty) to pass.
void require(Outcome& out, const Report& r, const std::vector<std::string>& names = {}) {
  std::size_t seen = 0;
  for (const Check& c : r.checks) {
    bool wanted = names.empty();
    for (const auto& n : names) wanted = wanted || n == c.name;
    if (!wanted) continue;
    ++seen;
    if (!c.pass) out.fail(r.suite + "/" + c.name + ": " + c.witness);
  }
  if (names.size() > seen) out.fail(r.suite + ": missing checks");
}

SuiteOptions options(int cutoff, int trials) {
  SuiteOptions o;
  o.cutoff = cutoff;
  o.trials = trials;
  return o;
}

// ---- 1 ------------------------------------------------------------------------

Outcome skein_core() {
  Outcome out;
  const TLTerm xp = TLTerm::cross_pos(), xn = TLTerm::cross_neg();
  for (int width = 2; width <= 4; ++width)
    for (int i = 0; i + 2 <= width; ++i) {
      const TLTerm a = pad(xp, i, width - 2 - i), b = pad(xn, i, width - 2 - i);
      if (!tl_equal(TLTerm::stack(a, b), TLTerm::id(width)) || !tl_equal(TLTerm::stack(b, a), TLTerm::id(width)))
        out.fail("R2 width " + std::to_string(width) + " at " + std::to_string(i));
    }
  // Zigzags with spectator strands, up to four strands in total.
  for (int left = 0; left <= 1; ++left)
    for (int right = 0; left + right <= 1; ++right) {
      const TLTerm z1 = TLTerm::stack(pad(TLTerm::tensor(TLTerm::cup(), TLTerm::id(1)), left, right),
                                      pad(TLTerm::tensor(TLTerm::id(1), TLTerm::cap()), left, right));
      const TLTerm z2 = TLTerm::stack(pad(TLTerm::tensor(TLTerm::id(1), TLTerm::cup()), left, right),
                                      pad(TLTerm::tensor(TLTerm::cap(), TLTerm::id(1)), left, right));
      const TLTerm id = TLTerm::id(1 + left + right);
      if (!tl_equal(z1, id) || !tl_equal(z2, id)) out.fail("zigzag");
    }
  const TLTerm loop = TLTerm::stack(TLTerm::cup(), TLTerm::cap());
  if (eval_closed(loop) != Scalar::loop_value()) out.fail("loop value");
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(0, "acceptance/delooping", i);
    const int n = rng.range(0, 4);
    const int m = 2 * rng.range(0, 2) + n % 2;
    const TLTerm d = tl_random(n, m, rng.range(0, 3), rng.below(1u << 30));
    const MatchingSum want = scaled(kauffman_normalize(d), Scalar::loop_value());
    const int at = rng.range(0, m);
    const TLTerm inside = TLTerm::stack(TLTerm::stack(d, pad(TLTerm::cup(), at, m - at)),
                                        pad(TLTerm::cap(), at, m - at));
    if (kauffman_normalize(TLTerm::tensor(d, loop)) != want || kauffman_normalize(inside) != want)
      out.fail("delooping: " + to_string(d));
  }
  return out;
}

// ---- 2 ------------------------------------------------------------------------

Outcome functor() {
  Outcome out;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(0, "acceptance/functor", i);
    const int n = rng.range(0, 3);
    const int k = 2 * rng.range(0, 1) + n % 2;
    const int m = 2 * rng.range(0, 1) + n % 2;
    const TLTerm a = tl_random(n, k, rng.range(0, 3), rng.below(1u << 30));
    const TLTerm b = tl_random(k, m, rng.range(0, 3), rng.below(1u << 30));
    // The oracle traces strands and never composes matrices.
    if (tl_to_matrix_oracle(TLTerm::stack(a, b)) != tl_to_matrix(b) * tl_to_matrix(a))
      out.fail("functoriality: " + to_string(a) + " ; " + to_string(b));
    if (tl_to_matrix(TLTerm::tensor(a, b)) != kron(tl_to_matrix_oracle(a), tl_to_matrix_oracle(b)))
      out.fail("monoidality: " + to_string(a) + " @ " + to_string(b));
  }
  for (const TLTerm& x : {TLTerm::cross_pos(), TLTerm::cross_neg()}) {
    const StateMatrix m = tl_to_matrix(x);
    for (const auto& [key, v] : m.entries())
      if (std::popcount(key.first) != std::popcount(key.second)) out.fail("ice rule: " + to_string(x));
    for (StateMatrix::Index row = 1; row < 4; ++row)
      if (!m.at(row, 0).is_zero()) out.fail("up-up block: " + to_string(x));
  }
  return out;
}

// ---- 3 ------------------------------------------------------------------------

Outcome seed_audit() {
  Outcome out;
  using G = HGen;
  const auto derived = derive_seed_table();
  for (HGen g : kAllGens) {
    if (derived[static_cast<std::size_t>(g)] != rho_seed(g)) out.fail(std::string("derived ") + std::string(gen_name(g)));
    if (rho_n_diagram(HWord{g}, 1) != rho_seed(g)) out.fail(std::string("diagram ") + std::string(gen_name(g)));
  }
  const SparseMat I = SparseMat::identity(1);
  auto r = [](G g) { return rho_seed(g); };
  const Scalar q = Scalar::q();
  if (r(G::kp) * r(G::k) + r(G::e) * r(G::e0) * q.inverse() != I) out.fail("k'k + q^-1 e e0 = 1");
  if (r(G::k) * r(G::kp) + r(G::e0) * r(G::e) * q != I) out.fail("k k' + q e0 e = 1");
  if (!(r(G::e) * r(G::kp) + r(G::kp) * r(G::e) * q).is_zero()) out.fail("e k' + q k' e = 0");
  if (r(G::e) * r(G::f) - r(G::f) * r(G::e) !=
      (r(G::l) * r(G::k) - r(G::kp) * r(G::lp)) * Scalar::q_minus_q_inv())
    out.fail("ef - fe = (q - q^-1)(l k - k' l')");
  return out;
}

// ---- 4 ------------------------------------------------------------------------

Outcome hopf_axioms() {
  Outcome out;
  const Report r = suite_hopf_axioms(options(4, 100));
  require(out, r, {"coassociativity", "counit", "antipode on generators", "antipode on words"});
  for (const Check& c : r.checks)
    if (c.name == "antipode on words" && c.pass && c.witness != "50 cases") out.fail("expected 50 words");
  return out;
}

// ---- 5 ------------------------------------------------------------------------

Outcome pole_splitting() {
  Outcome out;
  for (HGen g : kAllGens) {
    const HTensor d = h_coproduct(HElement(HWord{g}));
    for (int total = 0; total <= 4; ++total) {
      const SparseMat whole = rho_n_diagram(HWord{g}, total);
      for (int m = 0; m <= total; ++m) {
        SparseMat split(total, total);
        for (const auto& [key, c] : d)
          split += kron(rho_n_diagram(key[0], m), rho_n_diagram(key[1], total - m)) * c;
        if (split != whole)
          out.fail(std::string(gen_name(g)) + " m=" + std::to_string(m) + " n=" + std::to_string(total - m));
      }
    }
  }
  return out;
}

// ---- 6..9 ---------------------------------------------------------------------

Outcome intertwining() {
  Outcome out;
  require(out, suite_intertwine(options(4, 100)));
  return out;
}

Outcome kernel() {
  Outcome out;
  require(out, suite_kernel(options(6, 100)));
  return out;
}

Outcome presentation() {
  Outcome out;
  require(out, suite_presentation(options(5, 200)));
  require(out, suite_confluence(options(4, 200)), {"strategy independence"});
  return out;
}

Outcome phi_morphism() {
  Outcome out;
  require(out, suite_uq(options(4, 100)));
  return out;
}

// ---- 10 -----------------------------------------------------------------------

Outcome determinism() {
  Outcome out;
  for (const std::string& name : suite_names()) {
    SuiteOptions a = options(4, 100), b = options(4, 100);
    a.seed = b.seed = 12345;
    b.threads = 1;
    if (report_json(run_suite(name, a)) != report_json(run_suite(name, b))) out.fail(name);
  }
  return out;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "skein core", 5, skein_core},
      {2, "functor", 30, functor},
      {3, "seed audit", 5, seed_audit},
      {4, "hopf axioms", 60, hopf_axioms},
      {5, "pole splitting", 30, pole_splitting},
      {6, "intertwining", 60, intertwining},
      {7, "kernel", 60, kernel},
      {8, "presentation", 120, presentation},
      {9, "phi", 30, phi_morphism},
      {10, "determinism", 0, determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    all = all && o.pass;
    std::printf("criterion %2d %-15s %s  %.2f s%s%s\n", c.number, c.title, o.pass ? "PASS" : "FAIL", secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
