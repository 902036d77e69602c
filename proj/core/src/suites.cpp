#include "polecat/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <optional>
#include <thread>

#include "polecat/error.hpp"
#include "polecat/halg.hpp"
#include "polecat/pbw.hpp"
#include "polecat/rep.hpp"
#include "polecat/rng.hpp"
#include "polecat/tl.hpp"
#include "polecat/uq.hpp"

namespace polecat {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

// ---- harness ----------------------------------------------------------------

using CaseFn = std::function<std::optional<std::string>(std::size_t index)>;

// Runs cases 0..count-1 (possibly concurrently) and returns the failure of
// the lowest failing index.
std::optional<std::string> run_cases(std::size_t count, int threads, const CaseFn& fn) {
  std::vector<std::optional<std::string>> results(count);
  auto guarded = [&](std::size_t i) {
    try {
      results[i] = fn(i);
    } catch (const std::exception& e) {
      results[i] = std::string("exception: ") + e.what();
    }
  };
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) guarded(i);
      });
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < count; ++i)
    if (results[i]) return "case " + std::to_string(i) + ": " + *results[i];
  return std::nullopt;
}

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, const SuiteOptions& o) : options_(o) { report_.suite = std::move(suite); }

  const SuiteOptions& options() const { return options_; }

  void add(std::string name, std::string anchor, bool pass, std::string witness) {
    report_.checks.push_back({std::move(name), std::move(anchor), pass, std::move(witness)});
  }

  /// A check over `count` cases; `fn` returns a failure description.
  void cases(std::string name, std::string anchor, std::size_t count, const CaseFn& fn) {
    const auto failure = run_cases(count, options_.threads, fn);
    add(std::move(name), std::move(anchor), !failure,
        failure ? *failure : std::to_string(count) + " cases");
  }

  /// A randomized check; case i draws from Rng(seed, name, i).
  void random_cases(std::string name, std::string anchor, std::size_t count,
                    const std::function<std::optional<std::string>(Rng&)>& fn) {
    const std::uint64_t seed = options_.seed;
    const std::string label = report_.suite + "/" + name;
    cases(std::move(name), std::move(anchor), count, [&](std::size_t i) {
      Rng rng(seed, label, i);
      return fn(rng);
    });
  }

  Report finish() { return std::move(report_); }

 private:
  SuiteOptions options_;
  Report report_;
};

std::optional<std::string> fail_if(bool bad, const std::function<std::string()>& what) {
  if (bad) return what();
  return std::nullopt;
}

std::size_t trials(const SuiteOptions& o) { return static_cast<std::size_t>(std::max(0, o.trials)); }

// ---- random inputs ------------------------------------------------------------

HWord random_word(Rng& rng, int max_length, const std::vector<HGen>& alphabet) {
  const int len = rng.range(0, max_length);
  HWord w;
  for (int i = 0; i < len; ++i) w.push_back(alphabet[rng.below(alphabet.size())]);
  return w;
}

const std::vector<HGen>& all_letters() {
  static const std::vector<HGen> v(std::begin(kAllGens), std::end(kAllGens));
  return v;
}

const std::vector<HGen>& hprime_letters() {
  static const std::vector<HGen> v{HGen::e, HGen::f, HGen::k, HGen::kp};
  return v;
}

// A grade pair (n, m) with n, m <= max and n + m even.
std::pair<int, int> random_grades(Rng& rng, int max) {
  const int n = rng.range(0, max);
  int m = rng.range(0, max);
  if ((n + m) % 2 != 0) m = m == max ? m - 1 : m + 1;
  return {n, m};
}

TLTerm random_term(Rng& rng, int n, int m, int max_crossings) {
  const int c = rng.range(0, max_crossings);
  return tl_random(n, m, c, rng.below(~std::uint64_t{0}));
}

std::string word_text(const HWord& w) { return to_string(w); }

TLTerm pad(const TLTerm& piece, int left, int right) {
  TLTerm out = piece;
  if (left > 0) out = TLTerm::tensor(TLTerm::id(left), out);
  if (right > 0) out = TLTerm::tensor(out, TLTerm::id(right));
  return out;
}

TLTerm stack_all(std::initializer_list<TLTerm> layers) {
  auto it = layers.begin();
  TLTerm out = *it;
  for (++it; it != layers.end(); ++it) out = TLTerm::stack(out, *it);
  return out;
}

MatchingSum scaled(MatchingSum s, const Scalar& c) {
  MatchingSum out;
  for (auto& [m, v] : s) {
    Scalar w = v * c;
    if (!w.is_zero()) out.emplace(m, std::move(w));
  }
  return out;
}

HElement el(const HWord& w, const Scalar& c = Scalar(1)) { return HElement(w, c); }

std::string matrix_text(const SparseMat& m) {
  std::string out = "[";
  for (const auto& [key, v] : m.entries()) {
    if (out.size() > 1) out += ", ";
    out += "[" + std::to_string(key.first) + "," + std::to_string(key.second) + "," +
           v.to_string() + "]";
  }
  return out + "]";
}

std::string difference_text(const SparseMat& a, const SparseMat& b) {
  StateMatrix::Key where;
  if (!StateMatrix::first_difference(a, b, where)) return "equal";
  return "entry (" + std::to_string(where.first) + "," + std::to_string(where.second) +
         "): " + a.at(where.first, where.second).to_string() + " vs " +
         b.at(where.first, where.second).to_string();
}


}  // namespace

// ==== tl-axioms =================================================================

Report suite_tl_axioms(const SuiteOptions& o) {
  SuiteBuilder s("tl-axioms", o);
  const TLTerm xp = TLTerm::cross_pos(), xn = TLTerm::cross_neg();
  const TLTerm loop = TLTerm::stack(TLTerm::cup(), TLTerm::cap());

  s.cases("crossing expansion", "xp = sqrt(-q) id + sqrt(-q)^-1 cup cap", 1, [&](std::size_t) {
    MatchingSum want;
    want.emplace(Matching::identity(2), Scalar::sqrt_minus_q());
    want.emplace(Matching(2, 2, {{0, 1}, {2, 3}}), Scalar::sqrt_minus_q().inverse());
    const MatchingSum got = kauffman_normalize(xp);
    return fail_if(got != want, [&] { return to_string(got); });
  });

  // Reidemeister moves inside every position of up to four strands.
  s.cases("reidemeister 2", "crossing ; inverse crossing = id", 3 * 2, [&](std::size_t c) {
    const int width = 2 + static_cast<int>(c / 2);
    const bool pos_first = c % 2 == 0;
    for (int i = 0; i + 2 <= width; ++i) {
      const TLTerm a = pad(pos_first ? xp : xn, i, width - 2 - i);
      const TLTerm b = pad(pos_first ? xn : xp, i, width - 2 - i);
      if (!tl_equal(TLTerm::stack(a, b), TLTerm::id(width)))
        return std::optional<std::string>("width " + std::to_string(width) + " position " +
                                          std::to_string(i));
    }
    return std::optional<std::string>();
  });

  // s1^a s2^b s1^c = s2^c s1^b s2^a is a braid identity when a = b = c or
  // a != c; these are the six sign patterns of the third move.
  s.cases("reidemeister 3", "s1^a s2^b s1^c = s2^c s1^b s2^a", 6, [&](std::size_t c) {
    static constexpr bool kSigns[6][3] = {{true, true, true},   {false, false, false},
                                          {true, true, false},  {true, false, false},
                                          {false, true, true},  {false, false, true}};
    const bool* sg = kSigns[c];
    auto sig = [&](int strand, bool positive) {
      return pad(positive ? xp : xn, strand, 1 - strand);
    };
    const TLTerm lhs = stack_all({sig(0, sg[0]), sig(1, sg[1]), sig(0, sg[2])});
    const TLTerm rhs = stack_all({sig(1, sg[2]), sig(0, sg[1]), sig(1, sg[0])});
    return fail_if(!tl_equal(lhs, rhs), [&] { return to_string(lhs) + " != " + to_string(rhs); });
  });

  s.cases("zigzag", "(cup @ id) ; (id @ cap) = id = (id @ cup) ; (cap @ id)", 1, [&](std::size_t) {
    const TLTerm z1 = TLTerm::stack(TLTerm::tensor(TLTerm::cup(), TLTerm::id(1)),
                                    TLTerm::tensor(TLTerm::id(1), TLTerm::cap()));
    const TLTerm z2 = TLTerm::stack(TLTerm::tensor(TLTerm::id(1), TLTerm::cup()),
                                    TLTerm::tensor(TLTerm::cap(), TLTerm::id(1)));
    return fail_if(!tl_equal(z1, TLTerm::id(1)) || !tl_equal(z2, TLTerm::id(1)),
                   [] { return std::string("zigzag does not straighten"); });
  });

  s.cases("closed loop", "cup ; cap = q + q^-1", 1, [&](std::size_t) {
    const MatchingSum got = kauffman_normalize(loop);
    MatchingSum want;
    want.emplace(Matching(0, 0, {}), Scalar::loop_value());
    return fail_if(got != want, [&] { return to_string(got); });
  });

  s.random_cases("delooping", "removing a loop multiplies by q + q^-1", trials(o), [&](Rng& rng) {
    const auto [n, m] = random_grades(rng, 4);
    const TLTerm d = random_term(rng, n, m, 3);
    const MatchingSum base = kauffman_normalize(d);
    const MatchingSum want = scaled(base, Scalar::loop_value());
    const MatchingSum beside = kauffman_normalize(TLTerm::tensor(d, loop));
    const int at = rng.range(0, m);
    const TLTerm inside =
        stack_all({d, pad(TLTerm::cup(), at, m - at), pad(TLTerm::cap(), at, m - at)});
    const MatchingSum inner = kauffman_normalize(inside);
    return fail_if(beside != want || inner != want, [&] { return to_string(d); });
  });

  s.random_cases("functoriality", "F(a ; b) = F(b) F(a)", trials(o), [&](Rng& rng) {
    const int n = rng.range(0, 3);
    const int k = n % 2 == 0 ? 2 * rng.range(0, 1) : 2 * rng.range(0, 1) + 1;
    const int m = k % 2 == 0 ? 2 * rng.range(0, 1) : 2 * rng.range(0, 1) + 1;
    const TLTerm a = random_term(rng, n, k, 3);
    const TLTerm b = random_term(rng, k, m, 3);
    const SparseMat lhs = tl_to_matrix(TLTerm::stack(a, b));
    const SparseMat rhs = tl_to_matrix(b) * tl_to_matrix(a);
    return fail_if(lhs != rhs, [&] { return to_string(a) + " ; " + to_string(b); });
  });

  s.random_cases("monoidality", "F(a @ b) = F(a) (x) F(b)", trials(o), [&](Rng& rng) {
    const auto [n1, m1] = random_grades(rng, 3);
    const auto [n2, m2] = random_grades(rng, 3);
    const TLTerm a = random_term(rng, n1, m1, 3);
    const TLTerm b = random_term(rng, n2, m2, 3);
    const SparseMat lhs = tl_to_matrix(TLTerm::tensor(a, b));
    const SparseMat rhs = kron(tl_to_matrix(a), tl_to_matrix(b));
    return fail_if(lhs != rhs, [&] { return to_string(a) + " @ " + to_string(b); });
  });

  s.cases("ice rule", "a crossing conserves the number of up arrows", 2, [&](std::size_t c) {
    const SparseMat m = tl_to_matrix(c == 0 ? xp : xn);
    for (const auto& [key, v] : m.entries())
      if (std::popcount(key.first) != std::popcount(key.second))
        return std::optional<std::string>("entry (" + std::to_string(key.first) + "," +
                                          std::to_string(key.second) + ")");
    return std::optional<std::string>();
  });

  s.cases("weight table", "each elementary matrix agrees with closed evaluation", 13,
          [&](std::size_t c) {
            TLTerm g;
            if (c < 5) {
              const TLTerm basic[] = {TLTerm::id(1), TLTerm::cup(), TLTerm::cap(), xp, xn};
              g = basic[c];
            } else {
              const std::size_t j = c - 5;
              g = TLTerm::stub(j & 1 ? Side::west : Side::east, j & 2 ? Orient::out : Orient::in,
                               j & 4 ? StubEnd::end : StubEnd::start);
            }
            const SparseMat a = tl_to_matrix(g), b = tl_to_matrix_oracle(g);
            return fail_if(a != b, [&] { return to_string(g) + ": " + difference_text(a, b); });
          });

  s.random_cases("path agreement", "closed diagrams: state sum = strand tracing", trials(o),
                 [&](Rng& rng) {
                   const auto [n, m] = random_grades(rng, 3);
                   TLTerm d = random_term(rng, n, m, 3);
                   auto any_stub = [&](StubEnd which) {
                     return TLTerm::stub(rng.coin() ? Side::east : Side::west,
                                         rng.coin() ? Orient::in : Orient::out, which);
                   };
                   TLTerm below, above;
                   for (int x = 0; x < n; ++x) below = TLTerm::tensor(below, any_stub(StubEnd::start));
                   for (int x = 0; x < m; ++x) above = TLTerm::tensor(above, any_stub(StubEnd::end));
                   const TLTerm closed = stack_all({below, d, above});
                   const Scalar a = tl_to_matrix(closed).at(0, 0);
                   const Scalar b = eval_closed(closed);
                   return fail_if(a != b, [&] {
                     return to_string(closed) + ": " + a.to_string() + " vs " + b.to_string();
                   });
                 });

  s.cases("open matrices", "tl_to_matrix = closure evaluation, entry by entry", trials(o) / 4 + 1,
          [&](std::size_t i) {
            Rng rng(o.seed, "tl-axioms/open matrices", i);
            const auto [n, m] = random_grades(rng, 3);
            const TLTerm d = random_term(rng, n, m, 2);
            const SparseMat a = tl_to_matrix(d), b = tl_to_matrix_oracle(d);
            return fail_if(a != b, [&] { return to_string(d) + ": " + difference_text(a, b); });
          });

  s.cases("cutting", "sum over orientations of cut strands = id(1)", 2, [&](std::size_t c) {
    // The lower piece ends at a vertex, the upper piece starts at one next
    // to it, facing the other way.
    const Side lower = c == 0 ? Side::west : Side::east;
    const Side upper = c == 0 ? Side::east : Side::west;
    SparseMat sum(1, 1);
    for (Orient o1 : {Orient::in, Orient::out}) {
      const Orient o2 = o1 == Orient::in ? Orient::out : Orient::in;
      sum += tl_to_matrix(TLTerm::stub(upper, o2, StubEnd::start)) *
             tl_to_matrix(TLTerm::stub(lower, o1, StubEnd::end));
    }
    return fail_if(sum != SparseMat::identity(1), [&] { return matrix_text(sum); });
  });

  s.cases("oriented loops", "the two orientations of a loop give q and q^-1", 1, [&](std::size_t) {
    const SparseMat cup = tl_to_matrix(TLTerm::cup());
    const SparseMat cap = tl_to_matrix(TLTerm::cap());
    std::vector<Scalar> parts;
    for (StateMatrix::Index st : {0b01u, 0b10u}) parts.push_back(cap.at(0, st) * cup.at(st, 0));
    std::sort(parts.begin(), parts.end(),
              [](const Scalar& x, const Scalar& y) { return x.to_string() < y.to_string(); });
    const bool ok = (parts[0] == Scalar::q() && parts[1] == Scalar::q_inv()) ||
                    (parts[1] == Scalar::q() && parts[0] == Scalar::q_inv());
    const bool total = eval_closed(loop) == Scalar::loop_value();
    return fail_if(!ok || !total,
                   [&] { return parts[0].to_string() + ", " + parts[1].to_string(); });
  });

  s.cases("confetti", "a straight strand between vertices is 1 or 0", 4, [&](std::size_t c) {
    const Orient a = c & 1 ? Orient::out : Orient::in;
    const Orient b = c & 2 ? Orient::out : Orient::in;
    const TLTerm strand = TLTerm::stack(TLTerm::stub(Side::east, a, StubEnd::start),
                                        TLTerm::stub(Side::west, b, StubEnd::end));
    const Scalar want = a != b ? Scalar(1) : Scalar();
    const Scalar got = eval_closed(strand);
    return fail_if(got != want, [&] { return to_string(strand) + " = " + got.to_string(); });
  });

  s.cases("empty diagram", "id(0) evaluates to 1", 1, [&](std::size_t) {
    return fail_if(eval_closed(TLTerm()) != Scalar(1), [] { return std::string("not 1"); });
  });

  s.random_cases("generator determinism", "same seed, same term", trials(o) / 4 + 1, [&](Rng& rng) {
    const auto [n, m] = random_grades(rng, 4);
    const int c = rng.range(0, 3);
    const std::uint64_t seed = rng.below(1000000);
    return fail_if(!(tl_random(n, m, c, seed) == tl_random(n, m, c, seed)),
                   [&] { return "seed " + std::to_string(seed); });
  });

  return s.finish();
}

// ==== hopf-axioms ===============================================================

Report suite_hopf_axioms(const SuiteOptions& o) {
  SuiteBuilder s("hopf-axioms", o);
  const int n_max = std::min(o.cutoff, 4);

  s.cases("coassociativity", "(Delta @ id) Delta = (id @ Delta) Delta", 8, [&](std::size_t i) {
    const HGen g = kAllGens[i];
    const HTensor d = h_coproduct(el({g}));
    HTensor left(3), right(3);
    for (const auto& [key, c] : d.sum()) {
      for (const auto& [k2, c2] : h_coproduct(el(key[0])))
        left.add({k2[0], k2[1], key[1]}, c * c2);
      for (const auto& [k2, c2] : h_coproduct(el(key[1])))
        right.add({key[0], k2[0], k2[1]}, c * c2);
    }
    const bool iter = iterate_coproduct(el({g}), 3) == left;
    return fail_if(left != right || !iter,
                   [&] { return std::string(gen_name(g)) + ": " + to_string(left) + " vs " +
                                to_string(right); });
  });

  s.cases("counit", "(eps @ id) Delta = id = (id @ eps) Delta", 8, [&](std::size_t i) {
    const HGen g = kAllGens[i];
    HElement left, right;
    for (const auto& [key, c] : h_coproduct(el({g}))) {
      left.add(key[1], c * h_counit(el(key[0])));
      right.add(key[0], c * h_counit(el(key[1])));
    }
    return fail_if(left != el({g}) || right != el({g}), [&] { return std::string(gen_name(g)); });
  });

  s.cases("coproduct from cutting", "Delta splits each vertex pair through both orientations", 8,
          [&](std::size_t i) {
            const HGen g = kAllGens[i];
            const GenShape sh = gen_shape(g);
            HTensor want(2);
            for (Orient mid : {Orient::in, Orient::out}) {
              const Orient other = mid == Orient::in ? Orient::out : Orient::in;
              want.add({{gen_from_shape(sh.over, sh.left, mid)}, {gen_from_shape(sh.over, other, sh.right)}},
                       Scalar(1));
            }
            const HTensor got = h_coproduct(el({g}));
            return fail_if(got != want, [&] { return std::string(gen_name(g)) + ": " + to_string(got); });
          });

  s.random_cases("multiplicativity", "Delta(xy) = Delta(x) Delta(y), eps(xy) = eps(x) eps(y)",
                 trials(o), [&](Rng& rng) {
                   const HElement x = el(random_word(rng, 4, all_letters()));
                   const HElement y = el(random_word(rng, 4, all_letters()));
                   const HElement xy = h_mul(x, y);
                   const bool delta = h_coproduct(xy) == h_coproduct(x) * h_coproduct(y);
                   const bool eps = h_counit(xy) == h_counit(x) * h_counit(y);
                   return fail_if(!delta || !eps, [&] { return to_string(x) + " | " + to_string(y); });
                 });

  s.random_cases("antipode reverses products", "S(xy) = S(y) S(x)", trials(o), [&](Rng& rng) {
    const HElement x = el(random_word(rng, 4, all_letters()));
    const HElement y = el(random_word(rng, 4, all_letters()));
    const bool ok = h_antipode(h_mul(x, y)) == h_mul(h_antipode(y), h_antipode(x)) &&
                    h_antipode_inverse(h_antipode(x)) == x;
    return fail_if(!ok, [&] { return to_string(x) + " | " + to_string(y); });
  });

  s.random_cases("cartan involution", "theta is an involutive homomorphism, theta S = S^-1 theta",
                 trials(o), [&](Rng& rng) {
                   const HElement x = el(random_word(rng, 5, all_letters()));
                   const HElement y = el(random_word(rng, 5, all_letters()));
                   const bool hom = h_cartan(h_mul(x, y)) == h_mul(h_cartan(x), h_cartan(y));
                   const bool inv = h_cartan(h_cartan(x)) == x;
                   const bool anti = h_cartan(h_antipode(x)) == h_antipode_inverse(h_cartan(x));
                   return fail_if(!hom || !inv || !anti, [&] { return to_string(x) + " | " + to_string(y); });
                 });

  {
    // theta against Delta: on the nose, or after exchanging tensor factors.
    std::string nose_fail, swap_fail;
    for (HGen g : kAllGens) {
      const HTensor lhs = h_coproduct(h_cartan(el({g})));
      const HTensor mapped =
          apply_to_factor(apply_to_factor(h_coproduct(el({g})), 0, h_cartan), 1, h_cartan);
      if (lhs != mapped && nose_fail.empty()) nose_fail = gen_name(g);
      if (lhs != swap_factors(mapped) && swap_fail.empty()) swap_fail = gen_name(g);
    }
    std::string witness = "on the nose: " + (nose_fail.empty() ? "holds" : "fails at " + nose_fail) +
                          "; with factors exchanged: " +
                          (swap_fail.empty() ? "holds" : "fails at " + swap_fail);
    s.add("cartan and coproduct", "Delta theta = tau (theta @ theta) Delta",
          nose_fail.empty() || swap_fail.empty(), witness);
  }

  // Matrix-level Hopf axioms.
  auto antipode_case = [&](const HElement& x) -> std::optional<std::string> {
    const HTensor d = h_coproduct(x);
    const HElement left = multiply_factors(apply_to_factor(d, 0, h_antipode));
    const HElement right = multiply_factors(apply_to_factor(d, 1, h_antipode));
    const Scalar eps = h_counit(x);
    for (int n = 0; n <= n_max; ++n) {
      const SparseMat want = SparseMat::identity(n) * eps;
      const SparseMat a = rho_n(left, n), b = rho_n(right, n);
      if (a != want || b != want)
        return to_string(x) + " at n=" + std::to_string(n) + ": " +
               difference_text(a != want ? a : b, want);
    }
    return std::nullopt;
  };
  s.cases("antipode on generators", "S(x1) x2 = eps(x) 1 = x1 S(x2) under every threading", 8,
          [&](std::size_t i) { return antipode_case(el({kAllGens[i]})); });
  s.random_cases("antipode on words", "S(x1) x2 = eps(x) 1 = x1 S(x2) under every threading",
                 trials(o) / 2, [&](Rng& rng) { return antipode_case(el(random_word(rng, 3, all_letters()))); });

  // Seed audit.
  s.cases("seed table", "frozen seed matrices = closed evaluation", 1, [&](std::size_t) {
    const auto derived = derive_seed_table();
    for (HGen g : kAllGens)
      if (derived[static_cast<std::size_t>(g)] != rho_seed(g))
        return std::optional<std::string>(std::string(gen_name(g)) + ": " +
                                          difference_text(rho_seed(g), derived[static_cast<std::size_t>(g)]));
    return std::optional<std::string>();
  });

  {
    using G = HGen;
    const Scalar q = Scalar::q(), qi = Scalar::q_inv();
    struct Rel {
      const char* name;
      HElement lhs, rhs;
    };
    const HElement one = h_unit();
    const Rel rels[] = {
        {"k'k + q^-1 e e0 = 1", el({G::kp, G::k}) + el({G::e, G::e0}, qi), one},
        {"k k' + q e0 e = 1", el({G::k, G::kp}) + el({G::e0, G::e}, q), one},
        {"e k' + q k' e = 0", el({G::e, G::kp}) + el({G::kp, G::e}, q), HElement()},
        {"e f - f e = (q - q^-1)(l k - k' l')",
         el({G::e, G::f}) - el({G::f, G::e}),
         (el({G::l, G::k}) - el({G::kp, G::lp})) * Scalar::q_minus_q_inv()},
    };
    for (const Rel& r : rels) {
      const SparseMat a = rho_n(r.lhs, 1), b = rho_n(r.rhs, 1);
      s.add(std::string("seed relation ") + r.name, r.name, a == b, a == b ? "" : difference_text(a, b));
    }
    std::string bad;
    if (!rho_seed(G::e0).is_zero()) bad += "e0 ";
    if (!rho_seed(G::f0).is_zero()) bad += "f0 ";
    if (rho_seed(G::k) != rho_seed(G::l)) bad += "k/l ";
    if (rho_seed(G::kp) != rho_seed(G::lp)) bad += "k'/l' ";
    s.add("seed kernel", "rho(e0) = rho(f0) = 0, rho(k) = rho(l), rho(k') = rho(l')", bad.empty(), bad);
    std::string eps_bad;
    for (HGen g : kAllGens)
      if (rho_n(el({g}), 0) != SparseMat::scalar(h_counit(el({g})))) eps_bad += std::string(gen_name(g)) + " ";
    s.add("seed counit", "threading zero strands is eps", eps_bad.empty(), eps_bad);
  }

  // Both sides from threaded diagrams, so the coproduct table is tested
  // against the diagrams rather than against itself.
  s.cases("pole splitting", "rho_{m+n}(g) = (rho_m @ rho_n) Delta(g)", 8, [&](std::size_t i) {
    const HGen g = kAllGens[i];
    const HTensor d = h_coproduct(el({g}));
    for (int total = 0; total <= n_max; ++total)
      for (int m = 0; m <= total; ++m) {
        const SparseMat a = rho_n_diagram(el({g}), total);
        SparseMat b(total, total);
        for (const auto& [key, c] : d)
          b += kron(rho_n_diagram(key[0], m), rho_n_diagram(key[1], total - m)) * c;
        if (a != b)
          return std::optional<std::string>(std::string(gen_name(g)) + " m=" + std::to_string(m) +
                                            " n=" + std::to_string(total - m) + ": " + difference_text(a, b));
      }
    return std::optional<std::string>();
  });

  s.cases("dual path on generators", "coproduct threading = threaded diagram", 8, [&](std::size_t i) {
    const HGen g = kAllGens[i];
    for (int n = 0; n <= 3; ++n) {
      const SparseMat a = rho_n(el({g}), n), b = rho_n_diagram(el({g}), n);
      if (a != b)
        return std::optional<std::string>(std::string(gen_name(g)) + " n=" + std::to_string(n) + ": " +
                                          difference_text(a, b));
    }
    return std::optional<std::string>();
  });

  s.random_cases("dual path on words", "coproduct threading = threaded diagram", 50, [&](Rng& rng) {
    const HWord w = random_word(rng, 3, all_letters());
    for (int n = 0; n <= 2; ++n) {
      const SparseMat a = rho_n(w, n), b = rho_n_diagram(w, n);
      if (a != b) return std::optional<std::string>(word_text(w) + " n=" + std::to_string(n));
    }
    return std::optional<std::string>();
  });

  return s.finish();
}

// ==== intertwine ================================================================

Report suite_intertwine(const SuiteOptions& o) {
  SuiteBuilder s("intertwine", o);
  s.cases("cup", "rho_2(e) F(cup) = F(cup) eps(e)", 1, [&](std::size_t) {
    return fail_if(!intertwine_check(el({HGen::e}), TLTerm::cup()), [] { return std::string("e, cup"); });
  });
  s.cases("identity", "rho_1(k) F(id) = F(id) rho_1(k)", 1, [&](std::size_t) {
    return fail_if(!intertwine_check(el({HGen::k}), TLTerm::id(1)), [] { return std::string("k, id(1)"); });
  });
  s.cases("generators and elementary diagrams", "rho_m(h) F(d) = F(d) rho_n(h)", 8, [&](std::size_t i) {
    const TLTerm ds[] = {TLTerm::cup(), TLTerm::cap(), TLTerm::cross_pos(), TLTerm::cross_neg()};
    for (const TLTerm& d : ds)
      if (!intertwine_check(el({kAllGens[i]}), d))
        return std::optional<std::string>(std::string(gen_name(kAllGens[i])) + ", " + to_string(d));
    return std::optional<std::string>();
  });
  s.random_cases("random pairs", "rho_m(h) F(d) = F(d) rho_n(h)", trials(o), [&](Rng& rng) {
    const HWord w = random_word(rng, 4, all_letters());
    const auto [n, m] = random_grades(rng, std::min(o.cutoff, 4));
    const TLTerm d = random_term(rng, n, m, 3);
    return fail_if(!intertwine_check(el(w), d), [&] { return word_text(w) + ", " + to_string(d); });
  });
  return s.finish();
}

// ==== kernel ====================================================================

Report suite_kernel(const SuiteOptions& o) {
  SuiteBuilder s("kernel", o);
  using G = HGen;
  const std::size_t count = static_cast<std::size_t>(std::max(0, o.cutoff) + 1);
  auto check = [&](std::string name, std::string anchor, G a, std::optional<G> b) {
    s.cases(std::move(name), std::move(anchor), count, [&, a, b](std::size_t n) {
      const SparseMat x = rho_n(el({a}), static_cast<int>(n));
      const bool ok = b ? x == rho_n(el({*b}), static_cast<int>(n)) : x.is_zero();
      return fail_if(!ok, [&] { return "n=" + std::to_string(n); });
    });
  };
  check("e0 vanishes", "rho_n(e0) = 0", G::e0, std::nullopt);
  check("f0 vanishes", "rho_n(f0) = 0", G::f0, std::nullopt);
  check("k equals l", "rho_n(k) = rho_n(l)", G::k, G::l);
  check("k' equals l'", "rho_n(k') = rho_n(l')", G::kp, G::lp);
  return s.finish();
}

// ==== presentation ==============================================================

namespace {

// Rank of the images of `monomials` under rho_0 + ... + rho_n (the
// threadings side by side), evaluated exactly at t0.
std::size_t image_rank(const std::vector<PBWMonomial>& monomials, int n, const GaussRat& t0) {
  std::vector<std::vector<GaussRat>> rows;
  std::size_t dim = 0;
  for (int j = 0; j <= n; ++j) dim += std::size_t{1} << (2 * j);
  for (const PBWMonomial& m : monomials) {
    std::vector<GaussRat> v(dim);
    std::size_t offset = 0;
    for (int j = 0; j <= n; ++j) {
      const SparseMat image = rho_n(pbw_word(m), j);
      for (const auto& [key, c] : image.entries())
        v[offset + ((key.first << j) | key.second)] = c.eval_exact(t0);
      offset += std::size_t{1} << (2 * j);
    }
    rows.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const GaussRat inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const GaussRat f = rows[r][col] * inv;
      for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Report suite_presentation(const SuiteOptions& o) {
  SuiteBuilder s("presentation", o);
  using G = HGen;
  const Scalar q = Scalar::q();
  struct Rel {
    const char* name;
    HElement lhs, rhs;
  };
  const Rel rels[] = {
      {"e k = -q^-1 k e", el({G::e, G::k}), el({G::k, G::e}, -q.inverse())},
      {"f k = -q k f", el({G::f, G::k}), el({G::k, G::f}, -q)},
      {"e f - f e = (q - q^-1)(k^2 - k^-2)", el({G::e, G::f}) - el({G::f, G::e}),
       (el({G::k, G::k}) - el({G::kp, G::kp})) * Scalar::q_minus_q_inv()},
      {"k k^-1 = 1", el({G::k, G::kp}), h_unit()},
      {"k^-1 k = 1", el({G::kp, G::k}), h_unit()},
  };
  for (const Rel& r : rels) {
    const EqualityWitness w = h_equal_upto(r.lhs, r.rhs, o.cutoff);
    s.add(std::string("relation ") + r.name, r.name, w.equal,
          w.equal ? "n <= " + std::to_string(o.cutoff) : w.describe());
  }
  s.cases("rewriting rules are sound", "each rewriting step preserves every threading", 7,
          [&](std::size_t i) {
            const HWord redexes[] = {{G::k, G::kp}, {G::kp, G::k}, {G::e, G::k}, {G::e, G::kp},
                                     {G::k, G::f},  {G::kp, G::f}, {G::e, G::f}};
            const HWord& w = redexes[i];
            const EqualityWitness eq = h_equal_upto(el(w), pbw_rewrite_at(w, 0), o.cutoff);
            return fail_if(!eq.equal, [&] { return word_text(w) + ": " + eq.describe(); });
          });

  const int sound_cutoff = std::min(o.cutoff, 4);
  s.random_cases("normal forms are sound",
                 "equal normal forms give equal matrices for n <= " + std::to_string(sound_cutoff),
                 trials(o), [&](Rng& rng) -> std::optional<std::string> {
                   const HWord w = random_word(rng, 6, hprime_letters());
                   const HElement x = el(w);
                   // y: the same element after a few random rewriting steps,
                   // or its normal form.
                   HElement y = x;
                   if (rng.coin()) {
                     y = pbw_to_h(pbw_normalize(x));
                   } else {
                     for (int step = rng.range(1, 3); step > 0; --step) {
                       HElement next;
                       for (const auto& [v, c] : y) {
                         const auto spots = pbw_redexes(v);
                         if (spots.empty()) {
                           next.add(v, c);
                           continue;
                         }
                         next += pbw_rewrite_at(v, spots[rng.below(spots.size())]) * c;
                       }
                       y = next;
                     }
                   }
                   if (pbw_normalize(x) != pbw_normalize(y)) return "normal forms differ for " + word_text(w);
                   const EqualityWitness eq = h_equal_upto(x, y, sound_cutoff);
                   if (!eq.equal) return word_text(w) + ": " + eq.describe();
                   return std::nullopt;
                 });

  {
    // Cutoff evidence for faithfulness: low-degree monomials stay linearly
    // independent after threading.  Not a proof of injectivity.
    std::vector<PBWMonomial> mons;
    for (int a = 0; a <= 2; ++a)
      for (int c = 0; a + c <= 2; ++c)
        for (int b = -(2 - a - c); b <= 2 - a - c; ++b) mons.push_back({a, b, c});
    const int n = sound_cutoff;
    const std::size_t rank = image_rank(mons, n, GaussRat(2));
    s.add("faithfulness cutoff evidence",
          "monomials f^a k^b e^c of degree <= 2 stay independent under rho_n, n <= " +
              std::to_string(n) + " (cutoff evidence only)",
          rank == mons.size(),
          "rank " + std::to_string(rank) + " of " + std::to_string(mons.size()) + " at t = 2");
  }
  return s.finish();
}

// ==== uq ==========================================================================

namespace {

UqElement random_uq(Rng& rng) {
  UqElement x;
  for (int terms = rng.range(1, 3); terms > 0; --terms) {
    UqWord w;
    for (int len = rng.range(0, 4); len > 0; --len) w.push_back(static_cast<UqGen>(rng.below(4)));
    x.add(std::move(w), Scalar(rng.range(-3, 3)));
  }
  return x;
}

}  // namespace

Report suite_uq(const SuiteOptions& o) {
  SuiteBuilder s("uq", o);
  for (const Identity& id : uq_relation_suite()) s.add(id.name, id.anchor, id.holds, id.residue);
  for (const Identity& id : vminus_identification()) s.add(id.name, id.anchor, id.holds, id.residue);
  s.random_cases("parity", "phi lands in the span of even monomials", trials(o), [&](Rng& rng) {
    const UqElement x = random_uq(rng);
    return fail_if(!image_parity_check(x), [&] { return to_string(x); });
  });
  return s.finish();
}

// ==== confluence ==================================================================

Report suite_confluence(const SuiteOptions& o) {
  SuiteBuilder s("confluence", o);
  s.random_cases("strategy independence", "leftmost and rightmost rewriting agree", trials(o),
                 [&](Rng& rng) {
                   const HWord w = random_word(rng, 8, hprime_letters());
                   const PBWElement a = pbw_normalize(el(w), RedexStrategy::leftmost);
                   const PBWElement b = pbw_normalize(el(w), RedexStrategy::rightmost);
                   return fail_if(a != b, [&] { return word_text(w) + ": " + to_string(a) + " vs " + to_string(b); });
                 });
  s.random_cases("parity", "normal-form degrees have the parity of the word length", trials(o),
                 [&](Rng& rng) {
                   const HWord w = random_word(rng, 8, hprime_letters());
                   for (const auto& [m, c] : pbw_normalize(el(w)))
                     if ((m.degree() - static_cast<int>(w.size())) % 2 != 0)
                       return std::optional<std::string>(word_text(w) + ": " + to_string(m));
                   return std::optional<std::string>();
                 });
  return s.finish();
}

// ==== dispatch =====================================================================

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tl-axioms", "hopf-axioms", "intertwine", "kernel",
                                              "presentation", "uq", "confluence"};
  return names;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "tl-axioms") return suite_tl_axioms(options);
  if (name == "hopf-axioms") return suite_hopf_axioms(options);
  if (name == "intertwine") return suite_intertwine(options);
  if (name == "kernel") return suite_kernel(options);
  if (name == "presentation") return suite_presentation(options);
  if (name == "uq") return suite_uq(options);
  if (name == "confluence") return suite_confluence(options);
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

}  // namespace polecat
