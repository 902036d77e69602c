// polecat: command line front end.
//
//   polecat eval     "<diagram>"      normal form, or value if closed
//   polecat mat      "<H element>"    threaded matrix as JSON (--n strands)
//   polecat nf       "<H element>"    normal form f^a k^b e^c in H'
//   polecat delta    "<H element>"
//   polecat antipode "<H element>"
//   polecat counit   "<H element>"
//   polecat phi      "<Uq element>"   image in H'
//   polecat check    <suite>          JSON report (--n cutoff)
//   polecat bench                     timing of threading (--n strands)
//
// Exit status: 0 success, 1 failed check, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "polecat/error.hpp"
#include "polecat/halg.hpp"
#include "polecat/json_io.hpp"
#include "polecat/parse.hpp"
#include "polecat/pbw.hpp"
#include "polecat/rep.hpp"
#include "polecat/suites.hpp"
#include "polecat/tl.hpp"
#include "polecat/uq.hpp"

namespace {

using namespace polecat;

struct Options {
  std::string expr;
  std::string suite;
  int n = 4;
  std::uint64_t seed = 0;
  int trials = 100;
  int threads = 0;
  std::string out;
};

std::string run_eval(const Options& o) {
  const TLTerm d = parse_tl(o.expr);
  if (d.source() == 0 && d.target() == 0) return eval_closed(d).to_string();
  return to_string(kauffman_normalize(d));
}

std::string run_bench(const Options& o) {
  // Fixed word set: all generators and a few longer products.
  std::vector<HWord> words;
  for (HGen g : kAllGens) words.push_back({g});
  words.push_back({HGen::e, HGen::f});
  words.push_back({HGen::k, HGen::e, HGen::f, HGen::kp});
  words.push_back({HGen::e, HGen::e0, HGen::l, HGen::f, HGen::lp});
  const auto start = std::chrono::steady_clock::now();
  std::size_t nonzeros = 0;
  for (const HWord& w : words) nonzeros += rho_n(w, o.n).nonzeros();
  const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  return "{\"n\":" + std::to_string(o.n) + ",\"words\":" + std::to_string(words.size()) +
         ",\"nonzeros\":" + std::to_string(nonzeros) + ",\"seconds\":" + std::to_string(secs.count()) +
         "}";
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << '\n';
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "polecat: cannot write " << o.out << '\n';
    return 2;
  }
  f << text << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagram calculus for the pole Hopf algebra and U_q(sl2)", "polecat"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "thread count / cutoff")->check(CLI::Range(0, 12));
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--trials", o.trials, "random cases per check")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    sub->add_option("--out", o.out, "write output to a file");
  };
  auto with_expr = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", o.expr, "expression")->required();
    common(sub);
    return sub;
  };

  CLI::App* eval = with_expr("eval", "diagram normal form, or the value of a closed diagram");
  CLI::App* mat = with_expr("mat", "matrix of an H element threaded by --n strands");
  CLI::App* nf = with_expr("nf", "normal form in H'");
  CLI::App* delta = with_expr("delta", "coproduct");
  CLI::App* antipode = with_expr("antipode", "antipode");
  CLI::App* counit = with_expr("counit", "counit");
  CLI::App* phi_cmd = with_expr("phi", "image of a U_q(sl2) element in H'");
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  common(check);
  CLI::App* bench = app.add_subcommand("bench", "time threading of a fixed word set");
  common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return emit(o, run_eval(o));
    if (*mat) return emit(o, matrix_json(rho_n(parse_h(o.expr), o.n)));
    if (*nf) return emit(o, to_string(pbw_normalize(quotient_to_hprime(parse_h(o.expr)))));
    if (*delta) return emit(o, to_string(h_coproduct(parse_h(o.expr))));
    if (*antipode) return emit(o, to_string(h_antipode(parse_h(o.expr))));
    if (*counit) return emit(o, h_counit(parse_h(o.expr)).to_string());
    if (*phi_cmd) return emit(o, to_string(phi(parse_uq(o.expr))));
    if (*check) {
      SuiteOptions so;
      so.cutoff = o.n;
      so.seed = o.seed;
      so.trials = o.trials;
      so.threads = o.threads;
      const Report r = run_suite(o.suite, so);
      const int written = emit(o, report_json(r));
      if (written != 0) return written;
      return r.pass() ? 0 : 1;
    }
    if (*bench) return emit(o, run_bench(o));
  } catch (const polecat::Error& e) {
    std::cerr << "polecat: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
