#include "polecat/pbw.hpp"

#include <optional>

#include "polecat/error.hpp"

namespace polecat {

namespace {

using G = HGen;

Scalar q_pow(int k) { return Scalar(LaurentPoly(GaussRat(1), 4 * k)); }

bool is_redex(HGen x, HGen y) {
  switch (x) {
    case G::k: return y == G::kp || y == G::f;
    case G::kp: return y == G::k || y == G::f;
    case G::e: return y == G::k || y == G::kp || y == G::f;
    default: return false;
  }
}

void check_letters(const HWord& w) {
  for (HGen g : w)
    if (g != G::e && g != G::f && g != G::k && g != G::kp)
      throw PreconditionError("pbw_normalize: letter '" + std::string(gen_name(g)) +
                              "' is not in {e, f, k, kp}");
}

std::optional<std::size_t> pick(const HWord& w, RedexStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RedexStrategy::leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_redex(w[i], w[i + 1])) return i;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (is_redex(w[i], w[i + 1])) return i;
  }
  return std::nullopt;
}

// w is redex-free, hence of the form f^a (k^b | kp^b) e^c.
PBWMonomial monomial_of(const HWord& w) {
  PBWMonomial m;
  for (HGen g : w) {
    if (g == G::f) ++m.a;
    if (g == G::k) ++m.b;
    if (g == G::kp) --m.b;
    if (g == G::e) ++m.c;
  }
  return m;
}

HWord splice(const HWord& w, std::size_t i, std::initializer_list<HGen> middle) {
  HWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), middle);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
  return out;
}

}  // namespace

std::vector<std::size_t> pbw_redexes(const HWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (is_redex(w[i], w[i + 1])) out.push_back(i);
  return out;
}

HElement pbw_rewrite_at(const HWord& w, std::size_t i) {
  if (i + 1 >= w.size() || !is_redex(w[i], w[i + 1]))
    throw PreconditionError("pbw_rewrite_at: no redex at this position");
  const HGen x = w[i], y = w[i + 1];
  HElement out;
  if ((x == G::k && y == G::kp) || (x == G::kp && y == G::k)) {
    out.add(splice(w, i, {}), Scalar(1));
  } else if (x == G::e && y == G::k) {
    out.add(splice(w, i, {G::k, G::e}), -q_pow(-1));
  } else if (x == G::e && y == G::kp) {
    out.add(splice(w, i, {G::kp, G::e}), -q_pow(1));
  } else if (x == G::k && y == G::f) {
    out.add(splice(w, i, {G::f, G::k}), -q_pow(-1));
  } else if (x == G::kp && y == G::f) {
    out.add(splice(w, i, {G::f, G::kp}), -q_pow(1));
  } else {  // e f
    const Scalar d = Scalar::q_minus_q_inv();
    out.add(splice(w, i, {G::f, G::e}), Scalar(1));
    out.add(splice(w, i, {G::k, G::k}), d);
    out.add(splice(w, i, {G::kp, G::kp}), -d);
  }
  return out;
}

PBWElement pbw_normalize(const HElement& x, RedexStrategy strategy) {
  for (const auto& [w, c] : x) check_letters(w);
  // Work list keyed by word; terms that meet again are merged before being
  // rewritten further, which keeps the expansion small.
  std::map<HWord, Scalar> pending(x.terms().begin(), x.terms().end());
  PBWElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const HWord& w = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) continue;
    const auto at = pick(w, strategy);
    if (!at) {
      out.add(monomial_of(w), c);
      continue;
    }
    for (const auto& [v, d] : pbw_rewrite_at(w, *at)) {
      auto [it, inserted] = pending.try_emplace(v, c * d);
      if (!inserted) it->second += c * d;
    }
  }
  return out;
}

HWord pbw_word(const PBWMonomial& m) {
  HWord w(static_cast<std::size_t>(m.a), G::f);
  w.insert(w.end(), static_cast<std::size_t>(m.b < 0 ? -m.b : m.b), m.b < 0 ? G::kp : G::k);
  w.insert(w.end(), static_cast<std::size_t>(m.c), G::e);
  return w;
}

HElement pbw_to_h(const PBWElement& x) {
  HElement out;
  for (const auto& [m, c] : x) out.add(pbw_word(m), c);
  return out;
}

PBWElement pbw_mul(const PBWElement& x, const PBWElement& y) {
  return pbw_normalize(h_mul(pbw_to_h(x), pbw_to_h(y)));
}

PBWTensor pbw_normalize_tensor(const HTensor& x) {
  PBWTensor out;
  for (const auto& [key, c] : x.sum()) {
    // Expand the product of the factor normal forms.
    std::vector<std::pair<std::vector<PBWMonomial>, Scalar>> partial{{{}, c}};
    for (const HWord& w : key) {
      const PBWElement nf = pbw_normalize(HElement(w));
      std::vector<std::pair<std::vector<PBWMonomial>, Scalar>> next;
      for (const auto& [ms, d] : partial)
        for (const auto& [m, e] : nf) {
          auto grown = ms;
          grown.push_back(m);
          next.emplace_back(std::move(grown), d * e);
        }
      partial = std::move(next);
    }
    for (auto& [ms, d] : partial) out.add(std::move(ms), d);
  }
  return out;
}

}  // namespace polecat
