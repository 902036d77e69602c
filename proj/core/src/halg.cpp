#include "polecat/halg.hpp"

#include <array>

#include "polecat/error.hpp"

namespace polecat {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"e", "e0", "k", "kp", "f", "f0", "l", "lp"};

std::size_t idx(HGen g) { return static_cast<std::size_t>(g); }

using G = HGen;

struct SplitTerm {
  HGen left;
  HGen right;
};

// Delta(g) = a @ b + c @ d.  The under-pole rows are the published table;
// the over-pole rows are its crossing-switched images.
constexpr std::array<std::array<SplitTerm, 2>, 8> kCoproduct = {{
    {{{G::e, G::k}, {G::kp, G::e}}},     // e
    {{{G::e0, G::kp}, {G::k, G::e0}}},   // e0
    {{{G::k, G::k}, {G::e0, G::e}}},     // k
    {{{G::kp, G::kp}, {G::e, G::e0}}},   // kp
    {{{G::f, G::l}, {G::lp, G::f}}},     // f
    {{{G::f0, G::lp}, {G::l, G::f0}}},   // f0
    {{{G::l, G::l}, {G::f0, G::f}}},     // l
    {{{G::lp, G::lp}, {G::f, G::f0}}},   // lp
}};

constexpr std::array<HGen, 8> kCartan = {G::f, G::f0, G::lp, G::l, G::e, G::e0, G::kp, G::k};

// S(g) = q^power * image.
struct AntipodeEntry {
  HGen image;
  int q_power;
};
constexpr std::array<AntipodeEntry, 8> kAntipode = {{
    {G::e, 1}, {G::e0, -1}, {G::kp, 0}, {G::k, 0},
    {G::f, -1}, {G::f0, 1}, {G::lp, 0}, {G::l, 0},
}};

Scalar q_pow(int k) { return Scalar(LaurentPoly(GaussRat(1), 4 * k)); }

HElement anti_map(const HElement& x, int sign) {
  HElement out;
  for (const auto& [w, c] : x) {
    HWord image(w.rbegin(), w.rend());
    Scalar coeff = c;
    for (HGen& g : image) {
      const AntipodeEntry& a = kAntipode[idx(g)];
      coeff *= q_pow(sign * a.q_power);
      g = a.image;
    }
    out.add(std::move(image), coeff);
  }
  return out;
}

}  // namespace

GenShape gen_shape(HGen g) {
  using O = Orient;
  switch (g) {
    case G::e: return {false, O::in, O::in};
    case G::e0: return {false, O::out, O::out};
    case G::k: return {false, O::out, O::in};
    case G::kp: return {false, O::in, O::out};
    case G::f: return {true, O::out, O::out};
    case G::f0: return {true, O::in, O::in};
    case G::l: return {true, O::in, O::out};
    case G::lp: return {true, O::out, O::in};
  }
  throw StructuralError("unknown generator");
}

HGen gen_from_shape(bool over, Orient left, Orient right) {
  for (HGen g : kAllGens) {
    const GenShape s = gen_shape(g);
    if (s.over == over && s.left == left && s.right == right) return g;
  }
  throw StructuralError("no generator with this shape");
}

std::string_view gen_name(HGen g) { return kNames[idx(g)]; }

std::optional<HGen> gen_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<HGen>(i);
  return std::nullopt;
}

HTensor HTensor::unit(int arity) {
  HTensor t(arity);
  t.add(Key(static_cast<std::size_t>(arity)), Scalar(1));
  return t;
}

void HTensor::add(Key k, const Scalar& c) {
  if (static_cast<int>(k.size()) != arity_) throw StructuralError("tensor arity mismatch");
  sum_.add(std::move(k), c);
}

HTensor& HTensor::operator+=(const HTensor& o) {
  if (o.arity_ != arity_) throw StructuralError("tensor arity mismatch");
  sum_ += o.sum_;
  return *this;
}

HTensor& HTensor::operator-=(const HTensor& o) {
  if (o.arity_ != arity_) throw StructuralError("tensor arity mismatch");
  sum_ -= o.sum_;
  return *this;
}

HTensor operator*(const HTensor& a, const HTensor& b) {
  if (a.arity_ != b.arity_) throw StructuralError("tensor arity mismatch");
  HTensor out(a.arity_);
  for (const auto& [ka, ca] : a.sum_)
    for (const auto& [kb, cb] : b.sum_) {
      HTensor::Key k = ka;
      for (std::size_t j = 0; j < k.size(); ++j) k[j].insert(k[j].end(), kb[j].begin(), kb[j].end());
      out.sum_.add(std::move(k), ca * cb);
    }
  return out;
}

HElement h_word(std::initializer_list<HGen> letters) { return HElement(HWord(letters)); }
HElement h_unit() { return HElement(HWord{}); }

HElement h_mul(const HElement& x, const HElement& y) {
  HElement out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      HWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add(std::move(w), cx * cy);
    }
  return out;
}

namespace {

HTensor letter_coproduct(HGen g) {
  HTensor t(2);
  for (const SplitTerm& s : kCoproduct[idx(g)]) t.add({{s.left}, {s.right}}, Scalar(1));
  return t;
}

HTensor word_coproduct(const HWord& w) {
  HTensor out = HTensor::unit(2);
  for (HGen g : w) out = out * letter_coproduct(g);
  return out;
}

}  // namespace

HTensor h_coproduct(const HElement& x) {
  HTensor out(2);
  for (const auto& [w, c] : x) {
    for (const auto& [k, d] : word_coproduct(w)) out.add(k, c * d);
  }
  return out;
}

Scalar h_counit(const HElement& x) {
  Scalar out;
  for (const auto& [w, c] : x) {
    bool zero = false;
    for (HGen g : w) zero = zero || g == G::e || g == G::e0 || g == G::f || g == G::f0;
    if (!zero) out += c;
  }
  return out;
}

HElement h_antipode(const HElement& x) { return anti_map(x, 1); }
HElement h_antipode_inverse(const HElement& x) { return anti_map(x, -1); }

HElement h_cartan(const HElement& x) {
  HElement out;
  for (const auto& [w, c] : x) {
    HWord image = w;
    for (HGen& g : image) g = kCartan[idx(g)];
    out.add(std::move(image), c);
  }
  return out;
}

HTensor iterate_coproduct(const HElement& x, int m) {
  if (m < 1) throw PreconditionError("iterate_coproduct: arity must be at least 1");
  HTensor out(1);
  for (const auto& [w, c] : x) out.add({w}, c);
  for (int arity = 1; arity < m; ++arity) {
    HTensor next(arity + 1);
    for (const auto& [key, c] : out.sum()) {
      for (const auto& [split, d] : word_coproduct(key[0])) {
        HTensor::Key k{split[0], split[1]};
        k.insert(k.end(), key.begin() + 1, key.end());
        next.add(std::move(k), c * d);
      }
    }
    out = std::move(next);
  }
  return out;
}

HElement quotient_to_hprime(const HElement& x) {
  HElement out;
  for (const auto& [w, c] : x) {
    HWord image;
    bool zero = false;
    for (HGen g : w) {
      switch (g) {
        case G::e0:
        case G::f0: zero = true; break;
        case G::l: image.push_back(G::k); break;
        case G::lp: image.push_back(G::kp); break;
        default: image.push_back(g); break;
      }
    }
    if (!zero) out.add(std::move(image), c);
  }
  return out;
}

HTensor apply_to_factor(const HTensor& x, int factor, HElement (*f)(const HElement&)) {
  if (factor < 0 || factor >= x.arity()) throw PreconditionError("tensor factor out of range");
  HTensor out(x.arity());
  const auto j = static_cast<std::size_t>(factor);
  for (const auto& [key, c] : x.sum()) {
    for (const auto& [w, d] : f(HElement(key[j]))) {
      HTensor::Key k = key;
      k[j] = w;
      out.add(std::move(k), c * d);
    }
  }
  return out;
}

HElement multiply_factors(const HTensor& x) {
  if (x.arity() != 2) throw PreconditionError("multiply_factors needs arity 2");
  HElement out;
  for (const auto& [key, c] : x.sum()) {
    HWord w = key[0];
    w.insert(w.end(), key[1].begin(), key[1].end());
    out.add(std::move(w), c);
  }
  return out;
}

HTensor swap_factors(const HTensor& x) {
  if (x.arity() != 2) throw PreconditionError("swap_factors needs arity 2");
  HTensor out(2);
  for (const auto& [key, c] : x.sum()) out.add({key[1], key[0]}, c);
  return out;
}

}  // namespace polecat
