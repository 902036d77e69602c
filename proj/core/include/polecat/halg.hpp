#pragma once

// The Hopf algebra H, presented through its eight generators.
//
// A word is a product; the leftmost letter is stacked on top.  Each
// generator is a strand crossing the pole once, either under it (e, e0,
// k, kp) or over it (f, f0, l, lp), with an arrow at each of its two
// vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polecat/linear.hpp"
#include "polecat/tl.hpp"

namespace polecat {

enum class HGen : std::uint8_t { e, e0, k, kp, f, f0, l, lp };

inline constexpr HGen kAllGens[] = {HGen::e, HGen::e0, HGen::k, HGen::kp,
                                    HGen::f, HGen::f0, HGen::l, HGen::lp};

/// The strand of a generator: whether it passes over the pole and the
/// arrows at its left and right vertices.
struct GenShape {
  bool over;
  Orient left;
  Orient right;
};

GenShape gen_shape(HGen g);
HGen gen_from_shape(bool over, Orient left, Orient right);
std::string_view gen_name(HGen g);
std::optional<HGen> gen_from_name(std::string_view name);

using HWord = std::vector<HGen>;
using HElement = LinComb<HWord>;

/// Element of H^{\otimes arity}.  Multiplication is factorwise.
class HTensor {
 public:
  using Key = std::vector<HWord>;

  explicit HTensor(int arity = 1) : arity_(arity) {}
  /// 1 @ ... @ 1.
  static HTensor unit(int arity);

  int arity() const { return arity_; }
  const LinComb<Key>& sum() const { return sum_; }
  auto begin() const { return sum_.begin(); }
  auto end() const { return sum_.end(); }
  bool is_zero() const { return sum_.is_zero(); }
  void add(Key k, const Scalar& c);

  HTensor& operator+=(const HTensor& o);
  HTensor& operator-=(const HTensor& o);
  friend HTensor operator+(HTensor a, const HTensor& b) { return a += b; }
  friend HTensor operator-(HTensor a, const HTensor& b) { return a -= b; }
  friend HTensor operator*(const HTensor& a, const HTensor& b);
  friend bool operator==(const HTensor&, const HTensor&) = default;

 private:
  int arity_;
  LinComb<Key> sum_;
};

HElement h_word(std::initializer_list<HGen> letters);
HElement h_unit();

HElement h_mul(const HElement& x, const HElement& y);
HTensor h_coproduct(const HElement& x);
Scalar h_counit(const HElement& x);
HElement h_antipode(const HElement& x);
HElement h_antipode_inverse(const HElement& x);
HElement h_cartan(const HElement& x);

/// Delta^(m-1), splitting the first factor repeatedly.  m >= 1.
HTensor iterate_coproduct(const HElement& x, int m);

/// Substitutes e0, f0 -> 0, l -> k, lp -> kp.
HElement quotient_to_hprime(const HElement& x);

/// Applies f to one tensor factor of every term.
HTensor apply_to_factor(const HTensor& x, int factor, HElement (*f)(const HElement&));
/// Multiplies the factors of an arity-2 tensor: a @ b -> a b.
HElement multiply_factors(const HTensor& x);
/// Exchanges the factors of an arity-2 tensor.
HTensor swap_factors(const HTensor& x);

std::string to_string(const HWord& w);
std::string to_string(const HElement& x);
std::string to_string(const HTensor& x);

}  // namespace polecat
