#pragma once

// Normal forms in the quotient H' = H / (kernels of all threadings), with
// generators e, f, k, k^-1 = kp.  Every element is written uniquely as a
// combination of monomials f^a k^b e^c (a, c >= 0).

#include <compare>
#include <string>
#include <vector>

#include "polecat/halg.hpp"
#include "polecat/linear.hpp"

namespace polecat {

struct PBWMonomial {
  int a = 0;  // power of f
  int b = 0;  // power of k (negative: kp)
  int c = 0;  // power of e
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  int degree() const { return a + (b < 0 ? -b : b) + c; }
};

using PBWElement = LinComb<PBWMonomial>;

/// Which redex the rewriting step picks; both reach the same normal form.
enum class RedexStrategy { leftmost, rightmost };

/// Rewrites with
///   k kp -> 1, kp k -> 1, e k -> -q^-1 k e, e kp -> -q kp e,
///   k f -> -q^-1 f k, kp f -> -q f kp, e f -> f e + (q - q^-1)(k^2 - kp^2).
/// Throws PreconditionError on letters other than e, f, k, kp.
PBWElement pbw_normalize(const HElement& x, RedexStrategy strategy = RedexStrategy::leftmost);

/// One rewriting step at the redex starting at `position`; the word must
/// have a redex there.
HElement pbw_rewrite_at(const HWord& w, std::size_t position);
/// Starting positions of all redexes in w.
std::vector<std::size_t> pbw_redexes(const HWord& w);

HWord pbw_word(const PBWMonomial& m);
HElement pbw_to_h(const PBWElement& x);

PBWElement pbw_mul(const PBWElement& x, const PBWElement& y);

/// Tensor of PBW elements, each factor in normal form.
using PBWTensor = LinComb<std::vector<PBWMonomial>>;

/// Normalizes every factor of a tensor over {e, f, k, kp}.
PBWTensor pbw_normalize_tensor(const HTensor& x);

std::string to_string(const PBWMonomial& m);
std::string to_string(const PBWElement& x);
std::string to_string(const PBWTensor& x);

}  // namespace polecat
