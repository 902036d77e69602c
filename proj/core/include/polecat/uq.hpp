#pragma once

// U_q(sl2) on generators E, F, K, K^-1 and its map phi into H'.
//
//   phi(K) = k^2,  phi(K^-1) = kp^2,
//   phi(E) = (q - q^-1)^-1 e k,  phi(F) = (q - q^-1)^-1 kp f.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polecat/halg.hpp"
#include "polecat/linear.hpp"
#include "polecat/pbw.hpp"
#include "polecat/rep.hpp"

namespace polecat {

enum class UqGen : std::uint8_t { E, F, K, Ki };

std::string_view uq_name(UqGen g);
std::optional<UqGen> uq_from_name(std::string_view name);

using UqWord = std::vector<UqGen>;
using UqElement = LinComb<UqWord>;
using UqTensor = LinComb<std::pair<UqWord, UqWord>>;

UqElement uq_mul(const UqElement& x, const UqElement& y);
UqTensor uq_coproduct(const UqElement& x);
UqElement uq_antipode(const UqElement& x);
Scalar uq_counit(const UqElement& x);

/// phi before normalization: the substituted element of H.
HElement phi_h(const UqElement& x);
PBWElement phi(const UqElement& x);
/// (phi @ phi), each factor normalized.
PBWTensor phi_tensor(const UqTensor& x);

/// One identity of the compatibility suite and its residue, which must be
/// zero.
struct Identity {
  std::string name;
  std::string anchor;
  bool holds;
  std::string residue;
};

/// Defining relations of U_q(sl2) mapped through phi, plus compatibility of
/// phi with coproduct, antipode and counit on generators.
std::vector<Identity> uq_relation_suite();

/// Every monomial of phi(x) has even total degree.
bool image_parity_check(const UqElement& x);

/// The 2-dimensional module obtained by threading one strand through
/// phi(U_q(sl2)): rho(phi(E)) != 0, -q is an eigenvalue of rho(phi(K)),
/// rho(phi(K)) rho(phi(K^-1)) = 1, and rho(phi(KE)) = -q rho(phi(E)).
std::vector<Identity> vminus_identification();

std::string to_string(const UqWord& w);
std::string to_string(const UqElement& x);

}  // namespace polecat
