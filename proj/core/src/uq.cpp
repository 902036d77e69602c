#include "polecat/uq.hpp"

#include <array>

#include "polecat/error.hpp"

namespace polecat {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"E", "F", "K", "Ki"};

UqElement uq_letter(UqGen g) { return UqElement(UqWord{g}); }

UqTensor letter_coproduct(UqGen g) {
  UqTensor t;
  switch (g) {
    case UqGen::E:
      t.add({{}, {UqGen::E}}, Scalar(1));
      t.add({{UqGen::E}, {UqGen::K}}, Scalar(1));
      break;
    case UqGen::F:
      t.add({{UqGen::Ki}, {UqGen::F}}, Scalar(1));
      t.add({{UqGen::F}, {}}, Scalar(1));
      break;
    case UqGen::K:
    case UqGen::Ki:
      t.add({{g}, {g}}, Scalar(1));
      break;
  }
  return t;
}

UqTensor tensor_mul(const UqTensor& a, const UqTensor& b) {
  UqTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto k = ka;
      k.first.insert(k.first.end(), kb.first.begin(), kb.first.end());
      k.second.insert(k.second.end(), kb.second.begin(), kb.second.end());
      out.add(std::move(k), ca * cb);
    }
  return out;
}

UqElement letter_antipode(UqGen g) {
  switch (g) {
    case UqGen::E: return UqElement(UqWord{UqGen::E, UqGen::Ki}, Scalar(-1));
    case UqGen::F: return UqElement(UqWord{UqGen::K, UqGen::F}, Scalar(-1));
    case UqGen::K: return uq_letter(UqGen::Ki);
    case UqGen::Ki: return uq_letter(UqGen::K);
  }
  throw StructuralError("unknown generator");
}

HElement letter_image(UqGen g) {
  const Scalar c = Scalar::q_minus_q_inv().inverse();
  switch (g) {
    case UqGen::E: return HElement(HWord{HGen::e, HGen::k}, c);
    case UqGen::F: return HElement(HWord{HGen::kp, HGen::f}, c);
    case UqGen::K: return HElement(HWord{HGen::k, HGen::k});
    case UqGen::Ki: return HElement(HWord{HGen::kp, HGen::kp});
  }
  throw StructuralError("unknown generator");
}

std::string matrix_text(const SparseMat& m) {
  std::string out = "[";
  for (const auto& [key, v] : m.entries()) {
    if (out.size() > 1) out += ", ";
    out += "[" + std::to_string(key.first) + "," + std::to_string(key.second) + "," +
           v.to_string() + "]";
  }
  return out + "]";
}

UqElement uq(std::initializer_list<UqGen> letters, const Scalar& c = Scalar(1)) {
  return UqElement(UqWord(letters), c);
}

Identity residue_check(std::string name, std::string anchor, const PBWElement& residue) {
  return {std::move(name), std::move(anchor), residue.is_zero(), to_string(residue)};
}

Identity residue_check(std::string name, std::string anchor, const PBWTensor& residue) {
  return {std::move(name), std::move(anchor), residue.is_zero(), to_string(residue)};
}

HElement to_hprime(const HElement& x) { return quotient_to_hprime(x); }

}  // namespace

std::string_view uq_name(UqGen g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<UqGen> uq_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<UqGen>(i);
  return std::nullopt;
}

UqElement uq_mul(const UqElement& x, const UqElement& y) {
  UqElement out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      UqWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add(std::move(w), cx * cy);
    }
  return out;
}

UqTensor uq_coproduct(const UqElement& x) {
  UqTensor out;
  for (const auto& [w, c] : x) {
    UqTensor t;
    t.add({{}, {}}, c);
    for (UqGen g : w) t = tensor_mul(t, letter_coproduct(g));
    out += t;
  }
  return out;
}

UqElement uq_antipode(const UqElement& x) {
  UqElement out;
  for (const auto& [w, c] : x) {
    UqElement t(UqWord{}, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = uq_mul(t, letter_antipode(*it));
    out += t;
  }
  return out;
}

Scalar uq_counit(const UqElement& x) {
  Scalar out;
  for (const auto& [w, c] : x) {
    bool zero = false;
    for (UqGen g : w) zero = zero || g == UqGen::E || g == UqGen::F;
    if (!zero) out += c;
  }
  return out;
}

HElement phi_h(const UqElement& x) {
  HElement out;
  for (const auto& [w, c] : x) {
    HElement t(HWord{}, c);
    for (UqGen g : w) t = h_mul(t, letter_image(g));
    out += t;
  }
  return out;
}

PBWElement phi(const UqElement& x) { return pbw_normalize(phi_h(x)); }

PBWTensor phi_tensor(const UqTensor& x) {
  PBWTensor out;
  for (const auto& [key, c] : x) {
    const PBWElement a = phi(UqElement(key.first));
    const PBWElement b = phi(UqElement(key.second));
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) out.add({ma, mb}, c * ca * cb);
  }
  return out;
}

std::vector<Identity> uq_relation_suite() {
  using U = UqGen;
  const Scalar q = Scalar::q();
  std::vector<Identity> out;
  auto relation = [&](std::string name, std::string anchor, const UqElement& lhs,
                      const UqElement& rhs) {
    out.push_back(residue_check(std::move(name), std::move(anchor), phi(lhs - rhs)));
  };
  relation("K Ki = 1", "K K^-1 = 1", uq({U::K, U::Ki}), uq({}));
  relation("Ki K = 1", "K^-1 K = 1", uq({U::Ki, U::K}), uq({}));
  relation("E K = q^-2 K E", "EK = q^-2 KE", uq({U::E, U::K}), uq({U::K, U::E}, q.pow(-2)));
  relation("F K = q^2 K F", "FK = q^2 KF", uq({U::F, U::K}), uq({U::K, U::F}, q.pow(2)));
  relation("E F - F E = (K - Ki)/(q - q^-1)", "EF - FE = (K - K^-1)/(q - q^-1)",
           uq({U::E, U::F}) - uq({U::F, U::E}),
           (uq({U::K}) - uq({U::Ki})) * Scalar::q_minus_q_inv().inverse());

  for (U g : {U::E, U::F, U::K, U::Ki}) {
    const std::string name(uq_name(g));
    const UqElement x = uq_letter(g);
    const HTensor split = apply_to_factor(apply_to_factor(h_coproduct(phi_h(x)), 0, to_hprime), 1,
                                          to_hprime);
    out.push_back(residue_check("Delta(phi(" + name + ")) = (phi @ phi)(Delta(" + name + "))",
                                "phi is a morphism of coalgebras",
                                pbw_normalize_tensor(split) - phi_tensor(uq_coproduct(x))));
    out.push_back(residue_check(
        "S(phi(" + name + ")) = phi(S(" + name + "))", "phi commutes with the antipode",
        pbw_normalize(quotient_to_hprime(h_antipode(phi_h(x)))) - phi(uq_antipode(x))));
    const Scalar de = h_counit(phi_h(x)) - uq_counit(x);
    out.push_back({"eps(phi(" + name + ")) = eps(" + name + ")", "phi commutes with the counit",
                   de.is_zero(), de.to_string()});
  }
  return out;
}

bool image_parity_check(const UqElement& x) {
  for (const auto& [m, c] : phi(x))
    if (m.degree() % 2 != 0) return false;
  return true;
}

std::vector<Identity> vminus_identification() {
  using U = UqGen;
  auto rho1 = [](const UqElement& x) { return rho_n(phi_h(x), 1); };
  const SparseMat e = rho1(uq({U::E}));
  const SparseMat k = rho1(uq({U::K}));
  const SparseMat ki = rho1(uq({U::Ki}));
  const SparseMat ke = rho1(uq({U::K, U::E}));
  const Scalar q = Scalar::q();

  std::vector<Identity> out;
  out.push_back({"rho(phi(E)) != 0", "rho o phi(E) != 0", !e.is_zero(), matrix_text(e)});

  const SparseMat shifted = k + SparseMat::identity(1) * q;
  const Scalar det = shifted.at(0, 0) * shifted.at(1, 1) - shifted.at(0, 1) * shifted.at(1, 0);
  out.push_back({"det(rho(phi(K)) + q) = 0", "K has an eigenvalue -q", det.is_zero(),
                 "rho(phi(K)) = " + matrix_text(k) + ", det = " + det.to_string()});

  const SparseMat prod = k * ki;
  out.push_back({"rho(phi(K)) rho(phi(Ki)) = 1", "phi(K) phi(K^-1) = 1",
                 prod == SparseMat::identity(1), matrix_text(prod)});

  const SparseMat diff = ke - e * (-q);
  out.push_back({"rho(phi(K E)) = -q rho(phi(E))", "rho o phi(KE) = (-q) rho o phi(E)",
                 diff.is_zero(), matrix_text(diff)});
  return out;
}

}  // namespace polecat
