#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polecat/scalar.hpp"

namespace polecat {

/// Finite formal sum  sum_k c_k [k]  with no zero coefficients stored.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;

  LinComb() = default;
  LinComb(Key k, Scalar c = Scalar(1)) { add(std::move(k), c); }  // NOLINT

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(Key k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  LinComb operator-() const { return LinComb(*this) *= Scalar(-1); }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

/// "body", "-body", "c * body" or "(c) * body"; a bare coefficient when
/// body is "1".
std::string render_term(const Scalar& c, const std::string& body);
/// Joins rendered terms with " + "; "0" for none.
std::string join_terms(const std::vector<std::string>& terms);

}  // namespace polecat
