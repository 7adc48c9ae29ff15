#pragma once

#include <map>
#include <optional>
#include <utility>

#include "opquant/rational.hpp"

namespace opquant {

/// Finite polynomial in hbar with complex-rational coefficients.
/// hbar is a formal indeterminate; zero coefficients are never stored.
class Scalar {
 public:
  using Terms = std::map<int, ComplexRational>;  // hbar power -> coefficient

  Scalar() = default;
  Scalar(ComplexRational c) { add(0, std::move(c)); }  // NOLINT
  Scalar(Rational r) : Scalar(ComplexRational(std::move(r))) {}  // NOLINT
  Scalar(long v) : Scalar(ComplexRational(v)) {}  // NOLINT
  Scalar(int v) : Scalar(ComplexRational(v)) {}  // NOLINT

  static Scalar monomial(int hbar_power, ComplexRational c) {
    Scalar s;
    s.add(hbar_power, std::move(c));
    return s;
  }
  static Scalar hbar(int power = 1) { return monomial(power, ComplexRational(1)); }
  static Scalar i() { return Scalar(ComplexRational::i()); }

  /// (i*hbar)^k.
  static Scalar i_hbar(int k = 1) {
    // i^k cycles through 1, i, -1, -i
    static const ComplexRational cycle[4] = {
        ComplexRational(1), ComplexRational(0, 1), ComplexRational(-1), ComplexRational(0, -1)};
    return monomial(k, cycle[k % 4]);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == ComplexRational(1); }

  /// The coefficient if this is c * hbar^k for a single k.
  std::optional<std::pair<int, ComplexRational>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  const ComplexRational* coefficient(int hbar_power) const {
    auto it = terms_.find(hbar_power);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Drops every positive power of hbar.
  Scalar at_hbar_zero() const {
    const auto* c = coefficient(0);
    return c ? Scalar(*c) : Scalar();
  }

  Scalar conj() const {
    Scalar out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
    return out;
  }

  Scalar operator-() const {
    Scalar out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add(ka + kb, ca * cb);
    return out;
  }

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  void add(int k, ComplexRational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, std::move(c));
    if (inserted) return;
    it->second += c;  // try_emplace leaves c untouched when the key exists
    if (it->second.is_zero()) terms_.erase(it);
  }

  Terms terms_;
};

}  // namespace opquant
