#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "opquant/errors.hpp"
#include "opquant/expression.hpp"
#include "opquant/special_numbers.hpp"

namespace opquant {

/// Exponent pair of a normally ordered monomial q^q p^p, also used as the
/// exponent pair of a commutative monomial.
struct Monomial {
  int q = 0;
  int p = 0;

  Word word() const { return Word{{Letter::Q, q}, {Letter::P, p}}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Same order as WordOrder applied to q^a p^b.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return WordOrder{}(a.word(), b.word()); }
};

/// Canonical representative: sum of c * q^a p^b with every q to the left of
/// every p. No key has both exponents negative.
class NormalForm {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  NormalForm() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Expression to_expression() const {
    Expression out;
    for (const auto& [m, c] : terms_) out.add_term(m.word(), c);
    return out;
  }

  NormalForm operator-() const {
    NormalForm out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  NormalForm& operator+=(const NormalForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NormalForm& operator-=(const NormalForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const Scalar& s) {
    if (s.is_zero()) return {};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  Terms terms_;
};

namespace detail {

// Right-multiplies a partially ordered sum by q^c, moving q^c through each
// trailing p^b with p^b q^c = sum_k C(b,k) C(c,k) k! (-i hbar)^k q^{c-k} p^{b-k}.
// The sum is finite whenever b >= 0 or c >= 0.
inline NormalForm times_q_power(const NormalForm& acc, int c) {
  NormalForm out;
  for (const auto& [m, s] : acc.terms()) {
    if (m.p == 0) {
      out.add_term({m.q + c, 0}, s);
      continue;
    }
    if (m.p < 0 && c < 0) {
      throw MixedNegativePowers("p^" + std::to_string(m.p) + " q^" + std::to_string(c) +
                                " has no finite normal form");
    }
    for (int k = 0;; ++k) {
      const Rational weight = falling_factorial(m.p, k) * falling_factorial(c, k) * factorial_reciprocal(k);
      if (weight.is_zero()) break;
      out.add_term({m.q + c - k, m.p - k}, s * Scalar::i_hbar(k) * Scalar((k % 2 == 0) ? 1 : -1) * Scalar(weight));
    }
  }
  return out;
}

inline NormalForm times_p_power(const NormalForm& acc, int c) {
  NormalForm out;
  for (const auto& [m, s] : acc.terms()) out.add_term({m.q, m.p + c}, s);
  return out;
}

}  // namespace detail

/// Rewrites an expression into q-left / p-right order using the closed-form
/// reordering relations for arbitrary integer exponents.
inline NormalForm normal_order(const Expression& e) {
  NormalForm result;
  for (const auto& [w, c] : e.terms()) {
    NormalForm acc;
    acc.add_term({0, 0}, c);
    for (const auto& f : w.factors()) {
      acc = f.letter == Letter::Q ? detail::times_q_power(acc, f.exponent) : detail::times_p_power(acc, f.exponent);
    }
    result += acc;
  }
  for (const auto& [m, c] : result.terms()) {
    if (m.q < 0 && m.p < 0) {
      throw MixedNegativePowers("result contains q^" + std::to_string(m.q) + " p^" + std::to_string(m.p));
    }
  }
  return result;
}

inline NormalForm normal_order(const NormalForm& nf) { return normal_order(nf.to_expression()); }

/// Operator equality in the Weyl algebra.
inline bool equals(const Expression& a, const Expression& b) { return normal_order(a - b).is_zero(); }

/// Commutative polynomial (Laurent in each variable separately) in q and p.
class ClassicalPolynomial {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  ClassicalPolynomial() = default;
  ClassicalPolynomial(Scalar c) { add_term({0, 0}, std::move(c)); }  // NOLINT
  ClassicalPolynomial(Monomial m, Scalar c = Scalar(1)) { add_term(m, std::move(c)); }  // NOLINT

  static ClassicalPolynomial q(int e = 1) { return ClassicalPolynomial(Monomial{e, 0}); }
  static ClassicalPolynomial p(int e = 1) { return ClassicalPolynomial(Monomial{0, e}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ClassicalPolynomial operator-() const { return *this * Scalar(-1); }
  ClassicalPolynomial& operator+=(const ClassicalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ClassicalPolynomial& operator-=(const ClassicalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ClassicalPolynomial operator+(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a += b; }
  friend ClassicalPolynomial operator-(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a -= b; }
  friend ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    ClassicalPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.q + mb.q, ma.p + mb.p}, ca * cb);
    return out;
  }
  friend ClassicalPolynomial operator*(ClassicalPolynomial a, const Scalar& s) {
    if (s.is_zero()) return {};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const ClassicalPolynomial&, const ClassicalPolynomial&) = default;

 private:
  Terms terms_;
};

/// Sets hbar = 0 in the normal form and reads it as a commutative polynomial.
inline ClassicalPolynomial classical_limit(const Expression& e) {
  ClassicalPolynomial out;
  const NormalForm nf = normal_order(e);
  for (const auto& [m, c] : nf.terms()) out.add_term(m, c.at_hbar_zero());
  return out;
}

/// Ordinary partial derivative of a commutative polynomial.
inline ClassicalPolynomial partial(const ClassicalPolynomial& f, Letter wrt) {
  ClassicalPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int e = wrt == Letter::Q ? m.q : m.p;
    if (e == 0) continue;
    Monomial d = m;
    (wrt == Letter::Q ? d.q : d.p) -= 1;
    out.add_term(d, c * Scalar(e));
  }
  return out;
}

}  // namespace opquant
