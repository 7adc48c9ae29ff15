#pragma once

#include <map>
#include <utility>

#include "opquant/scalar.hpp"
#include "opquant/word.hpp"

namespace opquant {

/// Finite linear combination of words over Scalar. Multiplication is free
/// concatenation: no commutation relation is applied here (see normal_order).
class Expression {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  Expression() = default;
  Expression(Scalar c) { add_term(Word{}, std::move(c)); }  // NOLINT
  Expression(int c) : Expression(Scalar(c)) {}  // NOLINT
  Expression(Word w, Scalar c = Scalar(1)) { add_term(std::move(w), std::move(c)); }  // NOLINT

  static Expression q(int e = 1) { return Expression(Word::q(e)); }
  static Expression p(int e = 1) { return Expression(Word::p(e)); }
  static Expression identity() { return Expression(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool all_positive() const {
    for (const auto& [w, c] : terms_)
      if (!w.all_positive()) return false;
    return true;
  }

  Expression operator-() const {
    Expression out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  Expression& operator+=(const Expression& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Expression& operator-=(const Expression& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Expression& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(Expression a, const Scalar& s) { return a *= s; }
  friend Expression operator*(const Scalar& s, Expression a) { return a *= s; }
  friend Expression operator*(const Expression& a, const Expression& b) {
    Expression out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
  }

  /// Structural equality (same words, same coefficients). Operator equality
  /// modulo [q, p] = i hbar is opquant::equals.
  friend bool operator==(const Expression&, const Expression&) = default;

 private:
  Terms terms_;
};

/// Free product; alias of operator* kept for call sites that read better named.
inline Expression multiply(const Expression& a, const Expression& b) { return a * b; }

inline Expression power(const Expression& base, int n) {
  Expression out = Expression::identity();
  for (int k = 0; k < n; ++k) out = out * base;
  return out;
}

/// Formal adjoint: q and p are self-adjoint, words reverse, scalars conjugate.
inline Expression adjoint(const Expression& e) {
  Expression out;
  for (const auto& [w, c] : e.terms()) out.add_term(w.reversed(), c.conj());
  return out;
}

}  // namespace opquant
