#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opquant/errors.hpp"
#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"
#include "opquant/special_numbers.hpp"

namespace opquant {

enum class DerivativeKind { FirstType, FirstTypeWeylMod, FirstTypeSymMod, SecondType };

inline bool is_first_type(DerivativeKind k) { return k != DerivativeKind::SecondType; }

inline std::string kind_name(DerivativeKind k) {
  switch (k) {
    case DerivativeKind::FirstType: return "first";
    case DerivativeKind::FirstTypeWeylMod: return "weyl-mod";
    case DerivativeKind::FirstTypeSymMod: return "sym-mod";
    case DerivativeKind::SecondType: break;
  }
  return "second";
}

namespace detail {

using OccurrenceWeight = std::function<Rational(int count, int occurrence)>;

// Cyclic quotient: every occurrence r of the variable contributes
// (letters after r) * (letters before r), scaled by weight(count, l).
inline Expression cyclic_quotient(const Expression& e, Letter wrt, const OccurrenceWeight& weight) {
  Expression out;
  for (const auto& [w, c] : e.terms()) {
    if (!w.all_positive()) throw NegativeExponentUnsupported("first-type quotient is only defined on positive words");
    const auto letters = w.unit_letters();
    int count = 0;
    for (Letter l : letters) count += (l == wrt);
    int occurrence = 0;
    for (std::size_t r = 0; r < letters.size(); ++r) {
      if (letters[r] != wrt) continue;
      ++occurrence;
      const Rational k = weight(count, occurrence);
      if (k.is_zero()) continue;
      std::vector<Letter> rotated(letters.begin() + static_cast<std::ptrdiff_t>(r) + 1, letters.end());
      rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
      out.add_term(Word::from_letters(rotated), c * Scalar(k));
    }
  }
  return out;
}

}  // namespace detail

/// Differential quotient of the first type.
inline Expression dq1(const Expression& e, Letter wrt) {
  return detail::cyclic_quotient(e, wrt, [](int, int) { return Rational(1); });
}

/// First-type quotient reweighted towards the Weyl basis:
/// occurrence l of count gets (count / 2^{count-1}) C(count-1, l-1).
inline Expression dq1_weyl_mod(const Expression& e, Letter wrt) {
  return detail::cyclic_quotient(e, wrt, [](int count, int l) {
    mpz_class two_pow = 1;
    two_pow <<= static_cast<mp_bitcnt_t>(count - 1);
    return Rational(count) * binomial(count - 1, l - 1) / Rational(two_pow, mpz_class(1));
  });
}

/// First-type quotient keeping the first and last occurrence, each with
/// weight count/2 (a lone occurrence is both and gets 1).
inline Expression dq1_sym_mod(const Expression& e, Letter wrt) {
  return detail::cyclic_quotient(e, wrt, [](int count, int l) {
    const int hits = (l == 1 ? 1 : 0) + (l == count ? 1 : 0);
    return Rational(count * hits, 2);
  });
}

/// Differential quotient of the second type, as the formal product rule
/// X^k -> k X^{k-1} applied to each run of the variable.
inline Expression dq2(const Expression& e, Letter wrt) {
  Expression out;
  for (const auto& [w, c] : e.terms()) {
    const auto& fs = w.factors();
    for (std::size_t r = 0; r < fs.size(); ++r) {
      if (fs[r].letter != wrt) continue;
      Word d;
      for (std::size_t i = 0; i < fs.size(); ++i) d.push(i == r ? Factor{wrt, fs[i].exponent - 1} : fs[i]);
      out.add_term(d, c * Scalar(fs[r].exponent));
    }
  }
  return out;
}

inline Expression differentiate(const Expression& e, DerivativeKind kind, Letter wrt) {
  switch (kind) {
    case DerivativeKind::FirstType: return dq1(e, wrt);
    case DerivativeKind::FirstTypeWeylMod: return dq1_weyl_mod(e, wrt);
    case DerivativeKind::FirstTypeSymMod: return dq1_sym_mod(e, wrt);
    case DerivativeKind::SecondType: break;
  }
  return dq2(e, wrt);
}

/// order-fold derivative; order 0 returns e.
inline Expression diff_n(const Expression& e, Letter wrt, int order, DerivativeKind kind = DerivativeKind::SecondType) {
  if (order < 0) throw std::invalid_argument("diff_n: negative order");
  Expression out = e;
  for (int k = 0; k < order; ++k) out = differentiate(out, kind, wrt);
  return out;
}

/// Coefficient c with d^s/dX^s A_{..,index,..} = c A_{..,index-s,..}.
/// Non-negative index: index!/(index-s)!. Negative index -k:
/// Gamma(-(k-1))/Gamma(-(k-1)-s) = (-1)^s (k+s-1)!/(k-1)!.
inline Rational multiple_derivative_coefficient(int index, int order) {
  if (order < 0) throw std::invalid_argument("multiple_derivative_coefficient: negative order");
  if (index >= 0) return factorial_ratio(index, order);
  return gamma_ratio_negative(-index - 1, order);
}

/// Closed form of the s-fold p-derivative and t-fold q-derivative of a basis image.
inline Expression multiple_derivative_closed_form(const OrderingRule& rule, BasisIndex idx, int s, int t) {
  const Rational c = multiple_derivative_coefficient(idx.m, s) * multiple_derivative_coefficient(idx.n, t);
  if (c.is_zero()) return {};
  return basis_operator(rule, {idx.m - s, idx.n - t}) * Scalar(c);
}

/// d^s/dp^s d^t/dq^t with the p-derivatives applied first or last.
inline Expression mixed_partial_ordered(const Expression& e, int s, int t, bool p_first) {
  if (p_first) return diff_n(diff_n(e, Letter::P, s), Letter::Q, t);
  return diff_n(diff_n(e, Letter::Q, t), Letter::P, s);
}

/// Mixed partial of the second type; both application orders are computed
/// and must agree.
inline Expression mixed_partial(const Expression& e, int s, int t) {
  Expression a = mixed_partial_ordered(e, s, t, true);
  const Expression b = mixed_partial_ordered(e, s, t, false);
  if (a != b && !equals(a, b)) throw std::logic_error("mixed_partial: application order changed the result");
  return a;
}

}  // namespace opquant
