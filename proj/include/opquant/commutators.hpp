#pragma once

#include <map>
#include <vector>

#include "opquant/errors.hpp"
#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"
#include "opquant/special_numbers.hpp"

namespace opquant {

/// a b - b a, unordered.
inline Expression commutator(const Expression& a, const Expression& b) { return a * b - b * a; }

inline NormalForm commutator_brute(const Expression& a, const Expression& b) { return normal_order(commutator(a, b)); }

struct CommutatorSeriesTerm {
  BasisIndex target;
  Scalar coefficient;

  friend bool operator==(const CommutatorSeriesTerm&, const CommutatorSeriesTerm&) = default;
};

namespace detail {

// (i hbar / 2)^k as a Scalar.
inline Scalar half_i_hbar(int k) {
  mpz_class two_pow = 1;
  two_pow <<= static_cast<mp_bitcnt_t>(k);
  return Scalar::i_hbar(k) * Scalar(Rational(mpz_class(1), two_pow));
}

inline Scalar minus_one_pow(int k) { return Scalar(k % 2 == 0 ? 1 : -1); }

}  // namespace detail

/// [X_{a}, X_{b}] for X in {T, S, B} as a finite combination of X images.
/// Every infinite sum is cut where the reciprocal factorials vanish.
inline std::vector<CommutatorSeriesTerm> commutator_series(RuleTag basis, BasisIndex a, BasisIndex b) {
  if (basis == RuleTag::Custom) throw std::invalid_argument("commutator_series: custom rules have no closed form");
  if (a.m < 0 || a.n < 0 || b.m < 0 || b.n < 0) {
    throw NegativeIndexUnsupported("commutator series are stated for non-negative indices");
  }
  const int m = a.m, n = a.n, r = b.m, s = b.n;
  const int total = m + n + r + s;
  const int j_max = (total + 1) / 2;

  std::map<BasisIndex, Scalar> acc;
  for (int j = 0; j <= j_max; ++j) {
    const int odd = 2 * j + 1;
    const Scalar outer = Scalar(2) * detail::half_i_hbar(odd) * Scalar(factorial_reciprocal(odd));
    for (int k = 0; k <= odd; ++k) {
      const Rational sign_binom = binomial(odd, k) * ((k % 2 == 0) ? Rational(1) : Rational(-1));

      if (basis == RuleTag::Weyl) {
        const Rational f = factorial_ratio(m, k) * factorial_ratio(n, odd - k) * factorial_ratio(r, odd - k) *
                           factorial_ratio(s, k);
        if (f.is_zero()) continue;
        acc[{m + r - odd, n + s - odd}] += outer * Scalar(sign_binom * f);
        continue;
      }

      for (int l = 0; 2 * l <= total; ++l) {
        const Rational fl = factorial_ratio(m, k + 2 * l) * factorial_ratio(n, odd - k + 2 * l);
        if (fl.is_zero()) continue;
        const Rational wl = basis == RuleTag::SimplestSymmetric ? factorial_reciprocal(2 * l) : factorial_reciprocal(2 * l + 1);
        for (int t = 0; 2 * t <= total; ++t) {
          const Rational ft = factorial_ratio(r, odd - k + 2 * t) * factorial_ratio(s, k + 2 * t);
          if (ft.is_zero()) continue;
          const Rational wt = basis == RuleTag::SimplestSymmetric ? factorial_reciprocal(2 * t) : factorial_reciprocal(2 * t + 1);
          const int x = m + r - odd - 2 * l - 2 * t;
          const int y = n + s - odd - 2 * l - 2 * t;
          // x, y >= 0 here because every factorial ratio above is nonzero.
          const Scalar head = outer * Scalar(sign_binom * fl * ft * wl * wt) * detail::half_i_hbar(2 * l + 2 * t);
          for (int u = 0; u <= std::min(x, y); ++u) {
            Rational fu = factorial_ratio(x, u) * factorial_ratio(y, u) * factorial_reciprocal(u);
            Scalar step;
            if (basis == RuleTag::SimplestSymmetric) {
              fu *= euler_number(u);
              step = detail::half_i_hbar(u) * detail::minus_one_pow(u);
            } else {
              fu *= bernoulli_half(u);
              step = Scalar::i_hbar(u) * detail::minus_one_pow(u);
            }
            if (fu.is_zero()) continue;
            acc[{x - u, y - u}] += head * step * Scalar(fu);
          }
        }
      }
    }
  }

  std::vector<CommutatorSeriesTerm> out;
  for (const auto& [idx, c] : acc)
    if (!c.is_zero()) out.push_back({idx, c});
  return out;
}

inline Expression expand_series(RuleTag basis, const std::vector<CommutatorSeriesTerm>& terms) {
  const OrderingRule rule = OrderingRule::builtin(basis);
  Expression out;
  for (const auto& term : terms) out += basis_operator(rule, term.target) * term.coefficient;
  return out;
}

}  // namespace opquant
