#pragma once

// Factorials, binomials and the special sequences that appear in the
// commutator series and in multiple differentiation of negative powers.

#include <mutex>
#include <stdexcept>
#include <vector>

#include "opquant/rational.hpp"

namespace opquant {

inline Rational factorial(int k) {
  if (k < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f, mpz_class(1));
}

/// 1/k! with the reciprocal-gamma convention 1/k! = 0 for k < 0.
inline Rational factorial_reciprocal(int k) {
  if (k < 0) return Rational(0);
  return Rational(1) / factorial(k);
}

/// x (x-1) ... (x-k+1); x may be any integer. Equals x!/(x-k)! when x >= 0.
inline Rational falling_factorial(int x, int k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative length");
  mpz_class out = 1;
  for (int i = 0; i < k; ++i) out *= (x - i);
  return Rational(out, mpz_class(1));
}

/// Generalized binomial C(x, k) for integer x and k >= 0; 0 for k < 0.
inline Rational binomial(int x, int k) {
  if (k < 0) return Rational(0);
  return falling_factorial(x, k) * factorial_reciprocal(k);
}

/// x!/(x-k)! written through the reciprocal factorial; vanishes when x-k < 0.
/// Requires x >= 0.
inline Rational factorial_ratio(int x, int k) {
  if (x < 0) throw std::domain_error("factorial_ratio: negative numerator argument");
  const Rational r = factorial_reciprocal(x - k);
  if (r.is_zero()) return r;
  return factorial(x) * r;
}

/// Gamma(-n) / Gamma(-n-m) for n, m >= 0, obtained as the limit through the
/// reflection formula: (-1)^m (n+m)!/n!.
inline Rational gamma_ratio_negative(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("gamma_ratio_negative: arguments must be non-negative");
  Rational r = factorial(n + m) / factorial(n);
  return (m % 2 == 0) ? r : -r;
}

namespace detail {

// Grows a shared append-only table on demand; entries are copied out under the lock.
template <typename Fill>
Rational cached_entry(std::vector<Rational>& table, std::mutex& mu, int u, Fill fill) {
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= u) fill(table);
  return table[static_cast<std::size_t>(u)];
}

}  // namespace detail

/// Euler (secant) numbers: E_0 = 1, E_odd = 0, and
/// sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1.
inline Rational euler_number(int u) {
  if (u < 0) throw std::domain_error("euler_number: negative index");
  static std::vector<Rational> table;
  static std::mutex mu;
  return detail::cached_entry(table, mu, u, [](std::vector<Rational>& t) {
    const int next = static_cast<int>(t.size());
    if (next == 0) {
      t.emplace_back(1);
      return;
    }
    if (next % 2 == 1) {
      t.emplace_back(0);
      return;
    }
    Rational acc;
    for (int k = 0; 2 * k < next; ++k) acc += binomial(next, 2 * k) * t[static_cast<std::size_t>(2 * k)];
    t.push_back(-acc);
  });
}

/// Bernoulli numbers with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline Rational bernoulli_number(int u) {
  if (u < 0) throw std::domain_error("bernoulli_number: negative index");
  static std::vector<Rational> table;
  static std::mutex mu;
  return detail::cached_entry(table, mu, u, [](std::vector<Rational>& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) {
      t.emplace_back(1);
      return;
    }
    Rational acc;
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * t[static_cast<std::size_t>(k)];
    t.push_back(-acc / Rational(n + 1));
  });
}

/// B_u(1/2) = (2^{1-u} - 1) B_u.
inline Rational bernoulli_half(int u) {
  if (u < 0) throw std::domain_error("bernoulli_half: negative index");
  mpz_class two_pow = 1;
  two_pow <<= static_cast<mp_bitcnt_t>(u);
  const Rational factor = Rational(mpz_class(2), two_pow) - Rational(1);
  return factor * bernoulli_number(u);
}

}  // namespace opquant
