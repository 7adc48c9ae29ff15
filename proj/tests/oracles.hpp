#pragma once

// Reference computations that share no code path with the library
// algorithms they check.

#include <map>
#include <random>
#include <vector>

#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"

namespace oracle {

using namespace opquant;

/// Normal order of a positive expression by rewriting the leftmost "p q"
/// pair into "q p - i hbar" one letter at a time.
inline NormalForm bubble_normal_order(const Expression& e) {
  std::map<std::vector<Letter>, Scalar> work;
  for (const auto& [w, c] : e.terms()) work[w.unit_letters()] += c;
  NormalForm out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const auto& letters = node.key();
    const Scalar c = node.mapped();
    if (c.is_zero()) continue;
    std::size_t r = 0;
    while (r + 1 < letters.size() && !(letters[r] == Letter::P && letters[r + 1] == Letter::Q)) ++r;
    if (r + 1 >= letters.size()) {
      int a = 0, b = 0;
      for (Letter l : letters) (l == Letter::Q ? a : b) += 1;
      out.add_term({a, b}, c);
      continue;
    }
    auto swapped = letters;
    std::swap(swapped[r], swapped[r + 1]);
    work[swapped] += c;
    auto shorter = letters;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(r), shorter.begin() + static_cast<std::ptrdiff_t>(r) + 2);
    work[shorter] += c * Scalar::i_hbar(1) * Scalar(-1);
  }
  return out;
}

/// Gamma(-n)/Gamma(-n-m) as the product (-n-1)(-n-2)...(-n-m).
inline Rational gamma_ratio_product(int n, int m) {
  mpz_class acc = 1;
  for (int i = 1; i <= m; ++i) acc *= (-n - i);
  return Rational(acc, mpz_class(1));
}

/// Euler numbers from the Seidel boustrophedon triangle of zigzag numbers.
inline std::vector<Rational> euler_numbers_seidel(int up_to) {
  std::vector<std::vector<mpz_class>> tri(static_cast<std::size_t>(up_to) + 1);
  tri[0] = {1};
  for (int n = 1; n <= up_to; ++n) {
    auto& row = tri[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k) - 1] + tri[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n - k)];
    }
  }
  std::vector<Rational> out;
  for (int u = 0; u <= up_to; ++u) {
    if (u % 2 == 1) {
      out.emplace_back(0);
      continue;
    }
    const mpz_class zig = tri[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)];
    out.push_back(Rational((u / 2) % 2 == 0 ? zig : mpz_class(-zig), mpz_class(1)));
  }
  return out;
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm, B_1 set to -1/2.
inline std::vector<Rational> bernoulli_akiyama_tanigawa(int up_to) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(up_to) + 1);
  for (int n = 0; n <= up_to; ++n) {
    a[static_cast<std::size_t>(n)] = Rational(1, n + 1);
    for (int j = n; j >= 1; --j) {
      a[static_cast<std::size_t>(j) - 1] =
          Rational(j) * (a[static_cast<std::size_t>(j) - 1] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  if (up_to >= 1) out[1] = Rational(-1, 2);
  return out;
}

/// B_u(1/2) by expanding B_u(x) = sum_k C(u,k) B_k x^{u-k} at x = 1/2.
inline Rational bernoulli_polynomial_at_half(int u, const std::vector<Rational>& b) {
  Rational acc;
  for (int k = 0; k <= u; ++k) {
    mpz_class pow2 = 1;
    pow2 <<= static_cast<mp_bitcnt_t>(u - k);
    Rational c(mpz_class(1), pow2);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(k));
    acc += Rational(binom, mpz_class(1)) * b[static_cast<std::size_t>(k)] * c;
  }
  return acc;
}

/// Linear coefficient of F(X + delta) - F(X) for a formal commuting delta.
/// Each factor X^k is expanded letter by letter; negative powers invert
/// (X + delta)^{|k|} through (A + delta B)^{-1} = A^{-1} - delta A^{-1} B A^{-1}.
inline Expression limit_derivative(const Expression& e, Letter wrt) {
  struct Dual {
    Expression value;
    Expression slope;
  };
  const auto mul = [](const Dual& a, const Dual& b) {
    return Dual{a.value * b.value, a.value * b.slope + a.slope * b.value};
  };
  Expression out;
  for (const auto& [w, c] : e.terms()) {
    Dual acc{Expression::identity(), Expression()};
    for (const auto& f : w.factors()) {
      if (f.letter != wrt) {
        acc = mul(acc, Dual{Expression(Word{f}), Expression()});
        continue;
      }
      const int k = f.exponent < 0 ? -f.exponent : f.exponent;
      Dual power{Expression::identity(), Expression()};
      for (int i = 0; i < k; ++i) power = mul(power, Dual{Expression(Word{{wrt, 1}}), Expression::identity()});
      if (f.exponent < 0) {
        const Expression inv(Word{{wrt, -k}});
        power = Dual{inv, -(inv * power.slope * inv)};
      }
      acc = mul(acc, power);
    }
    out += acc.slope * c;
  }
  return out;
}

// Random inputs.

inline Rational random_rational(std::mt19937& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  return Rational(num(rng), den(rng));
}

/// Normalized weights: random positive-and-negative rationals adjusted so
/// the last one closes the sum to 1.
inline std::vector<Rational> random_weights(std::mt19937& rng, int count) {
  std::vector<Rational> w;
  Rational sum;
  for (int j = 0; j < count; ++j) {
    w.push_back(random_rational(rng, 5, 7));
    sum += w.back();
  }
  w.push_back(Rational(1) - sum);
  return w;
}

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> hp(0, 2);
  Scalar s = Scalar::monomial(hp(rng), ComplexRational(random_rational(rng, 4, 3), random_rational(rng, 4, 3)));
  if (s.is_zero()) s = Scalar(1);
  return s;
}

/// Random word; when negative_letter is set, only that letter may carry
/// negative exponents so every product stays normal-orderable.
inline Word random_word(std::mt19937& rng, int max_factors, int max_exp, const Letter* negative_letter) {
  std::uniform_int_distribution<int> nf(0, max_factors), e(1, max_exp), coin(0, 1);
  Word w;
  Letter l = coin(rng) ? Letter::Q : Letter::P;
  const int count = nf(rng);
  for (int i = 0; i < count; ++i) {
    int x = e(rng);
    if (negative_letter && l == *negative_letter && coin(rng)) x = -x;
    w.push({l, x});
    l = other(l);
  }
  return w;
}

inline Expression random_expression(std::mt19937& rng, int max_terms, int max_factors, int max_exp,
                                    const Letter* negative_letter = nullptr) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  Expression e;
  const int count = nt(rng);
  for (int i = 0; i < count; ++i) e += Expression(random_word(rng, max_factors, max_exp, negative_letter), random_scalar(rng));
  return e;
}

/// Expression that never mixes negative q and negative p.
inline Expression random_single_sided(std::mt19937& rng, int max_terms, int max_factors, int max_exp) {
  std::uniform_int_distribution<int> coin(0, 1);
  const Letter neg = coin(rng) ? Letter::Q : Letter::P;
  return random_expression(rng, max_terms, max_factors, max_exp, &neg);
}

}  // namespace oracle
