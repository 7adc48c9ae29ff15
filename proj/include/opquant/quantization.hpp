#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opquant/errors.hpp"
#include "opquant/normal_form.hpp"
#include "opquant/special_numbers.hpp"

namespace opquant {

enum class RuleTag { Weyl, SimplestSymmetric, BornJordan, Custom };

/// Which generator sandwiches the other: Q gives sum_j a_j q^j p^m q^{n-j},
/// P gives sum_j b_j p^j q^n p^{m-j}.
enum class Sandwich { Q, P };

/// Index of a basis operator: m is the power of p, n the power of q.
struct BasisIndex {
  int m = 0;
  int n = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

class OrderingRule {
 public:
  static OrderingRule weyl() { return OrderingRule(RuleTag::Weyl); }
  static OrderingRule symmetric() { return OrderingRule(RuleTag::SimplestSymmetric); }
  static OrderingRule born_jordan() { return OrderingRule(RuleTag::BornJordan); }
  static OrderingRule builtin(RuleTag tag) {
    if (tag == RuleTag::Custom) throw std::invalid_argument("builtin: custom rules need weights");
    return OrderingRule(tag);
  }

  /// Custom family with a single weight vector; weights[j] multiplies the
  /// j-th sandwich position in the given orientation.
  static OrderingRule custom(Sandwich orientation, std::vector<Rational> weights) {
    if (weights.empty()) throw WeightCountMismatch("custom rule needs at least one weight");
    Rational sum;
    for (const auto& w : weights) sum += w;
    if (!sum.is_one()) throw WeightsNotNormalized("weights sum to " + sum.str());
    OrderingRule r(RuleTag::Custom);
    r.orientation_ = orientation;
    r.weights_ = std::move(weights);
    return r;
  }

  RuleTag tag() const { return tag_; }
  bool is_builtin() const { return tag_ != RuleTag::Custom; }
  Sandwich orientation() const { return orientation_; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Display letter of the basis: T, S, B, or A for a custom family.
  char symbol() const {
    switch (tag_) {
      case RuleTag::Weyl: return 'T';
      case RuleTag::SimplestSymmetric: return 'S';
      case RuleTag::BornJordan: return 'B';
      case RuleTag::Custom: break;
    }
    return 'A';
  }

  std::string name() const {
    switch (tag_) {
      case RuleTag::Weyl: return "weyl";
      case RuleTag::SimplestSymmetric: return "sym";
      case RuleTag::BornJordan: return "bj";
      case RuleTag::Custom: break;
    }
    std::string out = orientation_ == Sandwich::Q ? "custom(q:" : "custom(p:";
    for (std::size_t j = 0; j < weights_.size(); ++j) out += (j ? " " : "") + weights_[j].str();
    return out + ")";
  }

  /// Weights for a sandwich of the given length (count = number of
  /// sandwiching factors).
  std::vector<Rational> weights_for(int count) const {
    if (count < 0) throw std::invalid_argument("weights_for: negative count");
    if (tag_ == RuleTag::Custom) {
      if (static_cast<int>(weights_.size()) != count + 1) {
        throw WeightCountMismatch("rule has " + std::to_string(weights_.size()) + " weights, index needs " +
                                  std::to_string(count + 1));
      }
      return weights_;
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (int j = 0; j <= count; ++j) {
      switch (tag_) {
        case RuleTag::Weyl: {
          mpz_class two_pow = 1;
          two_pow <<= static_cast<mp_bitcnt_t>(count);
          out.push_back(binomial(count, j) / Rational(two_pow, mpz_class(1)));
          break;
        }
        case RuleTag::SimplestSymmetric:
          if (count == 0) out.emplace_back(1);
          else out.push_back(Rational((j == 0 ? 1 : 0) + (j == count ? 1 : 0), 2));
          break;
        default:
          out.push_back(Rational(1, count + 1));
          break;
      }
    }
    return out;
  }

  friend bool operator==(const OrderingRule&, const OrderingRule&) = default;

 private:
  explicit OrderingRule(RuleTag tag) : tag_(tag) {}

  RuleTag tag_;
  Sandwich orientation_ = Sandwich::Q;
  std::vector<Rational> weights_;
};

/// The orientation basis_operator uses when none is requested.
inline Sandwich default_orientation(const OrderingRule& rule, BasisIndex idx) {
  if (!rule.is_builtin()) return rule.orientation();
  return idx.n >= 0 ? Sandwich::Q : Sandwich::P;
}

/// sum_j w_j X^j Y X^{count-j} for the given orientation, without any
/// normalization check.
inline Expression sandwich(Sandwich orientation, BasisIndex idx, const std::vector<Rational>& weights) {
  const int count = orientation == Sandwich::Q ? idx.n : idx.m;
  if (count < 0) {
    throw OrientationUnavailable(std::string(orientation == Sandwich::Q ? "q" : "p") +
                                 "-sandwich needs a non-negative power, got " + std::to_string(count));
  }
  if (static_cast<int>(weights.size()) != count + 1) {
    throw WeightCountMismatch(std::to_string(weights.size()) + " weights for a sandwich of " + std::to_string(count));
  }
  const Letter outer = orientation == Sandwich::Q ? Letter::Q : Letter::P;
  const Word middle = orientation == Sandwich::Q ? Word::p(idx.m) : Word::q(idx.n);
  Expression out;
  for (int j = 0; j <= count; ++j) {
    out.add_term(Word{{outer, j}} * middle * Word{{outer, count - j}}, Scalar(weights[static_cast<std::size_t>(j)]));
  }
  return out;
}

/// Basis operator in an explicit sandwich orientation.
inline Expression basis_operator(const OrderingRule& rule, BasisIndex idx, Sandwich orientation) {
  if (idx.m < 0 && idx.n < 0) {
    throw BothIndicesNegative("index (" + std::to_string(idx.m) + "," + std::to_string(idx.n) + ")");
  }
  if (!rule.is_builtin() && orientation != rule.orientation()) {
    throw OrientationUnavailable("custom rule " + rule.name() + " only defines one sandwich orientation");
  }
  const int count = orientation == Sandwich::Q ? idx.n : idx.m;
  if (count < 0) return sandwich(orientation, idx, {});
  return sandwich(orientation, idx, rule.weights_for(count));
}

/// Basis operator: q-sandwich form when n >= 0, otherwise the p-sandwich
/// form; custom rules always use their own orientation.
inline Expression basis_operator(const OrderingRule& rule, BasisIndex idx) {
  return basis_operator(rule, idx, default_orientation(rule, idx));
}

namespace detail {

inline Expression quantize_with(const ClassicalPolynomial& f, const OrderingRule& rule, const Sandwich* orientation) {
  Expression out;
  for (const auto& [mono, c] : f.terms()) {
    const BasisIndex idx{mono.p, mono.q};
    out += (orientation ? basis_operator(rule, idx, *orientation) : basis_operator(rule, idx)) * c;
  }
  return out;
}

}  // namespace detail

/// Linear map p^m q^n -> basis_operator(rule, (m, n)).
inline Expression quantize(const ClassicalPolynomial& f, const OrderingRule& rule) {
  return detail::quantize_with(f, rule, nullptr);
}

inline Expression quantize(const ClassicalPolynomial& f, const OrderingRule& rule, Sandwich orientation) {
  return detail::quantize_with(f, rule, &orientation);
}

namespace detail {

// Elimination order: larger |q|+|p| first, then larger q exponent.
inline bool eliminates_before(const Monomial& a, const Monomial& b) {
  const int da = std::abs(a.q) + std::abs(a.p), db = std::abs(b.q) + std::abs(b.p);
  if (da != db) return da > db;
  return a.q > b.q;
}

}  // namespace detail

/// Coefficients c with sum c_idx * basis_operator(rule, idx) equal to nf.
inline std::map<BasisIndex, Scalar> express_in_basis(const NormalForm& nf, const OrderingRule& rule) {
  if (!rule.is_builtin()) throw BasisEliminationFailed("only the built-in rules define a full basis");
  std::map<BasisIndex, Scalar> out;
  NormalForm rest = nf;
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (detail::eliminates_before(it->first, top->first)) top = it;
    const Monomial lead = top->first;
    const Scalar c = top->second;
    const BasisIndex idx{lead.p, lead.q};
    const NormalForm image = normal_order(basis_operator(rule, idx));
    const auto lead_it = image.terms().find(lead);
    if (lead_it == image.terms().end() || !lead_it->second.is_one()) {
      throw BasisEliminationFailed("basis image of (" + std::to_string(idx.m) + "," + std::to_string(idx.n) +
                                   ") does not lead with its own monomial");
    }
    rest -= image * c;
    if (rest.terms().count(lead)) throw BasisEliminationFailed("leading term did not cancel");
    out[idx] += c;
    if (out[idx].is_zero()) out.erase(idx);
    if (++guard > 100000) throw BasisEliminationFailed("elimination did not terminate");
  }
  return out;
}

inline Expression expand_basis(const std::map<BasisIndex, Scalar>& coeffs, const OrderingRule& rule) {
  Expression out;
  for (const auto& [idx, c] : coeffs) out += basis_operator(rule, idx) * c;
  return out;
}

}  // namespace opquant
