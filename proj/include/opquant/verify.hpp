#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opquant/calculus.hpp"
#include "opquant/commutators.hpp"
#include "opquant/eom.hpp"
#include "opquant/quantization.hpp"

namespace opquant {

/// Deliberate coefficient corruptions used to show that the suite can fail.
enum class Mutation { None, SeriesCoefficient, ClosedFormCoefficient, BasisWeight, EomDerivativeScale };

inline std::optional<Mutation> mutation_from_name(const std::string& name) {
  if (name == "none") return Mutation::None;
  if (name == "series-coefficient") return Mutation::SeriesCoefficient;
  if (name == "closed-form-coefficient") return Mutation::ClosedFormCoefficient;
  if (name == "basis-weight") return Mutation::BasisWeight;
  if (name == "eom-derivative-scale") return Mutation::EomDerivativeScale;
  return std::nullopt;
}

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::vector<SuiteResult> suites;
  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

namespace detail {

inline std::string idx_text(BasisIndex idx) { return "(" + std::to_string(idx.m) + "," + std::to_string(idx.n) + ")"; }

inline const std::vector<OrderingRule>& builtin_rules() {
  static const std::vector<OrderingRule> rules = {OrderingRule::weyl(), OrderingRule::symmetric(),
                                                  OrderingRule::born_jordan()};
  return rules;
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (!ok) result_.failures.push_back(what());
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline SuiteResult basis_suite(int k, Mutation mutation) {
  Recorder rec("basis-forms");
  for (const auto& rule : builtin_rules()) {
    for (int m = 0; m <= k; ++m) {
      for (int n = 0; n <= k; ++n) {
        const BasisIndex idx{m, n};
        auto weights = rule.weights_for(n);
        if (mutation == Mutation::BasisWeight) weights.front() += Rational(1, 2);
        const Expression qs = sandwich(Sandwich::Q, idx, weights);
        const Expression ps = basis_operator(rule, idx, Sandwich::P);
        rec.check(equals(qs, ps), [&] { return rule.name() + idx_text(idx) + ": sandwich forms differ"; });
        rec.check(equals(adjoint(qs), qs), [&] { return rule.name() + idx_text(idx) + ": not hermitian"; });
        rec.check(classical_limit(qs) == ClassicalPolynomial(Monomial{n, m}),
                  [&] { return rule.name() + idx_text(idx) + ": classical limit"; });
      }
    }
  }
  return rec.take();
}

inline SuiteResult derivative_suite(int k) {
  Recorder rec("first-type-collapse");
  const OrderingRule bj = OrderingRule::born_jordan();
  for (int m = 1; m <= k; ++m) {
    for (int n = 1; n <= k; ++n) {
      for (const auto& rule : builtin_rules()) {
        const Expression for_p = basis_operator(rule, {m, n}, Sandwich::Q);
        const Expression for_q = basis_operator(rule, {m, n}, Sandwich::P);
        const std::pair<DerivativeKind, OrderingRule> targets[] = {
            {DerivativeKind::FirstType, bj},
            {DerivativeKind::FirstTypeWeylMod, OrderingRule::weyl()},
            {DerivativeKind::FirstTypeSymMod, OrderingRule::symmetric()}};
        for (const auto& [kind, target] : targets) {
          rec.check(equals(differentiate(for_p, kind, Letter::P), basis_operator(target, {m - 1, n}) * Scalar(m)),
                    [&] { return kind_name(kind) + " d/dp " + rule.name() + idx_text({m, n}); });
          rec.check(equals(differentiate(for_q, kind, Letter::Q), basis_operator(target, {m, n - 1}) * Scalar(n)),
                    [&] { return kind_name(kind) + " d/dq " + rule.name() + idx_text({m, n}); });
        }
      }
    }
  }
  return rec.take();
}

inline SuiteResult closed_form_suite(int k, Mutation mutation) {
  Recorder rec("multiple-derivatives");
  for (const auto& rule : builtin_rules()) {
    for (int m = -k; m <= k; ++m) {
      for (int n = -k; n <= k; ++n) {
        if (m < 0 && n < 0) continue;
        const Expression a = basis_operator(rule, {m, n});
        for (int s = 0; s <= k; ++s) {
          for (int t = 0; t <= k; ++t) {
            Rational c = multiple_derivative_coefficient(m, s) * multiple_derivative_coefficient(n, t);
            if (mutation == Mutation::ClosedFormCoefficient) c += Rational(1);
            const BasisIndex target{m - s, n - t};
            const bool vanishes = c.is_zero() || (target.m < 0 && target.n < 0);
            const Expression closed = vanishes ? Expression() : basis_operator(rule, target) * Scalar(c);
            const Expression p_first = mixed_partial_ordered(a, s, t, true);
            const Expression q_first = mixed_partial_ordered(a, s, t, false);
            rec.check(equals(p_first, closed), [&] {
              return rule.name() + idx_text({m, n}) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
            });
            rec.check(p_first == q_first || equals(p_first, q_first),
                      [&] { return rule.name() + idx_text({m, n}) + ": mixed partials disagree"; });
          }
        }
      }
    }
  }
  return rec.take();
}

inline SuiteResult series_suite(int k, Mutation mutation) {
  Recorder rec("commutator-series");
  for (const auto& rule : builtin_rules()) {
    for (int m = 0; m <= k; ++m)
      for (int n = 0; m + n <= k; ++n)
        for (int r = 0; r <= k; ++r)
          for (int s = 0; r + s <= k; ++s) {
            auto terms = commutator_series(rule.tag(), {m, n}, {r, s});
            if (mutation == Mutation::SeriesCoefficient && !terms.empty()) terms.front().coefficient *= Scalar(2);
            const NormalForm brute = commutator_brute(basis_operator(rule, {m, n}), basis_operator(rule, {r, s}));
            rec.check(normal_order(expand_series(rule.tag(), terms)) == brute,
                      [&] { return rule.name() + idx_text({m, n}) + idx_text({r, s}); });
          }
  }
  return rec.take();
}

inline SuiteResult eom_suite(int k, Mutation mutation) {
  Recorder rec("equations-of-motion");
  const Scalar scale = mutation == Mutation::EomDerivativeScale ? Scalar(2) : Scalar(1);
  const auto holds = [&](const Expression& h) {
    if (mutation == Mutation::None) return check_eom(h, DerivativeKind::SecondType).passed;
    const Scalar ih = Scalar::i_hbar(1) * scale;
    return normal_order(commutator(h, Expression::q()) + dq2(h, Letter::P) * ih).is_zero() &&
           normal_order(commutator(h, Expression::p()) - dq2(h, Letter::Q) * ih).is_zero();
  };
  for (const auto& rule : builtin_rules()) {
    const ClassicalPolynomial oscillator =
        ClassicalPolynomial::p(2) * Scalar(Rational(1, 2)) + ClassicalPolynomial::q(2) * Scalar(Rational(1, 2));
    rec.check(holds(quantize(oscillator, rule)), [&] { return rule.name() + " oscillator"; });
    for (int m = -k; m <= k; ++m)
      for (int n = -k; n <= k; ++n) {
        if (m < 0 && n < 0) continue;
        rec.check(holds(basis_operator(rule, {m, n})), [&] { return rule.name() + idx_text({m, n}); });
      }
  }
  return rec.take();
}

inline SuiteResult appendix_suite(int k) {
  Recorder rec("appendix");
  for (int m = 2; m <= k + 2; ++m) rec.check(appendix_demo(m).holds, [&] { return "m=" + std::to_string(m); });
  return rec.take();
}

}  // namespace detail

/// Runs the identity suites on indices up to max_index.
inline SuiteReport run_verify_suite(int max_index, Mutation mutation = Mutation::None) {
  if (max_index < 1) throw std::invalid_argument("verify-suite: max index must be at least 1");
  SuiteReport rep;
  rep.suites.push_back(detail::basis_suite(max_index, mutation));
  rep.suites.push_back(detail::derivative_suite(max_index));
  rep.suites.push_back(detail::closed_form_suite(max_index, mutation));
  rep.suites.push_back(detail::series_suite(max_index, mutation));
  rep.suites.push_back(detail::eom_suite(max_index, mutation));
  rep.suites.push_back(detail::appendix_suite(max_index));
  return rep;
}

}  // namespace opquant
