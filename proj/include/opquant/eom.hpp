#pragma once

#include <map>
#include <string>

#include "opquant/calculus.hpp"
#include "opquant/commutators.hpp"
#include "opquant/errors.hpp"

namespace opquant {

struct EomReport {
  Expression hamiltonian;
  std::string rule;
  DerivativeKind derivative_kind = DerivativeKind::SecondType;
  NormalForm residual_q;  // [H, q] + i hbar dH/dp
  NormalForm residual_p;  // [H, p] - i hbar dH/dq
  bool passed = false;
};

/// Checks [H, q] = -i hbar dH/dp and [H, p] = i hbar dH/dq.
/// h_for_p is differentiated with respect to p, h_for_q with respect to q.
/// The first-type quotients depend on how H is written, so the two forms
/// may differ as words but must be the same operator.
inline EomReport check_eom(const Expression& h_for_p, const Expression& h_for_q, DerivativeKind kind,
                           std::string rule = {}) {
  if (h_for_p != h_for_q && !equals(h_for_p, h_for_q)) {
    throw FormsNotEqual("the two written forms of H are different operators");
  }
  EomReport rep;
  rep.hamiltonian = h_for_p;
  rep.rule = std::move(rule);
  rep.derivative_kind = kind;
  const Scalar ih = Scalar::i_hbar(1);
  rep.residual_q =
      normal_order(commutator(h_for_p, Expression::q()) + differentiate(h_for_p, kind, Letter::P) * ih);
  rep.residual_p =
      normal_order(commutator(h_for_q, Expression::p()) - differentiate(h_for_q, kind, Letter::Q) * ih);
  rep.passed = rep.residual_q.is_zero() && rep.residual_p.is_zero();
  return rep;
}

inline EomReport check_eom(const Expression& h, DerivativeKind kind, std::string rule = {}) {
  return check_eom(h, h, kind, std::move(rule));
}

struct AppendixReport {
  int m = 0;
  NormalForm expected;  // -i hbar m (m-1) p^{m-2}
  std::map<DerivativeKind, NormalForm> discrepancy;
  bool holds = false;  // first-type kinds give expected, second type gives zero
};

/// Differentiates q p^m and its rewrite p^m q + m i hbar p^{m-1} with respect
/// to p under every derivative kind and records D(first) - D(second).
inline AppendixReport appendix_demo(int m) {
  if (m < 2) throw std::invalid_argument("appendix_demo: m must be at least 2");
  const Expression normal = Expression(Word{{Letter::Q, 1}, {Letter::P, m}});
  const Expression rewritten =
      Expression(Word{{Letter::P, m}, {Letter::Q, 1}}) + Expression(Word::p(m - 1), Scalar::i_hbar(1) * Scalar(m));
  AppendixReport rep;
  rep.m = m;
  rep.expected.add_term({0, m - 2}, Scalar::i_hbar(1) * Scalar(-m * (m - 1)));
  rep.holds = true;
  for (auto kind : {DerivativeKind::FirstType, DerivativeKind::FirstTypeWeylMod, DerivativeKind::FirstTypeSymMod,
                    DerivativeKind::SecondType}) {
    NormalForm d = normal_order(differentiate(normal, kind, Letter::P) - differentiate(rewritten, kind, Letter::P));
    const bool ok = is_first_type(kind) ? d == rep.expected : d.is_zero();
    rep.holds = rep.holds && ok;
    rep.discrepancy.emplace(kind, std::move(d));
  }
  return rep;
}

}  // namespace opquant
