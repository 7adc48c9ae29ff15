// Quantizes H = p^2/2 + q^2/2 with each built-in rule and checks the
// quantum equations of motion with both kinds of derivative.

#include <iostream>

#include "opquant/eom.hpp"
#include "opquant/format.hpp"
#include "opquant/parser.hpp"

int main() {
  using namespace opquant;
  const ClassicalPolynomial h = parse_classical("1/2 p^2 + 1/2 q^2");
  for (const auto& rule : {OrderingRule::weyl(), OrderingRule::symmetric(), OrderingRule::born_jordan()}) {
    const Expression hq = quantize(h, rule);
    std::cout << rule.name() << ": H = " << format(hq) << '\n';
    std::cout << "  [H, q] = " << format(commutator_brute(hq, Expression::q())) << '\n';
    std::cout << "  [H, p] = " << format(commutator_brute(hq, Expression::p())) << '\n';
    std::cout << "  dH/dp  = " << format(dq2(hq, Letter::P)) << '\n';
    std::cout << "  dH/dq  = " << format(dq2(hq, Letter::Q)) << '\n';
    for (auto kind : {DerivativeKind::SecondType, DerivativeKind::FirstType}) {
      const auto rep = check_eom(hq, kind, rule.name());
      std::cout << "  " << kind_name(kind) << " type: " << (rep.passed ? "passed" : "failed") << '\n';
    }
  }
  const auto demo = appendix_demo(3);
  std::cout << "q p^3 versus its rewrite, D(first form) - D(second form):\n";
  for (const auto& [kind, d] : demo.discrepancy) std::cout << "  " << kind_name(kind) << ": " << format(d) << '\n';
}
