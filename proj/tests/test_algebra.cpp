#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"
#include "oracles.hpp"

using namespace opquant;

namespace {

const Expression q = Expression::q();
const Expression p = Expression::p();
const Scalar ih = Scalar::i_hbar(1);

NormalForm nf(std::initializer_list<std::pair<Monomial, Scalar>> terms) {
  NormalForm out;
  for (const auto& [m, c] : terms) out.add_term(m, c);
  return out;
}

}  // namespace

TEST_CASE("words merge runs and drop zero exponents", "[algebra]") {
  const Word w{{Letter::Q, 2}, {Letter::Q, -1}, {Letter::P, 0}, {Letter::P, 3}};
  REQUIRE(w.factors().size() == 2);
  CHECK(w.factors()[0] == Factor{Letter::Q, 1});
  CHECK(w.factors()[1] == Factor{Letter::P, 3});
  CHECK((Word::q(1) * Word::q(-1)).is_identity());
}

TEST_CASE("multiply concatenates without reordering", "[algebra]") {
  CHECK(multiply(q, p) == Expression(Word{{Letter::Q, 1}, {Letter::P, 1}}));
  CHECK(multiply(Expression::q(2), Expression::q(-1)) == q);
  CHECK(multiply(q * p, q) == Expression(Word{{Letter::Q, 1}, {Letter::P, 1}, {Letter::Q, 1}}));
}

TEST_CASE("normal ordering of the basic reordering relations", "[algebra]") {
  CHECK(normal_order(p * q) == nf({{{1, 1}, Scalar(1)}, {{0, 0}, -ih}}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(normal_order(p * Expression::q(n)) == nf({{{n, 1}, Scalar(1)}, {{n - 1, 0}, -ih * Scalar(n)}}));
    CHECK(normal_order(q * Expression::p(n)) == nf({{{1, n}, Scalar(1)}}));
  }
  // p^{-1} q = q p^{-1} + i hbar p^{-2}; confirmed by multiplying back with p.
  const NormalForm inv = normal_order(Expression::p(-1) * q);
  CHECK(inv == nf({{{1, -1}, Scalar(1)}, {{0, -2}, ih}}));
  CHECK(normal_order(p * inv.to_expression()) == normal_order(q));
  CHECK(normal_order(inv.to_expression() * p) == nf({{{1, 0}, Scalar(1)}, {{0, -1}, ih}}));
}

TEST_CASE("mixed negative powers are rejected", "[algebra]") {
  CHECK_THROWS_AS(normal_order(Expression::p(-1) * Expression::q(-1)), MixedNegativePowers);
  CHECK_THROWS_AS(normal_order(Expression::q(-1) * Expression::p(-1)), MixedNegativePowers);
  CHECK_NOTHROW(normal_order(Expression::q(-2) * Expression::p(3) * Expression::q(-1)));
}

TEST_CASE("closed-form reordering agrees with letter-by-letter rewriting", "[algebra][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Expression e = oracle::random_expression(rng, 3, 5, 3);
    REQUIRE(normal_order(e) == oracle::bubble_normal_order(e));
  }
}

TEST_CASE("normal ordering is idempotent", "[algebra][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Expression e = oracle::random_single_sided(rng, 3, 5, 4);
    const NormalForm once = normal_order(e);
    REQUIRE(normal_order(once.to_expression()) == once);
  }
}

TEST_CASE("normal ordering is multiplicative", "[algebra][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Letter neg = trial % 2 ? Letter::Q : Letter::P;
    const Expression a = oracle::random_expression(rng, 2, 4, 3, &neg);
    const Expression b = oracle::random_expression(rng, 2, 4, 3, &neg);
    REQUIRE(normal_order(a * b) == normal_order(normal_order(a).to_expression() * normal_order(b).to_expression()));
    REQUIRE(normal_order(a + b) == normal_order(a) + normal_order(b));
  }
}

TEST_CASE("adjoint reverses words and conjugates scalars", "[algebra]") {
  CHECK(adjoint(q * p * ih) == p * q * (-ih));
  CHECK(adjoint(Expression::p(2) * Expression::q(3)) == Expression::q(3) * Expression::p(2));
  CHECK(equals(adjoint(basis_operator(OrderingRule::weyl(), {1, 1})), basis_operator(OrderingRule::weyl(), {1, 1})));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Expression e = oracle::random_expression(rng, 3, 5, 4);
    REQUIRE(adjoint(adjoint(e)) == e);
  }
}

TEST_CASE("operator equality", "[algebra]") {
  CHECK(equals(q * p, p * q + Expression(ih)));
  CHECK_FALSE(equals(q * p, p * q));
  CHECK(equals(basis_operator(OrderingRule::born_jordan(), {1, 1}), basis_operator(OrderingRule::weyl(), {1, 1})));
  CHECK(normal_order(basis_operator(OrderingRule::weyl(), {1, 1})) ==
        nf({{{1, 1}, Scalar(1)}, {{0, 0}, ih * Scalar(Rational(-1, 2))}}));
}

TEST_CASE("equality is compatible with ring operations", "[algebra][property]") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Expression a = oracle::random_expression(rng, 2, 4, 3);
    const Expression a2 = normal_order(a).to_expression();
    const Expression c = oracle::random_expression(rng, 2, 4, 3);
    REQUIRE(equals(a, a2));
    REQUIRE(equals(a2, a));
    REQUIRE(equals(a * c, a2 * c));
    REQUIRE(equals(c * a + c, c * a2 + c));
  }
}

TEST_CASE("classical limit", "[algebra]") {
  CHECK(classical_limit(basis_operator(OrderingRule::born_jordan(), {2, 2})) == ClassicalPolynomial(Monomial{2, 2}));
  CHECK(classical_limit(q * ih).is_zero());
  CHECK(classical_limit(q * p - Expression(ih * Scalar(Rational(1, 2)))) == ClassicalPolynomial(Monomial{1, 1}));
  const ClassicalPolynomial f = ClassicalPolynomial::q(3) * ClassicalPolynomial::p(-2);
  CHECK(partial(f, Letter::P) == ClassicalPolynomial(Monomial{3, -3}, Scalar(-2)));
  CHECK(partial(f, Letter::Q) == ClassicalPolynomial(Monomial{2, -2}, Scalar(3)));
}
