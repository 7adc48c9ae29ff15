#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opquant/commutators.hpp"
#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"

namespace opquant {

enum class Style { Plain, Latex };

namespace detail {

// A real or purely imaginary multiple of hbar^k.
struct Atom {
  Rational value;  // signed
  bool imaginary;
  int hbar_power;
};

inline std::vector<Atom> atoms(const Scalar& s) {
  std::vector<Atom> out;
  for (const auto& [k, c] : s.terms()) {
    if (!c.re.is_zero()) out.push_back({c.re, false, k});
    if (!c.im.is_zero()) out.push_back({c.im, true, k});
  }
  return out;
}

inline std::string rational_text(const Rational& r, Style style) {
  if (style == Style::Plain || r.is_integer()) return r.str();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

// Unsigned atom text; empty when the atom is exactly 1.
inline std::string atom_text(const Atom& a, Style style) {
  std::vector<std::string> parts;
  const Rational mag = a.value.abs();
  if (!mag.is_one()) parts.push_back(rational_text(mag, style));
  if (a.imaginary) parts.emplace_back("i");
  if (a.hbar_power != 0) {
    std::string h = style == Style::Plain ? "hbar" : "\\hbar";
    if (a.hbar_power != 1) {
      h += style == Style::Plain ? "^" + std::to_string(a.hbar_power) : "^{" + std::to_string(a.hbar_power) + "}";
    }
    parts.push_back(std::move(h));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? (style == Style::Plain ? "*" : " ") : "") + parts[i];
  return out;
}

inline std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, text] = terms[i];
    if (i == 0) out += negative ? "-" + text : text;
    else out += (negative ? " - " : " + ") + text;
  }
  return out;
}

inline std::string scalar_sum(const Scalar& s, Style style) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& a : atoms(s)) {
    std::string t = atom_text(a, style);
    terms.emplace_back(a.value.sign() < 0, t.empty() ? "1" : t);
  }
  return join_signed(terms);
}

// (negative, text) for coefficient * body; body empty means the identity.
inline std::pair<bool, std::string> product_term(const Scalar& c, const std::string& body, Style style) {
  const auto parts = atoms(c);
  const std::string glue = style == Style::Plain ? "*" : " ";
  if (parts.size() == 1) {
    const std::string coef = atom_text(parts.front(), style);
    const bool negative = parts.front().value.sign() < 0;
    if (coef.empty()) return {negative, body.empty() ? "1" : body};
    return {negative, body.empty() ? coef : coef + glue + body};
  }
  const std::string sum = scalar_sum(c, style);
  const std::string wrapped = style == Style::Plain ? "(" + sum + ")" : "\\left(" + sum + "\\right)";
  return {false, body.empty() ? wrapped : wrapped + glue + body};
}

}  // namespace detail

inline std::string format_scalar(const Scalar& s, Style style = Style::Plain) { return detail::scalar_sum(s, style); }

inline std::string format_word(const Word& w, Style style = Style::Plain) {
  std::string out;
  for (const auto& f : w.factors()) {
    if (style == Style::Plain) {
      if (!out.empty()) out += ' ';
      out += letter_char(f.letter);
      if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    } else {
      out += std::string("\\hat{") + letter_char(f.letter) + "}";
      if (f.exponent != 1) out += "^{" + std::to_string(f.exponent) + "}";
    }
  }
  return out;
}

inline std::string format(const Expression& e, Style style = Style::Plain) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [w, c] : e.terms()) terms.push_back(detail::product_term(c, format_word(w, style), style));
  return detail::join_signed(terms);
}

inline std::string format(const NormalForm& nf, Style style = Style::Plain) { return format(nf.to_expression(), style); }

inline std::string format_basis_symbol(char symbol, BasisIndex idx, Style style = Style::Plain) {
  const std::string pair = std::to_string(idx.m) + "," + std::to_string(idx.n);
  if (style == Style::Plain) return std::string(1, symbol) + "[" + pair + "]";
  return std::string("\\mathbf{") + symbol + "}_{" + pair + "}";
}

/// Entries of a basis combination in display order: the order of the
/// monomials q^n p^m that lead each image.
inline std::vector<std::pair<BasisIndex, Scalar>> basis_display_order(const std::map<BasisIndex, Scalar>& coeffs) {
  std::vector<std::pair<BasisIndex, Scalar>> out(coeffs.begin(), coeffs.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return MonomialOrder{}(Monomial{a.first.n, a.first.m}, Monomial{b.first.n, b.first.m});
  });
  return out;
}

inline std::string format_basis(const std::map<BasisIndex, Scalar>& coeffs, char symbol, Style style = Style::Plain) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [idx, c] : basis_display_order(coeffs)) {
    terms.push_back(detail::product_term(c, format_basis_symbol(symbol, idx, style), style));
  }
  return detail::join_signed(terms);
}

inline std::map<BasisIndex, Scalar> series_map(const std::vector<CommutatorSeriesTerm>& terms) {
  std::map<BasisIndex, Scalar> out;
  for (const auto& t : terms) out[t.target] += t.coefficient;
  return out;
}

// Structured (JSON) form. Schema in docs/structured-output.md.

namespace detail {

inline nlohmann::json big_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline mpz_class big_integer_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("structured: integer must be a JSON integer or decimal string");
}

inline nlohmann::json rational_json(const Rational& r) {
  return nlohmann::json::array({big_integer(r.numerator()), big_integer(r.denominator())});
}

inline Rational rational_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("structured: rational must be [num, den]");
  return Rational(big_integer_from(j[0]), big_integer_from(j[1]));
}

}  // namespace detail

inline nlohmann::json to_structured(const Scalar& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : s.terms()) {
    out.push_back({{"hbar_power", k}, {"re", detail::rational_json(c.re)}, {"im", detail::rational_json(c.im)}});
  }
  return out;
}

inline Scalar scalar_from_structured(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("structured: coeff must be an array");
  Scalar out;
  for (const auto& entry : j) {
    const int k = entry.at("hbar_power").get<int>();
    out += Scalar::monomial(k, ComplexRational(detail::rational_from(entry.at("re")), detail::rational_from(entry.at("im"))));
  }
  return out;
}

inline nlohmann::json to_structured(const Expression& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& f : w.factors()) word.push_back(nlohmann::json::array({std::string(1, letter_char(f.letter)), f.exponent}));
    terms.push_back({{"coeff", to_structured(c)}, {"word", word}});
  }
  return {{"terms", terms}};
}

inline nlohmann::json to_structured(const NormalForm& nf) { return to_structured(nf.to_expression()); }

inline Expression from_structured(const nlohmann::json& j) {
  Expression out;
  for (const auto& term : j.at("terms")) {
    std::vector<Factor> factors;
    for (const auto& f : term.at("word")) {
      const auto letter = f.at(0).get<std::string>();
      if (letter != "q" && letter != "p") throw std::invalid_argument("structured: letter must be \"q\" or \"p\"");
      factors.push_back({letter == "q" ? Letter::Q : Letter::P, f.at(1).get<int>()});
    }
    out += Expression(Word(factors), scalar_from_structured(term.at("coeff")));
  }
  return out;
}

inline nlohmann::json to_structured(const std::map<BasisIndex, Scalar>& coeffs, char symbol) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [idx, c] : basis_display_order(coeffs)) {
    terms.push_back({{"coeff", to_structured(c)}, {"index", nlohmann::json::array({idx.m, idx.n})}});
  }
  return {{"basis", std::string(1, symbol)}, {"terms", terms}};
}

}  // namespace opquant
