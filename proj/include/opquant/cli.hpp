#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "opquant/calculus.hpp"
#include "opquant/commutators.hpp"
#include "opquant/eom.hpp"
#include "opquant/errors.hpp"
#include "opquant/format.hpp"
#include "opquant/parser.hpp"
#include "opquant/quantization.hpp"
#include "opquant/verify.hpp"

namespace opquant::cli {

enum ExitCode { kOk = 0, kIdentityViolated = 1, kUsage = 2, kDomain = 3 };

/// Bad command-line input that is not an expression parse failure.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Plain, Latex, Structured };

/// Reads a custom rule: "orientation q|p" on the first line, weights on the second.
inline OrderingRule load_custom_rule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open rule file '" + path + "'");
  std::string header, orientation, weights_line;
  if (!std::getline(in, header)) throw UsageError("rule file is empty");
  std::istringstream hs(header);
  std::string key;
  hs >> key >> orientation;
  if (key != "orientation" || (orientation != "q" && orientation != "p")) {
    throw UsageError("rule file must start with 'orientation q' or 'orientation p'");
  }
  if (!std::getline(in, weights_line)) throw UsageError("rule file has no weight line");
  std::istringstream ws(weights_line);
  std::vector<Rational> weights;
  for (std::string tok; ws >> tok;) {
    try {
      weights.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + tok + "'");
    }
  }
  return OrderingRule::custom(orientation == "q" ? Sandwich::Q : Sandwich::P, std::move(weights));
}

inline OrderingRule rule_from_name(const std::string& name) {
  if (name == "weyl") return OrderingRule::weyl();
  if (name == "sym") return OrderingRule::symmetric();
  if (name == "bj") return OrderingRule::born_jordan();
  if (name.rfind("custom:", 0) == 0) return load_custom_rule(name.substr(7));
  throw UsageError("unknown rule '" + name + "'");
}

inline DerivativeKind kind_from_name(const std::string& name) {
  if (name == "first") return DerivativeKind::FirstType;
  if (name == "weyl-mod") return DerivativeKind::FirstTypeWeylMod;
  if (name == "sym-mod") return DerivativeKind::FirstTypeSymMod;
  if (name == "second") return DerivativeKind::SecondType;
  throw UsageError("unknown derivative definition '" + name + "'");
}

inline Letter letter_from_name(const std::string& name) {
  if (name == "q") return Letter::Q;
  if (name == "p") return Letter::P;
  throw UsageError("--wrt must be q or p");
}

inline std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad index '" + tok + "'");
    }
  }
  if (out.size() != 4) throw UsageError("--idx needs four integers M,N,R,S");
  return out;
}

class Printer {
 public:
  Printer(std::ostream& out, OutputFormat fmt) : out_(out), fmt_(fmt) {}

  OutputFormat format() const { return fmt_; }
  Style style() const { return fmt_ == OutputFormat::Latex ? Style::Latex : Style::Plain; }

  void expression(const Expression& e) const {
    if (fmt_ == OutputFormat::Structured) out_ << to_structured(e).dump() << '\n';
    else out_ << opquant::format(e, style()) << '\n';
  }

  void basis(const std::map<BasisIndex, Scalar>& coeffs, char symbol) const {
    if (fmt_ == OutputFormat::Structured) out_ << to_structured(coeffs, symbol).dump() << '\n';
    else out_ << format_basis(coeffs, symbol, style()) << '\n';
  }

  nlohmann::json json(const Expression& e) const { return to_structured(e); }
  std::string text(const Expression& e) const { return opquant::format(e, style()); }

  std::ostream& stream() const { return out_; }

 private:
  std::ostream& out_;
  OutputFormat fmt_;
};

inline int report_eom(const Printer& pr, const EomReport& rep) {
  const Expression rq = rep.residual_q.to_expression();
  const Expression rp = rep.residual_p.to_expression();
  if (pr.format() == OutputFormat::Structured) {
    nlohmann::json j = {{"rule", rep.rule},
                        {"derivative", kind_name(rep.derivative_kind)},
                        {"hamiltonian", pr.json(rep.hamiltonian)},
                        {"residual_q", pr.json(rq)},
                        {"residual_p", pr.json(rp)},
                        {"passed", rep.passed}};
    pr.stream() << j.dump() << '\n';
  } else {
    auto& out = pr.stream();
    if (!rep.rule.empty()) out << "rule: " << rep.rule << '\n';
    out << "derivative: " << kind_name(rep.derivative_kind) << '\n';
    out << "hamiltonian: " << pr.text(rep.hamiltonian) << '\n';
    out << "residual_q: " << pr.text(rq) << '\n';
    out << "residual_p: " << pr.text(rp) << '\n';
    out << (rep.passed ? "passed" : "failed") << '\n';
  }
  return rep.passed ? kOk : kIdentityViolated;
}

inline int report_appendix(const Printer& pr, const AppendixReport& rep) {
  if (pr.format() == OutputFormat::Structured) {
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [kind, nf] : rep.discrepancy) d[kind_name(kind)] = pr.json(nf.to_expression());
    pr.stream() << nlohmann::json{{"m", rep.m}, {"expected", pr.json(rep.expected.to_expression())},
                                  {"discrepancy", d}, {"holds", rep.holds}}
                       .dump()
                << '\n';
  } else {
    auto& out = pr.stream();
    out << "m: " << rep.m << '\n';
    out << "expected: " << pr.text(rep.expected.to_expression()) << '\n';
    for (const auto& [kind, nf] : rep.discrepancy) out << kind_name(kind) << ": " << pr.text(nf.to_expression()) << '\n';
    out << (rep.holds ? "holds" : "violated") << '\n';
  }
  return rep.holds ? kOk : kIdentityViolated;
}

inline int report_suite(const Printer& pr, const SuiteReport& rep) {
  if (pr.format() == OutputFormat::Structured) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : rep.suites) {
      suites.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"passed", s.passed()}});
    }
    pr.stream() << nlohmann::json{{"suites", suites}, {"passed", rep.passed()}}.dump() << '\n';
  } else {
    auto& out = pr.stream();
    for (const auto& s : rep.suites) {
      out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks";
      if (!s.passed()) out << ", " << s.failures.size() << " failed";
      out << ")\n";
      for (std::size_t i = 0; i < std::min<std::size_t>(s.failures.size(), 5); ++i) out << "  " << s.failures[i] << '\n';
    }
    out << (rep.passed() ? "verify-suite: passed" : "verify-suite: failed") << '\n';
  }
  return rep.passed() ? kOk : kIdentityViolated;
}

/// Runs one command line (arguments without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact operator algebra for the one-dimensional Weyl algebra", "opquant"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "structured"}));

  std::string expr, rule_name, def_name, wrt_name, method = "brute", basis_name, idx_text, lhs, rhs, mutate = "none";
  int order = 1, m = 2, max_index = 3;

  auto* quantize_cmd = app.add_subcommand("quantize", "Quantize a classical polynomial");
  quantize_cmd->add_option("--rule", rule_name, "weyl | sym | bj | custom:FILE")->required();
  quantize_cmd->add_option("expr", expr, "Polynomial in commuting q, p")->required();

  auto* normal_cmd = app.add_subcommand("normal-order", "Normal-order an operator expression");
  normal_cmd->add_option("expr", expr)->required();

  auto* diff_cmd = app.add_subcommand("diff", "Differentiate an operator expression");
  diff_cmd->add_option("--def", def_name, "first | weyl-mod | sym-mod | second")->required();
  diff_cmd->add_option("--wrt", wrt_name, "q | p")->required();
  diff_cmd->add_option("--order", order, "Number of derivatives")->check(CLI::NonNegativeNumber);
  diff_cmd->add_option("expr", expr)->required();

  auto* comm_cmd = app.add_subcommand("commutator", "Commutator by normal ordering or by closed-form series");
  comm_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "series"}));
  comm_cmd->add_option("--basis", basis_name, "weyl | sym | bj");
  comm_cmd->add_option("--idx", idx_text, "M,N,R,S");
  comm_cmd->add_option("a", lhs);
  comm_cmd->add_option("b", rhs);

  auto* express_cmd = app.add_subcommand("express", "Write an operator in a basis");
  express_cmd->add_option("--basis", basis_name, "weyl | sym | bj")->required();
  express_cmd->add_option("expr", expr)->required();

  auto* eom_cmd = app.add_subcommand("check-eom", "Check the quantum equations of motion");
  eom_cmd->add_option("--rule", rule_name, "Quantize EXPR with this rule; without it EXPR is an operator");
  eom_cmd->add_option("--def", def_name, "first | weyl-mod | sym-mod | second")->required();
  eom_cmd->add_option("expr", expr)->required();

  auto* appendix_cmd = app.add_subcommand("appendix-demo", "Rewrite dependence of the first-type quotient");
  appendix_cmd->add_option("--m", m)->check(CLI::Range(2, 1000));

  auto* verify_cmd = app.add_subcommand("verify-suite", "Run the identity suites");
  verify_cmd->add_option("--max-index", max_index)->check(CLI::Range(1, 12));
  verify_cmd->add_option("--mutate", mutate)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const OutputFormat fmt = format_name == "latex" ? OutputFormat::Latex
                           : format_name == "structured" ? OutputFormat::Structured
                                                         : OutputFormat::Plain;
  const Printer pr(out, fmt);

  try {
    if (*quantize_cmd) {
      pr.expression(quantize(parse_classical(expr), rule_from_name(rule_name)));
      return kOk;
    }
    if (*normal_cmd) {
      pr.expression(normal_order(parse_expression(expr)).to_expression());
      return kOk;
    }
    if (*diff_cmd) {
      pr.expression(diff_n(parse_expression(expr), letter_from_name(wrt_name), order, kind_from_name(def_name)));
      return kOk;
    }
    if (*comm_cmd) {
      if (method == "series") {
        if (basis_name.empty() || idx_text.empty()) throw UsageError("--method series needs --basis and --idx");
        const OrderingRule rule = rule_from_name(basis_name);
        if (!rule.is_builtin()) throw UsageError("--basis must be weyl, sym or bj");
        const auto v = parse_index_list(idx_text);
        pr.basis(series_map(commutator_series(rule.tag(), {v[0], v[1]}, {v[2], v[3]})), rule.symbol());
        return kOk;
      }
      if (lhs.empty() || rhs.empty()) throw UsageError("commutator needs two expressions A B");
      pr.expression(commutator_brute(parse_expression(lhs), parse_expression(rhs)).to_expression());
      return kOk;
    }
    if (*express_cmd) {
      const OrderingRule rule = rule_from_name(basis_name);
      if (!rule.is_builtin()) throw UsageError("--basis must be weyl, sym or bj");
      pr.basis(express_in_basis(normal_order(parse_expression(expr)), rule), rule.symbol());
      return kOk;
    }
    if (*eom_cmd) {
      const DerivativeKind kind = kind_from_name(def_name);
      if (rule_name.empty()) return report_eom(pr, check_eom(parse_expression(expr), kind));
      const OrderingRule rule = rule_from_name(rule_name);
      const ClassicalPolynomial f = parse_classical(expr);
      if (is_first_type(kind) && rule.is_builtin()) {
        return report_eom(pr, check_eom(quantize(f, rule, Sandwich::Q), quantize(f, rule, Sandwich::P), kind, rule.name()));
      }
      return report_eom(pr, check_eom(quantize(f, rule), kind, rule.name()));
    }
    if (*appendix_cmd) return report_appendix(pr, appendix_demo(m));
    if (*verify_cmd) {
      const auto mutation = mutation_from_name(mutate);
      if (!mutation) throw UsageError("unknown mutation '" + mutate + "'");
      return report_suite(pr, run_verify_suite(max_index, *mutation));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace opquant::cli
