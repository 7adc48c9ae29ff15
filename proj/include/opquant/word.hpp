#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace opquant {

enum class Letter : std::uint8_t { Q, P };

inline char letter_char(Letter l) { return l == Letter::Q ? 'q' : 'p'; }
inline Letter other(Letter l) { return l == Letter::Q ? Letter::P : Letter::Q; }

struct Factor {
  Letter letter;
  int exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Noncommutative monomial in q and p stored in run-length form:
/// adjacent factors always have different letters and no exponent is zero.
/// The empty word is the identity operator.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Factor> factors) {
    for (const auto& f : factors) push(f);
  }
  explicit Word(const std::vector<Factor>& factors) {
    for (const auto& f : factors) push(f);
  }

  static Word q(int e = 1) { return Word{{Letter::Q, e}}; }
  static Word p(int e = 1) { return Word{{Letter::P, e}}; }

  /// Builds a word from unit letters, merging runs.
  static Word from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (Letter l : letters) w.push({l, 1});
    return w;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }

  /// Sum of absolute exponents.
  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += std::abs(f.exponent);
    return d;
  }

  int total_exponent(Letter l) const {
    int e = 0;
    for (const auto& f : factors_)
      if (f.letter == l) e += f.exponent;
    return e;
  }

  bool all_positive() const {
    for (const auto& f : factors_)
      if (f.exponent < 0) return false;
    return true;
  }

  /// Expands runs into single letters; only defined for all-positive words.
  std::vector<Letter> unit_letters() const {
    std::vector<Letter> out;
    for (const auto& f : factors_) {
      if (f.exponent < 0) throw std::logic_error("unit_letters: negative exponent");
      out.insert(out.end(), static_cast<std::size_t>(f.exponent), f.letter);
    }
    return out;
  }

  Word reversed() const {
    Word w;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) w.push(*it);
    return w;
  }

  /// Concatenation; merges the run at the seam.
  friend Word operator*(Word a, const Word& b) {
    for (const auto& f : b.factors_) a.push(f);
    return a;
  }

  void push(Factor f) {
    if (f.exponent == 0) return;
    if (!factors_.empty() && factors_.back().letter == f.letter) {
      factors_.back().exponent += f.exponent;
      if (factors_.back().exponent == 0) factors_.pop_back();
      return;
    }
    factors_.push_back(f);
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Display and storage order: higher degree first; then factor by factor,
/// q before p and larger exponent before smaller. On positive words of equal
/// degree this is the lexicographic order of the unit-letter expansion with q < p.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (fa[i].letter != fb[i].letter) return fa[i].letter < fb[i].letter;
      if (fa[i].exponent != fb[i].exponent) return fa[i].exponent > fb[i].exponent;
    }
    return fa.size() < fb.size();
  }
};

}  // namespace opquant
