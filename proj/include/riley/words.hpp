#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riley/int_polynomial.hpp"

namespace riley {

/// Word in Z * Z_2 = < a > * < b | b^2 = 1 >.
///
/// Reduced form: no adjacent tokens on the same generator, no zero
/// a-exponents, and every b-exponent equal to 1.
class FreeWord {
 public:
  enum class Gen : unsigned char { A, B };
  struct Token {
    Gen gen;
    std::int64_t exp;
    friend bool operator==(const Token&, const Token&) = default;
  };

  FreeWord() = default;
  explicit FreeWord(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  /// Parses the text grammar: whitespace-separated tokens,
  /// token := "a"SIGNED_INT | "b", e.g. "b a1 b a-2 b".
  static FreeWord from_text(const std::string& text);

  const std::vector<Token>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  std::string to_text() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Token> tokens_;
};

/// Normal form in Z * Z_2: merges adjacent powers, applies b^2 = 1, drops
/// zero a-powers.  With strip_boundary_a, leading and trailing a-powers are
/// also removed; they do not affect any commutator trace, which is what the
/// polynomial extraction cares about.
FreeWord reduce(const FreeWord& w, bool strip_boundary_a = false);

/// Interior a-exponent sequence s of a good word, s in (Z \ {0})^m, m >= 1.
class ExponentWord {
 public:
  explicit ExponentWord(std::vector<std::int64_t> exponents);

  std::size_t size() const { return exps_.size(); }
  std::int64_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }
  std::string to_string() const;  // e.g. "(3,-3,3)"

  friend bool operator==(const ExponentWord&, const ExponentWord&) = default;

 private:
  std::vector<std::int64_t> exps_;
};

/// The interior a-exponents of w after reduction and boundary stripping.
/// Empty interior (a bare b, or the empty word) signals nullopt; callers
/// treat that as the identity polynomial p(z) = z.
std::optional<ExponentWord> exponents_of(const FreeWord& w);

/// w_s = b a^{s1} b a^{s2} ... a^{sm} b in the Z_2 quotient.
FreeWord word_of(const ExponentWord& s);

/// p(z) = z, the polynomial of the bare involution letter.
IntPolynomial identity_polynomial();

/// The exact integer polynomial p_w with p_w(gamma(f,phi)) = gamma(f, w_s),
/// derived by evaluating w_s at the symbolic generators and rewriting the
/// commutator trace in z = s^2.
IntPolynomial word_polynomial(const ExponentWord& s);

/// Semigroup operation: substitutes w_t (alternating with its inverse) for
/// the b-letters of w_s, reduces, and reads off the exponents.  The result
/// has length mn + m + n and satisfies
///   word_polynomial(star(s, t)) == compose(word_polynomial(s), word_polynomial(t)).
ExponentWord star(const ExponentWord& s, const ExponentWord& t);

/// n-fold star power of s (n >= 1); its polynomial is the n-th iterate.
ExponentWord star_power(const ExponentWord& s, int n);

/// Deterministic word stream: lengths 1..max_len, each entry running over
/// 1, -1, 2, -2, ..., max_exp, -max_exp in that fixed order.  Exhaustive and
/// duplicate-free; two streams with equal bounds yield identical sequences.
class WordEnumerator {
 public:
  WordEnumerator(int max_len, int max_exp);
  std::optional<ExponentWord> next();

 private:
  int max_len_;
  int max_exp_;
  std::vector<int> state_;  // indices into the entry order; empty = fresh
  bool done_ = false;
};

std::vector<ExponentWord> enumerate_words(int max_len, int max_exp, std::size_t limit);

}  // namespace riley
