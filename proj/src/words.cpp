#include "riley/words.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "riley/symbolic_matrix.hpp"

namespace riley {

FreeWord FreeWord::from_text(const std::string& text) {
  std::vector<Token> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "b") {
      tokens.push_back({Gen::B, 1});
    } else if (tok.size() > 1 && tok[0] == 'a') {
      std::int64_t e = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), e);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad word token: " + tok);
      if (e == 0) throw std::invalid_argument("zero a-exponent in word: " + tok);
      tokens.push_back({Gen::A, e});
    } else {
      throw std::invalid_argument("bad word token: " + tok);
    }
  }
  return FreeWord(std::move(tokens));
}

std::string FreeWord::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const Token& t : tokens_) {
    if (!first) os << ' ';
    first = false;
    if (t.gen == Gen::B)
      os << 'b';
    else
      os << 'a' << t.exp;
  }
  return os.str();
}

FreeWord reduce(const FreeWord& w, bool strip_boundary_a) {
  auto mod2 = [](std::int64_t e) { return ((e % 2) + 2) % 2; };
  // Stack of tokens with alternating generators; merging with the top can
  // expose a previous token, which then differs in generator, so each
  // incoming token merges at most once.
  std::vector<FreeWord::Token> out;
  for (FreeWord::Token t : w.tokens()) {
    if (t.exp == 0) continue;
    if (!out.empty() && out.back().gen == t.gen) {
      t.exp += out.back().exp;
      out.pop_back();
    }
    if (t.gen == FreeWord::Gen::B) t.exp = mod2(t.exp);
    if (t.exp != 0) out.push_back(t);
  }
  if (strip_boundary_a) {
    while (!out.empty() && out.front().gen == FreeWord::Gen::A) out.erase(out.begin());
    while (!out.empty() && out.back().gen == FreeWord::Gen::A) out.pop_back();
  }
  return FreeWord(std::move(out));
}

ExponentWord::ExponentWord(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("exponent sequence must be nonempty");
  for (std::int64_t e : exps_)
    if (e == 0) throw std::invalid_argument("exponent sequence entries must be nonzero");
}

std::string ExponentWord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ',';
    os << exps_[i];
  }
  os << ')';
  return os.str();
}

std::optional<ExponentWord> exponents_of(const FreeWord& w) {
  FreeWord r = reduce(w, /*strip_boundary_a=*/true);
  const auto& toks = r.tokens();
  if (toks.empty()) return std::nullopt;
  if (toks.front().gen != FreeWord::Gen::B || toks.back().gen != FreeWord::Gen::B)
    throw std::invalid_argument("word does not start and end with b after stripping");
  std::vector<std::int64_t> exps;
  for (const auto& t : toks)
    if (t.gen == FreeWord::Gen::A) exps.push_back(t.exp);
  if (exps.empty()) return std::nullopt;  // bare b: identity polynomial
  return ExponentWord(std::move(exps));
}

FreeWord word_of(const ExponentWord& s) {
  std::vector<FreeWord::Token> toks;
  toks.push_back({FreeWord::Gen::B, 1});
  for (std::int64_t e : s) {
    toks.push_back({FreeWord::Gen::A, e});
    toks.push_back({FreeWord::Gen::B, 1});
  }
  return FreeWord(std::move(toks));
}

IntPolynomial identity_polynomial() { return IntPolynomial::identity(); }

IntPolynomial word_polynomial(const ExponentWord& s) {
  SymbolicMatrix2 phi = SymbolicMatrix2::involution();
  SymbolicMatrix2 w = phi;
  for (std::int64_t e : s) {
    w = w * SymbolicMatrix2::parabolic_power(e);
    w = w * phi;
  }
  return to_z_polynomial(gamma_of(w));
}

ExponentWord star(const ExponentWord& s, const ExponentWord& t) {
  // Substitute w_t for the k-th b-letter of w_s, inverted on even k.  In the
  // Z_2 quotient w_t^-1 = b a^{-t_n} b ... a^{-t_1} b.
  std::vector<FreeWord::Token> toks;
  auto push_insert = [&](bool inverted) {
    toks.push_back({FreeWord::Gen::B, 1});
    if (!inverted) {
      for (std::int64_t e : t) {
        toks.push_back({FreeWord::Gen::A, e});
        toks.push_back({FreeWord::Gen::B, 1});
      }
    } else {
      for (std::size_t i = t.size(); i-- > 0;) {
        toks.push_back({FreeWord::Gen::A, -t[i]});
        toks.push_back({FreeWord::Gen::B, 1});
      }
    }
  };
  push_insert(false);
  bool inverted = true;
  for (std::int64_t e : s) {
    toks.push_back({FreeWord::Gen::A, e});
    push_insert(inverted);
    inverted = !inverted;
  }
  auto result = exponents_of(FreeWord(std::move(toks)));
  if (!result) throw std::logic_error("star substitution produced an empty interior");
  std::size_t m = s.size(), n = t.size();
  if (result->size() != m * n + m + n)
    throw std::logic_error("star substitution violated the mn+m+n length contract");
  return *result;
}

ExponentWord star_power(const ExponentWord& s, int n) {
  if (n < 1) throw std::invalid_argument("star_power requires n >= 1");
  ExponentWord acc = s;
  for (int i = 1; i < n; ++i) acc = star(acc, s);
  return acc;
}

WordEnumerator::WordEnumerator(int max_len, int max_exp) : max_len_(max_len), max_exp_(max_exp) {
  if (max_len < 1 || max_exp < 1)
    throw std::invalid_argument("enumeration bounds must be at least 1");
}

namespace {
// entry order 1, -1, 2, -2, ...: small magnitudes first, positive first
std::int64_t entry_at(int idx) {
  int k = idx / 2 + 1;
  return idx % 2 == 0 ? k : -k;
}
}  // namespace

std::optional<ExponentWord> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (state_.empty()) {
    state_.assign(1, 0);
  } else {
    // odometer increment over entry indices, rolling to longer lengths
    int pos = static_cast<int>(state_.size()) - 1;
    while (pos >= 0) {
      if (++state_[static_cast<std::size_t>(pos)] < 2 * max_exp_) break;
      state_[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      if (static_cast<int>(state_.size()) >= max_len_) {
        done_ = true;
        return std::nullopt;
      }
      state_.assign(state_.size() + 1, 0);
    }
  }
  std::vector<std::int64_t> exps(state_.size());
  for (std::size_t i = 0; i < state_.size(); ++i) exps[i] = entry_at(state_[i]);
  return ExponentWord(std::move(exps));
}

std::vector<ExponentWord> enumerate_words(int max_len, int max_exp, std::size_t limit) {
  WordEnumerator en(max_len, max_exp);
  std::vector<ExponentWord> out;
  out.reserve(limit);
  while (out.size() < limit) {
    auto w = en.next();
    if (!w) break;
    out.push_back(std::move(*w));
  }
  return out;
}

}  // namespace riley
