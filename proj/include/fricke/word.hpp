#pragma once
// Reduced words in the free group on two generators a, b.
//
// Words are run-length encoded as syllables (generator, exponent). Two
// invariants hold at all times: adjacent syllables use different generators
// and every exponent is nonzero. The empty word is the identity.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fricke {

enum class Gen : std::uint8_t { A = 0, B = 1 };

inline Gen other(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }

struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Thrown on malformed word text; everything else in this header is total.
class WordParseError : public std::runtime_error {
 public:
  explicit WordParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class Word {
 public:
  Word() = default;

  // Appends g^e, merging with the trailing syllable and cancelling as needed.
  void push(Gen g, std::int64_t e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({g, e});
  }

  void push(const Syllable& s) { push(s.gen, s.exp); }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t size() const { return syl_.size(); }

  // Sum of |exponent| over all syllables. Every rewrite the trace compiler
  // performs is measured against this.
  std::int64_t total_weight() const {
    std::int64_t w = 0;
    for (const auto& s : syl_) w += s.exp < 0 ? -s.exp : s.exp;
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

// Grammar: letters a, b (generators), A, B (their inverses), each with an
// optional ^<signed integer> suffix; whitespace is ignored everywhere.
// "a^2 b^-1 A" parses, "a^0" and unknown characters do not.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    const char c = text[i];
    Gen g;
    std::int64_t sign;
    switch (c) {
      case 'a': g = Gen::A; sign = 1; break;
      case 'A': g = Gen::A; sign = -1; break;
      case 'b': g = Gen::B; sign = 1; break;
      case 'B': g = Gen::B; sign = -1; break;
      default:
        throw WordParseError(std::string("unexpected character '") + c +
                             "' in word (expected a, b, A, B)");
    }
    ++i;
    skip_ws();
    std::int64_t mag = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::int64_t neg = 1;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') neg = -1;
        ++i;
      }
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ptr == first || ec == std::errc::invalid_argument)
        throw WordParseError("expected an integer after '^'");
      if (ec == std::errc::result_out_of_range || value > 1000000000000000LL)
        throw WordParseError("exponent out of range");
      if (value == 0) throw WordParseError("zero exponent is not allowed");
      i += static_cast<std::size_t>(ptr - first);
      mag = neg * value;
    }
    w.push(g, sign * mag);
    skip_ws();
  }
  return w;
}

// Inverse of parse_word on reduced words: positive syllables render as
// a/a^k, negative ones as A/A^k.
inline std::string render_word(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    const char base = s.gen == Gen::A ? 'a' : 'b';
    out += s.exp > 0 ? base : static_cast<char>(std::toupper(base));
    const std::int64_t mag = s.exp < 0 ? -s.exp : s.exp;
    if (mag != 1) {
      out += '^';
      out += std::to_string(mag);
    }
  }
  return out;
}

// w(a, b) -> w(a^-1, b^-1): negate every exponent. Reducedness is preserved.
inline Word flip_inverses(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) out.push(s.gen, -s.exp);
  return out;
}

// Group inverse: reverse the syllables and negate the exponents.
inline Word inverse_word(const Word& w) {
  Word out;
  const auto& s = w.syllables();
  for (std::size_t i = s.size(); i-- > 0;) out.push(s[i].gen, -s[i].exp);
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (const auto& s : v.syllables()) out.push(s);
  return out;
}

// Shortest conjugate of w: merge matching first/last syllables until the
// word is a genuine cyclic representative (or has a single syllable).
inline Word cyclically_reduced(const Word& w) {
  std::vector<Syllable> s(w.syllables());
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
  Word out;
  for (const auto& x : s) out.push(x);
  return out;
}

// All whole-syllable rotations. Only meaningful for cyclically reduced
// input, where every rotation is itself reduced.
inline std::vector<Word> cyclic_rotations(const Word& w) {
  const auto& s = w.syllables();
  std::vector<Word> out;
  if (s.empty()) {
    out.push_back(w);
    return out;
  }
  for (std::size_t r = 0; r < s.size(); ++r) {
    Word rot;
    for (std::size_t k = 0; k < s.size(); ++k) rot.push(s[(r + k) % s.size()]);
    out.push_back(std::move(rot));
  }
  return out;
}

}  // namespace fricke
