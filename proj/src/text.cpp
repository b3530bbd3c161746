#include "mihailova/text.hpp"

#include <charconv>

#include "mihailova/errors.hpp"

namespace mihailova {

Alphabet Alphabet::indexed(int rank, char prefix) {
  std::vector<std::string> names;
  for (int k = 1; k <= rank; ++k) names.push_back(prefix + std::to_string(k));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::mixed(int n, int m) {
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("d" + std::to_string(k));
  for (int k = 1; k <= m; ++k) names.push_back("t" + std::to_string(k));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::f3() { return Alphabet({"q", "a", "b"}); }

Alphabet Alphabet::f2() { return Alphabet({"a", "b"}); }

int Alphabet::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i) + 1;
  }
  throw ParseError("unknown letter '" + std::string(name) + "'");
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.generator());
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\r' || s[j] == '\n')) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  auto tokens = split_whitespace(text);
  if (tokens.empty()) throw ParseError("empty word text (write the identity as '1')");
  if (tokens.size() == 1 && tokens[0] == "1") return Word(alphabet.rank());

  std::vector<Letter> letters;
  for (std::string_view tok : tokens) {
    int exponent = 1;
    auto caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    if (caret != std::string_view::npos) {
      std::string_view exp = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || exponent == 0) {
        throw ParseError("bad exponent in token '" + std::string(tok) + "'");
      }
    }
    int g = alphabet.lookup(name);
    int count = exponent < 0 ? -exponent : exponent;
    for (int i = 0; i < count; ++i) letters.emplace_back(g, exponent);
  }
  return Word(alphabet.rank(), std::move(letters));
}

}  // namespace mihailova
