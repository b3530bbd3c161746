#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mihailova/word.hpp"

namespace mihailova {

// Names for the generators of one free group. Words are written as
// space-separated tokens `x3` or `x3^-1`, and the empty word as `1`.
class Alphabet {
 public:
  // x1..xn (or another single-letter prefix).
  static Alphabet indexed(int rank, char prefix = 'x');
  // d1..dn followed by t1..tm.
  static Alphabet mixed(int n, int m);
  // q, a, b.
  static Alphabet f3();
  // a, b.
  static Alphabet f2();

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int generator) const { return names_.at(static_cast<std::size_t>(generator - 1)); }
  // Generator index for a name; throws ParseError if unknown.
  int lookup(std::string_view name) const;

 private:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

std::string format_word(const Word& w, const Alphabet& alphabet);

// Accepts `name`, `name^-1` and, for convenience, `name^k` for any non-zero k.
Word parse_word(std::string_view text, const Alphabet& alphabet);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_whitespace(std::string_view s);

}  // namespace mihailova
