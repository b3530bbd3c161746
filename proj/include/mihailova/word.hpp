#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mihailova {

// A generator x_k or its inverse. Generators are numbered from 1.
class Letter {
 public:
  constexpr Letter(int generator, int sign) : value_(sign < 0 ? -generator : generator) {}

  static constexpr Letter from_signed(int value) { return Letter(value < 0 ? -value : value, value); }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  // Position in the fixed letter order x1 < x1^-1 < x2 < x2^-1 < ...
  constexpr int order_key() const { return 2 * (generator() - 1) + (value_ < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }

 private:
  int value_;
};

constexpr bool cancels(Letter a, Letter b) { return a.signed_value() == -b.signed_value(); }

// Element of the free group of a given rank, always stored freely reduced.
class Word {
 public:
  explicit Word(int rank);
  // Freely reduces `letters`; throws AlphabetError for indices outside [1, rank].
  Word(int rank, std::vector<Letter> letters);
  Word(int rank, std::initializer_list<int> signed_letters);

  static Word generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  // Letters [pos, pos + len) as a word; the slice of a reduced word is reduced.
  Word slice(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Short-lex order: rank, then length, then letters in the fixed letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Trusted {};
  Word(int rank, std::vector<Letter> letters, Trusted) : rank_(rank), letters_(std::move(letters)) {}

  friend Word multiply(const Word& a, const Word& b);

  int rank_;
  std::vector<Letter> letters_;
};

struct RootDecomposition {
  Word root;
  long exponent;
};

struct CyclicReduction {
  Word core;
  // w == conjugator * core * conjugator^-1
  Word conjugator;
};

// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters, int rank);

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
// by^-1 * a * by
Word conjugate(const Word& a, const Word& by);
// a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, long exponent);

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Least rotation of a cyclically reduced word in the fixed letter order.
Word least_rotation(const Word& cyclic_word);
// Rotation moving the first `k` letters to the end.
Word rotate(const Word& w, std::size_t k);

bool are_conjugate(const Word& a, const Word& b);

// Unique (s, k) with w = s^k, k >= 1 and s not a proper power.
RootDecomposition root(const Word& w);

// Integer e with w == base^e, if one exists. `base` must be non-trivial.
std::optional<long> power_exponent(const Word& w, const Word& base);

bool commute(const Word& a, const Word& b);

std::vector<std::int64_t> abelianize(const Word& w);

// Reduced words of length <= max_length in length-lex order.
std::vector<Word> ball(int rank, std::size_t max_length);
// Number of reduced words of length <= max_length.
std::uint64_t ball_size(int rank, std::size_t max_length);

// Letter-for-letter substitution of generator k by generator map(k).
Word relabel(const Word& w, int new_rank, const std::function<int(int)>& map);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace mihailova
