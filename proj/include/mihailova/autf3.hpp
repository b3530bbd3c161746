#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mihailova/presentation.hpp"
#include "mihailova/word.hpp"

namespace mihailova {

// Generator numbering in F_3 = <q, a, b> and F_2 = <a, b>.
inline constexpr int kQ = 1;
inline constexpr int kA3 = 2;
inline constexpr int kB3 = 3;
inline constexpr int kA2 = 1;
inline constexpr int kB2 = 2;

// Endomorphism of F_3 given by the images of q, a, b.
class Endomorphism3 {
 public:
  Endomorphism3(Word image_q, Word image_a, Word image_b);

  static Endomorphism3 identity();

  const Word& image_q() const { return images_[0]; }
  const Word& image_a() const { return images_[1]; }
  const Word& image_b() const { return images_[2]; }
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }

  Word apply(const Word& w) const;

  friend bool operator==(const Endomorphism3&, const Endomorphism3&) = default;

 private:
  std::vector<Word> images_;
};

// The left factor acts first: compose(e1, e2)(w) = e2(e1(w)).
Endomorphism3 compose(const Endomorphism3& e1, const Endomorphism3& e2);

// Word of F_2 = <a, b> read inside F_3.
Word lift_to_f3(const Word& f2_word);

// q -> u q v, a -> a, b -> b.
Endomorphism3 theta_uv(const Word& u, const Word& v);
// theta(u, v) = theta_uv(u^-1, v).
Endomorphism3 theta(const Word& u, const Word& v);

// _{a^-1}theta_1, _{b^-1}theta_1, _1theta_a, _1theta_b.
std::vector<Endomorphism3> b_generators();

// x_k -> a^{k-1} b a^{-(k-1)} (k < n), x_n -> a^{n-1}: a free basis of the
// kernel of F_2 -> Z/(n-1), a -> 1, b -> 0.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::vector<Word> images);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
};

EmbeddingTable fn_into_f2(int n);

// theta applied to the embedded Mihailova generators, in generator order.
std::vector<Endomorphism3> orbit_undecidable_subgroup(const Presentation& p);

// Parameters (u, v) of a theta-type endomorphism, i.e. image_q = u^-1 q v with
// a and b fixed; nullopt otherwise.
std::optional<std::pair<Word, Word>> theta_parameters(const Endomorphism3& e);

std::string format_endomorphism(const Endomorphism3& e);
Endomorphism3 parse_endomorphism(std::string_view text);
// Blocks of three lines separated by blank lines.
std::string format_endomorphisms(const std::vector<Endomorphism3>& list);
std::vector<Endomorphism3> parse_endomorphisms(std::string_view text);

}  // namespace mihailova
