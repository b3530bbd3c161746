#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mihailova/presentation.hpp"
#include "mihailova/word.hpp"

namespace mihailova {

// Element (w1, w2) of F_n x F_n.
struct PairWord {
  PairWord(Word left, Word right);

  Word left;
  Word right;

  bool is_trivial() const { return left.empty() && right.empty(); }
  friend bool operator==(const PairWord&, const PairWord&) = default;
};

PairWord operator*(const PairWord& a, const PairWord& b);

// Word in F_{n+m} on d_1..d_n, t_1..t_m. Generator k <= n is d_k and
// generator n + j is t_j.
class MixedWord {
 public:
  MixedWord(int n, int m);
  MixedWord(int n, int m, Word word);

  static MixedWord d(int n, int m, int k, int sign = 1);
  static MixedWord t(int n, int m, int j, int sign = 1);
  // Image of a D_n word (generator k read as d_k).
  static MixedWord from_d_word(const Word& d_word, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.length(); }
  bool empty() const { return word_.empty(); }
  bool is_d_only() const;

  MixedWord inverse() const { return MixedWord(n_, m_, word_.inverse()); }

  friend bool operator==(const MixedWord&, const MixedWord&) = default;
  friend auto operator<=>(const MixedWord& a, const MixedWord& b) { return a.word_ <=> b.word_; }

 private:
  int n_;
  int m_;
  Word word_;
};

MixedWord operator*(const MixedWord& a, const MixedWord& b);
MixedWord mixed_commutator(const MixedWord& a, const MixedWord& b);

struct TLetter {
  int relator;
  int sign;
  friend bool operator==(const TLetter&, const TLetter&) = default;
};

// w = u_1 t_{i_1}^{e_1} u_2 ... u_l t_{i_l}^{e_l} u_{l+1}. The u-syllables
// are kept as D_n words (rank n), i.e. d_k is generator k.
struct SyllableForm {
  int n;
  int m;
  std::vector<Word> syllables;
  std::vector<TLetter> t_letters;

  std::size_t l() const { return t_letters.size(); }
  friend bool operator==(const SyllableForm&, const SyllableForm&) = default;
};

SyllableForm decompose(const MixedWord& w);
MixedWord recompose(const SyllableForm& s);

// (x_1,x_1), ..., (x_n,x_n), (1,R_1), ..., (1,R_m).
std::vector<PairWord> mihailova_generators(const Presentation& p);

// d_k -> x_k; throws DomainError if a t-letter is present.
Word capitalize(const MixedWord& u);

// r_i: R_i with x_k replaced by d_k.
MixedWord relator_word(const Presentation& p, int i);

// Homomorphism d_k -> (x_k, x_k), t_j -> (1, R_j).
PairWord pi(const Presentation& p, const MixedWord& w);

bool in_kernel_of_pi(const Presentation& p, const MixedWord& w);

// [t_j, d^-1 t_i^-1 r_i d].
MixedWord theorem_relator_exchange(const Presentation& p, int i, int j, const MixedWord& d);
// [t_i, root(r_i)].
MixedWord theorem_relator_root(const Presentation& p, int i);

// Exchange relators for every (i, j) and every reduced d with |d| <= max_d_len
// (loops nested i, j, d in length-lex order), then the m root relators.
std::vector<MixedWord> relator_family(const Presentation& p, std::size_t max_d_len);
std::uint64_t relator_family_size(const Presentation& p, std::size_t max_d_len);

WpVerdict in_M(const Presentation& p, const PairWord& pair, const SearchBudget& budget = {});

}  // namespace mihailova
