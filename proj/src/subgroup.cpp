#include "mihailova/subgroup.hpp"

#include <string>

#include "mihailova/errors.hpp"

namespace mihailova {

namespace {

void check_alphabet(const Presentation& p, const MixedWord& w) {
  if (w.n() != p.rank() || w.m() != p.relator_count()) {
    throw AlphabetError("mixed word over (n=" + std::to_string(w.n()) + ", m=" + std::to_string(w.m()) +
                        ") used with a presentation of rank " + std::to_string(p.rank()) + " and " +
                        std::to_string(p.relator_count()) + " relators");
  }
}

void check_index(const Presentation& p, int i) {
  if (i < 1 || i > p.relator_count()) {
    throw IndexError("relator index " + std::to_string(i) + " outside [1, " + std::to_string(p.relator_count()) +
                     "]");
  }
}

}  // namespace

PairWord::PairWord(Word l, Word r) : left(std::move(l)), right(std::move(r)) {
  if (left.rank() != right.rank()) throw AlphabetError("pair components have different ranks");
}

PairWord operator*(const PairWord& a, const PairWord& b) { return {a.left * b.left, a.right * b.right}; }

MixedWord::MixedWord(int n, int m) : n_(n), m_(m), word_(n + m) {
  if (n < 1 || m < 0) throw AlphabetError("mixed alphabet needs n >= 1 and m >= 0");
}

MixedWord::MixedWord(int n, int m, Word word) : n_(n), m_(m), word_(std::move(word)) {
  if (n < 1 || m < 0) throw AlphabetError("mixed alphabet needs n >= 1 and m >= 0");
  if (word_.rank() != n + m) throw AlphabetError("mixed word rank differs from n + m");
}

MixedWord MixedWord::d(int n, int m, int k, int sign) {
  if (k < 1 || k > n) throw AlphabetError("d-letter index " + std::to_string(k) + " out of range");
  return MixedWord(n, m, Word::generator(n + m, k, sign));
}

MixedWord MixedWord::t(int n, int m, int j, int sign) {
  if (j < 1 || j > m) throw AlphabetError("t-letter index " + std::to_string(j) + " out of range");
  return MixedWord(n, m, Word::generator(n + m, n + j, sign));
}

MixedWord MixedWord::from_d_word(const Word& d_word, int m) {
  int n = d_word.rank();
  return MixedWord(n, m, relabel(d_word, n + m, [](int k) { return k; }));
}

bool MixedWord::is_d_only() const {
  for (Letter l : word_.letters()) {
    if (l.generator() > n_) return false;
  }
  return true;
}

MixedWord operator*(const MixedWord& a, const MixedWord& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw AlphabetError("mixed words over different alphabets");
  return MixedWord(a.n(), a.m(), a.word() * b.word());
}

MixedWord mixed_commutator(const MixedWord& a, const MixedWord& b) {
  return MixedWord(a.n(), a.m(), commutator(a.word(), b.word()));
}

SyllableForm decompose(const MixedWord& w) {
  SyllableForm s{w.n(), w.m(), {}, {}};
  std::vector<Letter> current;
  for (Letter l : w.word().letters()) {
    if (l.generator() <= w.n()) {
      current.push_back(l);
    } else {
      s.syllables.emplace_back(w.n(), std::move(current));
      current.clear();
      s.t_letters.push_back({l.generator() - w.n(), l.sign()});
    }
  }
  s.syllables.emplace_back(w.n(), std::move(current));
  return s;
}

MixedWord recompose(const SyllableForm& s) {
  if (s.syllables.size() != s.t_letters.size() + 1) {
    throw PreconditionError("syllable form needs exactly one more syllable than t-letters");
  }
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < s.syllables.size(); ++k) {
    const Word& u = s.syllables[k];
    if (u.rank() != s.n) throw AlphabetError("syllable rank differs from n");
    letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    if (k < s.t_letters.size()) {
      const TLetter& t = s.t_letters[k];
      if (t.relator < 1 || t.relator > s.m) throw AlphabetError("t-letter index out of range");
      letters.emplace_back(s.n + t.relator, t.sign);
    }
  }
  return MixedWord(s.n, s.m, Word(s.n + s.m, std::move(letters)));
}

std::vector<PairWord> mihailova_generators(const Presentation& p) {
  std::vector<PairWord> gens;
  for (int k = 1; k <= p.rank(); ++k) {
    Word x = Word::generator(p.rank(), k);
    gens.emplace_back(x, x);
  }
  for (const Word& r : p.relators()) gens.emplace_back(Word(p.rank()), r);
  return gens;
}

Word capitalize(const MixedWord& u) {
  if (!u.is_d_only()) throw DomainError("capitalize: word contains a t-letter");
  return relabel(u.word(), u.n(), [](int k) { return k; });
}

MixedWord relator_word(const Presentation& p, int i) {
  check_index(p, i);
  return MixedWord::from_d_word(p.relator(i), p.relator_count());
}

PairWord pi(const Presentation& p, const MixedWord& w) {
  check_alphabet(p, w);
  const int n = p.rank();
  std::vector<Letter> left;
  std::vector<Letter> right;
  for (Letter l : w.word().letters()) {
    if (l.generator() <= n) {
      left.push_back(l);
      right.push_back(l);
    } else {
      const Word& r = p.relator(l.generator() - n);
      if (l.sign() > 0) {
        right.insert(right.end(), r.letters().begin(), r.letters().end());
      } else {
        for (auto it = r.letters().rbegin(); it != r.letters().rend(); ++it) right.push_back(it->inverse());
      }
    }
  }
  return {Word(n, std::move(left)), Word(n, std::move(right))};
}

bool in_kernel_of_pi(const Presentation& p, const MixedWord& w) { return pi(p, w).is_trivial(); }

MixedWord theorem_relator_exchange(const Presentation& p, int i, int j, const MixedWord& d) {
  check_index(p, i);
  check_index(p, j);
  check_alphabet(p, d);
  if (!d.is_d_only()) throw DomainError("exchange relator parameter must be a word in d-letters");
  const int n = p.rank();
  const int m = p.relator_count();
  MixedWord inner = d.inverse() * MixedWord::t(n, m, i, -1) * relator_word(p, i) * d;
  return mixed_commutator(MixedWord::t(n, m, j), inner);
}

MixedWord theorem_relator_root(const Presentation& p, int i) {
  check_index(p, i);
  const int m = p.relator_count();
  MixedWord rho = MixedWord::from_d_word(p.relator_root(i), m);
  return mixed_commutator(MixedWord::t(p.rank(), m, i), rho);
}

std::vector<MixedWord> relator_family(const Presentation& p, std::size_t max_d_len) {
  const int m = p.relator_count();
  std::vector<MixedWord> params;
  for (const Word& d : ball(p.rank(), max_d_len)) params.push_back(MixedWord::from_d_word(d, m));

  std::vector<MixedWord> family;
  family.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m) * params.size() +
                 static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (const MixedWord& d : params) family.push_back(theorem_relator_exchange(p, i, j, d));
    }
  }
  for (int i = 1; i <= m; ++i) family.push_back(theorem_relator_root(p, i));
  return family;
}

std::uint64_t relator_family_size(const Presentation& p, std::size_t max_d_len) {
  const auto m = static_cast<std::uint64_t>(p.relator_count());
  return m * m * ball_size(p.rank(), max_d_len) + m;
}

WpVerdict in_M(const Presentation& p, const PairWord& pair, const SearchBudget& budget) {
  if (pair.left.rank() != p.rank()) throw AlphabetError("pair rank differs from presentation rank");
  return equal_in_H(p, pair.left, pair.right, budget);
}

}  // namespace mihailova
