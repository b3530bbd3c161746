#include <doctest.h>

#include "mihailova/errors.hpp"
#include "mihailova/subgroup.hpp"
#include "mihailova/text.hpp"
#include "oracles.hpp"

using namespace mihailova;

namespace {

Word w2(std::initializer_list<int> letters) { return Word(2, letters); }
const Word kR = Word(2, {1, 2, -1, -2});

MixedWord mixed(const Presentation& p, const char* text) {
  return MixedWord(p.rank(), p.relator_count(), parse_word(text, Alphabet::mixed(p.rank(), p.relator_count())));
}

}  // namespace

TEST_CASE("mihailova_generators") {
  auto gens = mihailova_generators(oracle::torus());
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == PairWord(w2({1}), w2({1})));
  CHECK(gens[1] == PairWord(w2({2}), w2({2})));
  CHECK(gens[2] == PairWord(Word(2), kR));
  CHECK(mihailova_generators(Presentation(3, {})).size() == 3);
  CHECK(mihailova_generators(Presentation(2, {kR, w2({1, 1}), w2({2, 2, 2})})).size() == 5);
  CHECK_THROWS_AS(PairWord(w2({1}), Word(3)), AlphabetError);
}

TEST_CASE("capitalize and relator_word") {
  Presentation p = oracle::torus();
  CHECK(capitalize(mixed(p, "d1 d2^-1")) == w2({1, -2}));
  CHECK(capitalize(MixedWord(2, 1)).empty());
  CHECK(capitalize(mixed(p, "d2 d2")) == w2({2, 2}));
  CHECK_THROWS_AS(capitalize(mixed(p, "d1 t1")), DomainError);
  CHECK(relator_word(p, 1) == mixed(p, "d1 d2 d1^-1 d2^-1"));
  CHECK(relator_word(Presentation(2, {w2({1, 1})}), 1).word() == Word(3, {1, 1}));
  CHECK_THROWS_AS(relator_word(p, 2), IndexError);
}

TEST_CASE("pi") {
  Presentation p = oracle::torus();
  CHECK(pi(p, mixed(p, "d1")) == PairWord(w2({1}), w2({1})));
  MixedWord d1 = MixedWord::d(2, 1, 1);
  MixedWord w = mixed_commutator(MixedWord::t(2, 1, 1), d1.inverse() * MixedWord::t(2, 1, 1, -1) * relator_word(p, 1) * d1);
  CHECK(pi(p, w).is_trivial());
  Presentation sq(2, {w2({1, 1})});
  CHECK(pi(sq, mixed(sq, "t1 d2")) == PairWord(w2({2}), w2({1, 1, 2})));
  CHECK(pi(p, mixed(p, "t1 d2")) == PairWord(w2({2}), w2({1, 2, -1, -2, 2})));
}

TEST_CASE("decompose and recompose") {
  Presentation p(2, {kR, w2({1, 1})});
  auto s = decompose(mixed(p, "d1 t2 d1^-1"));
  REQUIRE(s.l() == 1);
  CHECK(s.syllables == std::vector<Word>{w2({1}), w2({-1})});
  CHECK(s.t_letters[0] == TLetter{2, 1});

  auto tt = decompose(mixed(p, "t1 t1"));
  REQUIRE(tt.l() == 2);
  CHECK(tt.syllables.size() == 3);
  for (const Word& u : tt.syllables) CHECK(u.empty());

  auto plain = decompose(mixed(p, "d1 d2"));
  CHECK(plain.l() == 0);
  CHECK(plain.syllables == std::vector<Word>{w2({1, 2})});

  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    MixedWord w(2, 2, oracle::random_word(rng, 4, 12));
    auto form = decompose(w);
    CHECK(form.syllables.size() == form.l() + 1);
    CHECK(recompose(form) == w);
  }
}

TEST_CASE("exchange and root relators") {
  Presentation p = oracle::torus();
  MixedWord t1 = MixedWord::t(2, 1, 1);
  MixedWord r1 = relator_word(p, 1);
  CHECK(theorem_relator_exchange(p, 1, 1, MixedWord(2, 1)) == mixed_commutator(t1, t1.inverse() * r1));
  CHECK(theorem_relator_root(p, 1) == mixed_commutator(t1, r1));
  Presentation sq(2, {w2({1, 1})});
  CHECK(theorem_relator_root(sq, 1) == mixed_commutator(MixedWord::t(2, 1, 1), MixedWord::d(2, 1, 1)));
  CHECK_THROWS_AS(theorem_relator_exchange(p, 1, 1, t1), DomainError);
}

TEST_CASE("relator_family") {
  Presentation p = oracle::torus();
  CHECK(relator_family(p, 2).size() == 18);
  CHECK(relator_family_size(p, 2) == 18);
  CHECK(relator_family(p, 0).size() == 2);
  Presentation two(2, {kR, w2({1, 1, -2, -2, -2})});
  CHECK(relator_family(two, 0).size() == 6);
  CHECK(relator_family(two, 1).size() == 4 * 5 + 2);
  CHECK(relator_family_size(two, 3) == 4 * 53 + 2);

  auto fam = relator_family(two, 1);
  // Exchange relators first, indexed i, j, d; roots last.
  CHECK(fam[0] == theorem_relator_exchange(two, 1, 1, MixedWord(2, 2)));
  CHECK(fam[1] == theorem_relator_exchange(two, 1, 1, MixedWord::d(2, 2, 1)));
  CHECK(fam[5] == theorem_relator_exchange(two, 1, 2, MixedWord(2, 2)));
  CHECK(fam[20] == theorem_relator_root(two, 1));
  CHECK(fam[21] == theorem_relator_root(two, 2));
  for (const auto& r : fam) CHECK(in_kernel_of_pi(two, r));
}

TEST_CASE("in_kernel_of_pi") {
  Presentation p = oracle::trefoil();
  CHECK_FALSE(in_kernel_of_pi(p, MixedWord::d(2, 1, 1)));
  CHECK(in_kernel_of_pi(p, mixed_commutator(MixedWord::t(2, 1, 1), relator_word(p, 1))));
  CHECK(in_kernel_of_pi(p, MixedWord(2, 1)));
  CHECK_FALSE(in_kernel_of_pi(p, MixedWord::t(2, 1, 1)));
}

TEST_CASE("in_M") {
  Presentation p = oracle::torus();
  PairWord diag(w2({1, 2, 2}), w2({1, 2, 2}));
  CHECK(in_M(p, diag).outcome == WpOutcome::EqualInH);
  CHECK(in_M(p, PairWord(Word(2), kR)).outcome == WpOutcome::EqualInH);
  CHECK(in_M(p, PairWord(w2({1}), w2({2}))).outcome == WpOutcome::NotEqualInH);

  // Products of generators are members, and pi of any mixed word is a member.
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    MixedWord w(2, 1, oracle::random_word(rng, 3, 6));
    auto verdict = in_M(p, pi(p, w));
    CHECK(verdict.outcome == WpOutcome::EqualInH);
  }
}
