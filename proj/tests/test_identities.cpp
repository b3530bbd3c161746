#include <doctest.h>

#include "mihailova/errors.hpp"
#include "mihailova/identities.hpp"
#include "mihailova/text.hpp"
#include "oracles.hpp"

using namespace mihailova;

namespace {

Word w2(std::initializer_list<int> letters) { return Word(2, letters); }
const Word kR = Word(2, {1, 2, -1, -2});

MixedWord mixed(const Presentation& p, const char* text) {
  return MixedWord(p.rank(), p.relator_count(), parse_word(text, Alphabet::mixed(p.rank(), p.relator_count())));
}

IdentitySequence random_identity(std::mt19937& rng, const Presentation& p, std::size_t max_factors) {
  return associated_identity(p, oracle::random_kernel_word(rng, p, max_factors, 2));
}

}  // namespace

TEST_CASE("is_identity") {
  Presentation p = oracle::torus();
  CHECK(is_identity(IdentitySequence(p, {})));
  CHECK(is_identity(IdentitySequence(p, {{Word(2), 1, 1}, {Word(2), 1, -1}})));
  CHECK_FALSE(is_identity(IdentitySequence(p, {{Word(2), 1, 1}})));
  CHECK_THROWS_AS(IdentitySequence(p, {{Word(2), 1, 0}}), PreconditionError);
}

TEST_CASE("exchange and inverse exchange") {
  Presentation p = oracle::torus();
  Word v = w2({2, 1});
  IdentitySequence pair(p, {{v, 1, 1}, {v, 1, -1}});
  auto ex = peiffer_exchange(pair, 1);
  CHECK(is_identity(ex));
  CHECK(peiffer_inverse_exchange(ex, 1) == pair);
  CHECK_THROWS_AS(peiffer_exchange(pair, 2), IndexError);
  CHECK_THROWS_AS(peiffer_exchange(pair, 0), IndexError);

  std::mt19937 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto seq = random_identity(rng, p, 3);
    for (std::size_t pos = 1; pos < seq.length(); ++pos) {
      auto e = peiffer_exchange(seq, pos);
      CHECK(e.length() == seq.length());
      CHECK(is_identity(e));
      CHECK(peiffer_inverse_exchange(e, pos) == seq);
      CHECK(peiffer_exchange(peiffer_inverse_exchange(seq, pos), pos) == seq);
      // The moved values are conjugates of the originals.
      CHECK(value(p, e.terms()[pos - 1]) == value(p, seq.terms()[pos]));
      CHECK(are_conjugate(value(p, e.terms()[pos]), value(p, seq.terms()[pos - 1])));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("delete and insert") {
  Presentation p = oracle::torus();
  IdentitySequence pair(p, {{Word(2), 1, 1}, {Word(2), 1, -1}});
  CHECK(peiffer_delete(pair, 1).empty());
  IdentitySequence same(p, {{Word(2), 1, 1}, {Word(2), 1, 1}});
  CHECK_THROWS_AS(peiffer_delete(same, 1), InapplicableMoveError);

  Word u = w2({1});
  IdentitySequence four(p, {{u, 1, 1}, {Word(2), 1, 1}, {Word(2), 1, -1}, {u, 1, -1}});
  REQUIRE(is_identity(four));
  auto two = peiffer_delete(four, 2);
  CHECK(two == IdentitySequence(p, {{u, 1, 1}, {u, 1, -1}}));

  auto k0 = peiffer_insert(IdentitySequence(p, {}), 1, {1, -1, u, 0});
  CHECK(k0 == IdentitySequence(p, {{u, 1, -1}, {u, 1, 1}}));
  CHECK_THROWS_AS(peiffer_insert(pair, 4, {1, 1, u, 0}), IndexError);

  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto seq = random_identity(rng, p, 2);
    PeifferInsertion data{1, trial % 2 ? 1 : -1, oracle::random_word(rng, 2, 4), trial % 5 - 2};
    for (std::size_t pos = 1; pos <= seq.length() + 1; ++pos) {
      auto ins = peiffer_insert(seq, pos, data);
      CHECK(ins.length() == seq.length() + 2);
      CHECK(is_identity(ins));
      CHECK(peiffer_delete(ins, pos) == seq);
    }
  }
}

TEST_CASE("associated identity") {
  Presentation p = oracle::torus();
  CHECK(associated_identity(p, MixedWord(2, 1)).empty());
  CHECK_THROWS_AS(associated_identity(p, mixed(p, "d1")), PreconditionError);
  CHECK_THROWS_AS(associated_identity(p, mixed(p, "t1")), PreconditionError);

  MixedWord w = mixed_commutator(MixedWord::t(2, 1, 1), relator_word(p, 1));
  auto seq = associated_identity(p, w);
  CHECK(seq == IdentitySequence(p, {{Word(2), 1, -1}, {kR.inverse(), 1, 1}}));
  CHECK(is_identity(seq));

  std::mt19937 rng(13);
  for (Presentation q : {oracle::torus(), oracle::trefoil()}) {
    for (int trial = 0; trial < 100; ++trial) {
      MixedWord k = oracle::random_kernel_word(rng, q, 3, 2);
      auto id = associated_identity(q, k);
      CHECK(is_identity(id));
      auto form = syllable_form_of(id);
      CHECK(recompose(form) == k);
      CHECK(associated_identity(q, form) == id);
    }
  }
}

TEST_CASE("case 1 explicit torus instance") {
  Presentation p = oracle::torus();
  MixedWord d1 = MixedWord::d(2, 1, 1);
  MixedWord t1 = MixedWord::t(2, 1, 1);
  MixedWord w = mixed_commutator(t1, d1.inverse() * t1.inverse() * relator_word(p, 1) * d1);
  auto form = decompose(w);
  REQUIRE(form.l() == 4);
  auto before = associated_identity(p, form);
  for (std::size_t pos = 1; pos < form.l(); ++pos) {
    auto after = case1_transform(p, form, pos);
    CHECK(associated_identity(p, after) == peiffer_exchange(before, pos));
    CHECK(in_kernel_of_pi(p, recompose(after)));
    CHECK(inverse_case1_transform(p, after, pos) == form);
  }
  CHECK_THROWS_AS(case1_transform(p, form, 4), IndexError);
}

TEST_CASE("case 1 reduction may merge t-letters") {
  Presentation p = oracle::torus();
  MixedWord w = mixed_commutator(MixedWord::t(2, 1, 1), relator_word(p, 1));
  auto form = decompose(w);
  auto moved = case1_transform(p, form, 1);
  CHECK(moved.l() == 2);
  CHECK(associated_identity(p, moved) == peiffer_exchange(associated_identity(p, form), 1));
  CHECK(case1_transform(p, w, 1).empty());
}

TEST_CASE("case transforms agree with Peiffer moves") {
  std::mt19937 rng(31);
  for (Presentation p : {oracle::torus(), oracle::trefoil()}) {
    for (int trial = 0; trial < 100; ++trial) {
      MixedWord w = oracle::random_kernel_word(rng, p, 3, 2);
      auto form = decompose(w);
      auto id = associated_identity(p, form);
      for (std::size_t pos = 1; pos < form.l(); ++pos) {
        auto c1 = case1_transform(p, form, pos);
        CHECK(associated_identity(p, c1) == peiffer_exchange(id, pos));
        CHECK(inverse_case1_transform(p, c1, pos) == form);
        auto c1i = inverse_case1_transform(p, form, pos);
        CHECK(associated_identity(p, c1i) == peiffer_inverse_exchange(id, pos));
        CHECK(pi(p, recompose(c1)).is_trivial());

        bool deletable = product_of_values(p, {id.terms()[pos - 1], id.terms()[pos]}).empty();
        if (deletable) {
          auto c2 = case2_transform(p, form, pos);
          CHECK(c2.l() + 2 == form.l());
          CHECK(associated_identity(p, c2) == peiffer_delete(id, pos));
        } else {
          CHECK_THROWS_AS(case2_transform(p, form, pos), InapplicableMoveError);
        }
      }
      for (std::size_t pos = 1; pos <= form.l() + 1; ++pos) {
        InsertionData data{pos, 1, trial % 2 ? 1 : -1, trial % 3 - 1,
                           MixedWord::from_d_word(oracle::random_word(rng, 2, 2), 1)};
        auto c3 = case3_transform(p, form, data);
        CHECK(associated_identity(p, c3) == peiffer_insert(id, pos, peiffer_insertion_for(id, data)));
        CHECK(pi(p, recompose(c3)).is_trivial());
        CHECK(recompose(case2_transform(p, c3, pos)) == w);
      }
    }
  }
}

TEST_CASE("case 2 and case 3 examples") {
  Presentation p = oracle::torus();
  MixedWord w = mixed_commutator(MixedWord::t(2, 1, 1), relator_word(p, 1));
  CHECK(case2_transform(p, w, 1).empty());

  MixedWord plain(2, 1);
  InsertionData data{1, 1, 1, 0, MixedWord(2, 1)};
  MixedWord spliced = case3_transform(p, plain, data);
  CHECK(spliced.empty());
  CHECK(case3_transform(p, decompose(plain), data).l() == 2);

  // Two cancelling terms with different relators signal a non-concise presentation.
  Presentation dup(2, {kR, kR});
  MixedWord t1 = MixedWord::t(2, 2, 1);
  MixedWord t2 = MixedWord::t(2, 2, 2);
  MixedWord bad = t1 * t2.inverse();
  CHECK_THROWS_AS(case2_transform(dup, bad, 1), InconsistencyError);
}

TEST_CASE("reduce_to_empty") {
  Presentation p = oracle::torus();
  MixedWord root_rel = theorem_relator_root(p, 1);
  auto res = reduce_to_empty(p, root_rel);
  REQUIRE(res.certificate);
  CHECK(res.certificate->script.size() <= 2);
  CHECK(res.certificate->word_trail.back().empty());
  CHECK(verify_certificate(p, root_rel, *res.certificate));

  CHECK_THROWS_AS(reduce_to_empty(p, mixed(p, "d1")), PreconditionError);

  auto empty = reduce_to_empty(p, MixedWord(2, 1));
  REQUIRE(empty.certificate);
  CHECK(empty.certificate->script.empty());

  std::mt19937 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    MixedWord d = MixedWord::from_d_word(oracle::random_word(rng, 2, 2), 1);
    MixedWord a = theorem_relator_exchange(p, 1, 1, d);
    MixedWord c = MixedWord::from_d_word(oracle::random_word(rng, 2, 1), 1);
    MixedWord w = c.inverse() * a * c * root_rel;
    auto r = reduce_to_empty(p, w);
    REQUIRE(r.certificate);
    const auto& cert = *r.certificate;
    CHECK(cert.word_trail.size() == cert.script.size() + 1);
    CHECK(cert.identity_trail.size() == cert.script.size() + 1);
    CHECK(cert.identity_trail.back().empty());
    for (const auto& wt : cert.word_trail) CHECK(in_kernel_of_pi(p, wt));
    CHECK(verify_certificate(p, w, cert));

    auto parsed = parse_certificate(p, format_certificate(p, cert));
    CHECK(parsed.script == cert.script);
    CHECK(parsed.word_trail == cert.word_trail);
    CHECK(parsed.identity_trail == cert.identity_trail);
  }
}

TEST_CASE("reduce_to_empty respects its budget") {
  Presentation p = oracle::torus();
  MixedWord d = MixedWord::from_d_word(w2({1, 2}), 1);
  MixedWord w = theorem_relator_exchange(p, 1, 1, d) * theorem_relator_root(p, 1);
  ReductionBudget tiny;
  tiny.max_moves = 1;
  auto r = reduce_to_empty(p, w, tiny);
  CHECK_FALSE(r.certificate);
  CHECK(r.stop_reason == "max_moves");
}

TEST_CASE("certificate text") {
  Presentation p = oracle::torus();
  MixedWord w = theorem_relator_root(p, 1);
  auto r = reduce_to_empty(p, w);
  REQUIRE(r.certificate);
  std::string text = format_certificate(p, *r.certificate);
  CHECK(text.find("delete 1") != std::string::npos);
  CHECK(text.substr(text.size() - 2) == "1\n");
  CHECK_THROWS_AS(parse_certificate(p, "delete 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate(p, "jump 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate(p, "delete 1\nt1 d1\n1\n"), ParseError);

  std::string insert_text =
      "insert 1 1 1 0 1\n"
      "1\n"
      "1\n";
  auto cert = parse_certificate(p, insert_text);
  CHECK(cert.script.size() == 1);
  CHECK(cert.script[0].kind == MoveKind::Insert);
  CHECK(format_identity(IdentitySequence(p, {})) == "( )");
}
