#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mihailova/presentation.hpp"
#include "mihailova/subgroup.hpp"

namespace mihailova {

// Term U R_i^e U^-1 of an identity among relations.
using IdentityTerm = ConjugatedRelator;

// Ordered conjugated relators. The identity property (product is trivial) is
// not enforced on construction; see is_identity.
class IdentitySequence {
 public:
  IdentitySequence(Presentation presentation, std::vector<IdentityTerm> terms);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<IdentityTerm>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const IdentitySequence& a, const IdentitySequence& b) {
    return a.terms_ == b.terms_ && a.presentation_ == b.presentation_;
  }

 private:
  Presentation presentation_;
  std::vector<IdentityTerm> terms_;
};

bool is_identity(const IdentitySequence& seq);

// Positions are 1-based, as in `exchange p`.
//
// (A, B) -> (B, B^-1 A B); the moved term gets conjugator U_{p+1} R^-e U_{p+1}^-1 U_p.
IdentitySequence peiffer_exchange(const IdentitySequence& seq, std::size_t p);
// (A, B) -> (A B A^-1, A).
IdentitySequence peiffer_inverse_exchange(const IdentitySequence& seq, std::size_t p);
// Removes terms p, p+1; their product must be trivial.
IdentitySequence peiffer_delete(const IdentitySequence& seq, std::size_t p);

struct PeifferInsertion {
  int relator;
  int sign;
  Word conjugator;
  long power;
};

// Inserts (V R^e V^-1) and (V s^k R^-e s^-k V^-1), s = root(R), before
// position p in [1, l+1].
IdentitySequence peiffer_insert(const IdentitySequence& seq, std::size_t p, const PeifferInsertion& data);

// Terms (U_1..U_k capitalized, i_k, e_k) for a written word u_1 t u_2 ... in ker pi.
IdentitySequence associated_identity(const Presentation& p, const SyllableForm& form);
IdentitySequence associated_identity(const Presentation& p, const MixedWord& w);

// The written word whose associated identity is `seq`. Inverse of
// associated_identity on kernel forms.
SyllableForm syllable_form_of(const IdentitySequence& seq);

// Word transforms of the kernel inclusion proof. The form overloads are exact:
// associated_identity(transform(form)) equals the matching Peiffer move. The
// MixedWord overloads freely reduce the result, which may merge t-letters.
SyllableForm case1_transform(const Presentation& p, const SyllableForm& form, std::size_t pos);
MixedWord case1_transform(const Presentation& p, const MixedWord& w, std::size_t pos);
// Word counterpart of peiffer_inverse_exchange; case1 undoes it exactly.
SyllableForm inverse_case1_transform(const Presentation& p, const SyllableForm& form, std::size_t pos);
MixedWord inverse_case1_transform(const Presentation& p, const MixedWord& w, std::size_t pos);
SyllableForm case2_transform(const Presentation& p, const SyllableForm& form, std::size_t pos);
MixedWord case2_transform(const Presentation& p, const MixedWord& w, std::size_t pos);

// Splice alpha t_i^e rho^k t_i^-e rho^-k alpha^-1 in front of syllable u_p,
// rho = root(r_i).
struct InsertionData {
  std::size_t position;
  int relator;
  int sign;
  long power;
  MixedWord alpha;

  friend bool operator==(const InsertionData&, const InsertionData&) = default;
};

SyllableForm case3_transform(const Presentation& p, const SyllableForm& form, const InsertionData& data);
MixedWord case3_transform(const Presentation& p, const MixedWord& w, const InsertionData& data);

// Identity-side parameters of a case-3 splice: V = (U_1..U_{p-1}) * alpha.
PeifferInsertion peiffer_insertion_for(const IdentitySequence& seq, const InsertionData& data);

enum class MoveKind { Exchange, InverseExchange, Delete, Insert };

struct Move {
  MoveKind kind;
  std::size_t position;
  std::optional<InsertionData> insertion;

  friend bool operator==(const Move&, const Move&) = default;
};

IdentitySequence apply_move(const IdentitySequence& seq, const Move& move);
SyllableForm apply_move(const Presentation& p, const SyllableForm& form, const Move& move);

struct ReductionBudget {
  std::size_t max_moves = 200000;
  std::size_t max_insertions = 0;
  std::size_t max_frontier = 2000000;
  std::size_t max_word_len = 256;
  // Insertion parameters tried when insertions are allowed.
  long max_insertion_power = 1;
  std::size_t max_alpha_len = 0;
};

struct ReductionCertificate {
  std::vector<Move> script;
  // Freely reduced words, from the input to the empty word.
  std::vector<MixedWord> word_trail;
  // From associated_identity(input) to the empty identity.
  std::vector<IdentitySequence> identity_trail;
};

struct ReductionResult {
  std::optional<ReductionCertificate> certificate;
  std::size_t expansions = 0;
  std::size_t nodes = 0;
  // "reduced", "max_moves", "max_frontier" or "exhausted".
  std::string stop_reason;
};

// Best-first search for Peiffer moves carrying associated_identity(w) to the
// empty identity; throws PreconditionError if w is not in ker pi.
ReductionResult reduce_to_empty(const Presentation& p, const MixedWord& w, const ReductionBudget& budget = {});

// Replays the script from w and checks every trail invariant.
bool verify_certificate(const Presentation& p, const MixedWord& w, const ReductionCertificate& cert);

// Script lines (`exchange p`, `inv-exchange p`, `delete p`,
// `insert p i e k <alpha>`) followed by the word trail, one word per line.
std::string format_certificate(const Presentation& p, const ReductionCertificate& cert);
// Parses the text and rebuilds the identity trail by replay; throws ParseError
// if the text is malformed or does not replay.
ReductionCertificate parse_certificate(const Presentation& p, std::string_view text);

std::string format_identity(const IdentitySequence& seq);

}  // namespace mihailova
