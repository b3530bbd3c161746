#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mihailova/word.hpp"

namespace mihailova {

// Finite presentation <x_1..x_n | R_1..R_m>. Relators are kept in the given
// order and may be trivial or duplicated; see is_validated / is_concise.
// Copies share the immutable relator list.
class Presentation {
 public:
  Presentation(int rank, std::vector<Word> relators);

  int rank() const { return data_->rank; }
  int relator_count() const { return static_cast<int>(data_->relators.size()); }
  const std::vector<Word>& relators() const { return data_->relators; }
  // 1-based.
  const Word& relator(int index) const;
  // root(R_i), cached; throws UndefinedRootError for a trivial relator.
  const Word& relator_root(int index) const;

  // Every relator non-trivial (words are reduced by construction).
  bool is_validated() const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.rank() == b.rank() && a.relators() == b.relators();
  }

 private:
  struct Data {
    int rank;
    std::vector<Word> relators;
    std::vector<std::optional<Word>> roots;
  };
  std::shared_ptr<const Data> data_;
};

// The element conjugator * R_relator^sign * conjugator^-1. Serves both as a
// normal-closure certificate factor and as a term of an identity among relations.
struct ConjugatedRelator {
  Word conjugator;
  int relator;
  int sign;

  friend bool operator==(const ConjugatedRelator&, const ConjugatedRelator&) = default;
};

Word value(const Presentation& p, const ConjugatedRelator& term);
Word product_of_values(const Presentation& p, const std::vector<ConjugatedRelator>& terms);

bool is_concise(const Presentation& p);
Presentation concise_refinement(const Presentation& p);

struct ConcisenessWarning {
  int relator;
  std::string message;
};

// One warning per relator conjugate to its own inverse. In a free group this
// can only happen for the trivial word, so a validated presentation yields none.
std::vector<ConcisenessWarning> check_strengthened_conciseness(const Presentation& p);

// Exact test: is `target` an integer combination of `generators`?
bool lattice_contains(const std::vector<std::vector<std::int64_t>>& generators,
                      const std::vector<std::int64_t>& target);

struct SearchBudget {
  std::size_t max_steps = 10000;
  std::size_t max_conjugator_len = 1;
  std::size_t max_word_len = 32;
};

enum class WpOutcome { EqualInH, NotEqualInH, Unknown };

struct WpVerdict {
  WpOutcome outcome = WpOutcome::Unknown;
  // EqualInH: factors whose product is the queried word (may be empty for an
  // external oracle verdict or the trivial word).
  std::vector<ConjugatedRelator> certificate;
  // NotEqualInH: abelianization of the queried word, outside the relator lattice.
  std::vector<std::int64_t> obstruction;
  // Expansions performed by the search.
  std::size_t steps = 0;
};

const char* to_string(WpOutcome outcome);

// Semidecision for w in <<R_1..R_m>>: exact abelian obstruction, then a
// bounded best-first search over cyclic words.
WpVerdict normal_closure_contains(const Presentation& p, const Word& w, const SearchBudget& budget = {});

using MembershipOracle = std::function<WpVerdict(const Presentation&, const Word&)>;

WpVerdict equal_in_H(const Presentation& p, const Word& w1, const Word& w2, const SearchBudget& budget = {});
// Same query answered by a caller-supplied decision procedure for <<R>>.
WpVerdict equal_in_H(const Presentation& p, const Word& w1, const Word& w2, const MembershipOracle& oracle);

// Exact oracle, valid only when the caller knows H is abelian: then <<R>>
// contains the commutator subgroup and membership is lattice membership.
WpVerdict abelian_membership_oracle(const Presentation& p, const Word& w);

// Line-oriented text: `rank <n>`, then `relator <word>` lines; `#` comments.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

}  // namespace mihailova
