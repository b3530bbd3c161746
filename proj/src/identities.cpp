#include "mihailova/identities.hpp"

#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "mihailova/errors.hpp"
#include "mihailova/text.hpp"

namespace mihailova {

using Terms = std::vector<IdentityTerm>;

namespace {

Word relator_power(const Presentation& p, int i, int sign) {
  const Word& r = p.relator(i);
  return sign < 0 ? r.inverse() : r;
}

void check_form(const Presentation& p, const SyllableForm& form) {
  if (form.n != p.rank() || form.m != p.relator_count()) {
    throw AlphabetError("syllable form alphabet does not match the presentation");
  }
  if (form.syllables.size() != form.t_letters.size() + 1) {
    throw PreconditionError("syllable form needs exactly one more syllable than t-letters");
  }
}

void check_pair_position(std::size_t pos, std::size_t l, const char* what) {
  if (pos < 1 || pos + 1 > l) {
    throw IndexError(std::string(what) + " position " + std::to_string(pos) + " outside [1, " +
                     std::to_string(l > 0 ? l - 1 : 0) + "]");
  }
}

Terms exchange_terms(const Presentation& p, const Terms& terms, std::size_t pos) {
  check_pair_position(pos, terms.size(), "exchange");
  Terms out = terms;
  const IdentityTerm& a = terms[pos - 1];
  const IdentityTerm& b = terms[pos];
  Word moved = b.conjugator * relator_power(p, b.relator, -b.sign) * b.conjugator.inverse() * a.conjugator;
  out[pos - 1] = b;
  out[pos] = {std::move(moved), a.relator, a.sign};
  return out;
}

Terms inverse_exchange_terms(const Presentation& p, const Terms& terms, std::size_t pos) {
  check_pair_position(pos, terms.size(), "inverse exchange");
  Terms out = terms;
  const IdentityTerm& a = terms[pos - 1];
  const IdentityTerm& b = terms[pos];
  Word moved = a.conjugator * relator_power(p, a.relator, a.sign) * a.conjugator.inverse() * b.conjugator;
  out[pos - 1] = {std::move(moved), b.relator, b.sign};
  out[pos] = a;
  return out;
}

bool deletable(const Presentation& p, const Terms& terms, std::size_t pos) {
  return (value(p, terms[pos - 1]) * value(p, terms[pos])).empty();
}

Terms delete_terms(const Presentation& p, const Terms& terms, std::size_t pos) {
  check_pair_position(pos, terms.size(), "deletion");
  if (!deletable(p, terms, pos)) {
    throw InapplicableMoveError("terms " + std::to_string(pos) + " and " + std::to_string(pos + 1) +
                                " do not multiply to 1");
  }
  Terms out;
  out.reserve(terms.size() - 2);
  out.insert(out.end(), terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(pos - 1));
  out.insert(out.end(), terms.begin() + static_cast<std::ptrdiff_t>(pos + 1), terms.end());
  return out;
}

Terms insert_terms(const Presentation& p, const Terms& terms, std::size_t pos, const PeifferInsertion& data) {
  if (pos < 1 || pos > terms.size() + 1) {
    throw IndexError("insertion position " + std::to_string(pos) + " outside [1, " +
                     std::to_string(terms.size() + 1) + "]");
  }
  const Word& rho = p.relator_root(data.relator);
  if (data.conjugator.rank() != p.rank()) throw AlphabetError("insertion conjugator has the wrong rank");
  int sign = data.sign < 0 ? -1 : 1;
  Terms out = terms;
  auto at = out.begin() + static_cast<std::ptrdiff_t>(pos - 1);
  at = out.insert(at, IdentityTerm{data.conjugator * power(rho, data.power), data.relator, -sign});
  out.insert(at, IdentityTerm{data.conjugator, data.relator, sign});
  return out;
}

Terms associated_terms(const Presentation& p, const SyllableForm& form) {
  check_form(p, form);
  Terms terms;
  Word acc(p.rank());
  for (std::size_t k = 0; k < form.t_letters.size(); ++k) {
    acc = acc * form.syllables[k];
    terms.push_back({acc, form.t_letters[k].relator, form.t_letters[k].sign});
  }
  acc = acc * form.syllables.back();
  if (!acc.empty() || !product_of_values(p, terms).empty()) {
    throw PreconditionError("word is not in the kernel of pi");
  }
  return terms;
}

SyllableForm form_of_terms(const Presentation& p, const Terms& terms) {
  SyllableForm form{p.rank(), p.relator_count(), {}, {}};
  Word prev(p.rank());
  for (const IdentityTerm& t : terms) {
    form.syllables.push_back(prev.inverse() * t.conjugator);
    form.t_letters.push_back({t.relator, t.sign});
    prev = t.conjugator;
  }
  form.syllables.push_back(prev.inverse());
  return form;
}

const char* move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::Exchange:
      return "exchange";
    case MoveKind::InverseExchange:
      return "inv-exchange";
    case MoveKind::Delete:
      return "delete";
    case MoveKind::Insert:
      return "insert";
  }
  return "?";
}

}  // namespace

IdentitySequence::IdentitySequence(Presentation presentation, std::vector<IdentityTerm> terms)
    : presentation_(std::move(presentation)), terms_(std::move(terms)) {
  for (const IdentityTerm& t : terms_) {
    presentation_.relator(t.relator);
    if (t.conjugator.rank() != presentation_.rank()) throw AlphabetError("term conjugator has the wrong rank");
    if (t.sign != 1 && t.sign != -1) throw PreconditionError("term sign must be +1 or -1");
  }
}

bool is_identity(const IdentitySequence& seq) { return product_of_values(seq.presentation(), seq.terms()).empty(); }

IdentitySequence peiffer_exchange(const IdentitySequence& seq, std::size_t p) {
  return {seq.presentation(), exchange_terms(seq.presentation(), seq.terms(), p)};
}

IdentitySequence peiffer_inverse_exchange(const IdentitySequence& seq, std::size_t p) {
  return {seq.presentation(), inverse_exchange_terms(seq.presentation(), seq.terms(), p)};
}

IdentitySequence peiffer_delete(const IdentitySequence& seq, std::size_t p) {
  return {seq.presentation(), delete_terms(seq.presentation(), seq.terms(), p)};
}

IdentitySequence peiffer_insert(const IdentitySequence& seq, std::size_t p, const PeifferInsertion& data) {
  return {seq.presentation(), insert_terms(seq.presentation(), seq.terms(), p, data)};
}

IdentitySequence associated_identity(const Presentation& p, const SyllableForm& form) {
  return {p, associated_terms(p, form)};
}

IdentitySequence associated_identity(const Presentation& p, const MixedWord& w) {
  return associated_identity(p, decompose(w));
}

SyllableForm syllable_form_of(const IdentitySequence& seq) { return form_of_terms(seq.presentation(), seq.terms()); }

SyllableForm case1_transform(const Presentation& p, const SyllableForm& form, std::size_t pos) {
  associated_terms(p, form);
  check_pair_position(pos, form.l(), "case 1");
  SyllableForm out = form;
  const std::size_t a = pos - 1;
  const Word& u1 = form.syllables[a + 1];
  const TLetter next = form.t_letters[a + 1];
  const Word r = relator_power(p, next.relator, next.sign);
  out.syllables[a] = form.syllables[a] * u1;
  out.syllables[a + 1] = r.inverse() * u1.inverse();
  out.syllables[a + 2] = u1 * r * form.syllables[a + 2];
  std::swap(out.t_letters[a], out.t_letters[a + 1]);
  return out;
}

MixedWord case1_transform(const Presentation& p, const MixedWord& w, std::size_t pos) {
  return recompose(case1_transform(p, decompose(w), pos));
}

SyllableForm inverse_case1_transform(const Presentation& p, const SyllableForm& form, std::size_t pos) {
  associated_terms(p, form);
  check_pair_position(pos, form.l(), "inverse case 1");
  SyllableForm out = form;
  const std::size_t a = pos - 1;
  const Word& u1 = form.syllables[a + 1];
  const TLetter here = form.t_letters[a];
  const Word r = relator_power(p, here.relator, here.sign);
  out.syllables[a] = form.syllables[a] * r * u1;
  out.syllables[a + 1] = u1.inverse() * r.inverse();
  out.syllables[a + 2] = u1 * form.syllables[a + 2];
  std::swap(out.t_letters[a], out.t_letters[a + 1]);
  return out;
}

MixedWord inverse_case1_transform(const Presentation& p, const MixedWord& w, std::size_t pos) {
  return recompose(inverse_case1_transform(p, decompose(w), pos));
}

SyllableForm case2_transform(const Presentation& p, const SyllableForm& form, std::size_t pos) {
  const Terms terms = associated_terms(p, form);
  check_pair_position(pos, form.l(), "case 2");
  const std::size_t a = pos - 1;
  if (!deletable(p, terms, pos)) {
    throw InapplicableMoveError("deletion does not apply at position " + std::to_string(pos));
  }
  const TLetter first = form.t_letters[a];
  const TLetter second = form.t_letters[a + 1];
  if (first.relator != second.relator || first.sign != -second.sign) {
    throw InconsistencyError("cancelling pair uses relators " + std::to_string(first.relator) + " and " +
                             std::to_string(second.relator) + " with signs " + std::to_string(first.sign) +
                             ", " + std::to_string(second.sign) + "; presentation is not concise");
  }
  const Word& middle = form.syllables[a + 1];
  if (!power_exponent(middle, p.relator_root(second.relator))) {
    throw InconsistencyError("middle syllable is not a power of root(r_" + std::to_string(second.relator) + ")");
  }
  SyllableForm out = form;
  out.syllables[a] = form.syllables[a] * middle * form.syllables[a + 2];
  out.syllables.erase(out.syllables.begin() + static_cast<std::ptrdiff_t>(a + 1),
                      out.syllables.begin() + static_cast<std::ptrdiff_t>(a + 3));
  out.t_letters.erase(out.t_letters.begin() + static_cast<std::ptrdiff_t>(a),
                      out.t_letters.begin() + static_cast<std::ptrdiff_t>(a + 2));
  return out;
}

MixedWord case2_transform(const Presentation& p, const MixedWord& w, std::size_t pos) {
  return recompose(case2_transform(p, decompose(w), pos));
}

SyllableForm case3_transform(const Presentation& p, const SyllableForm& form, const InsertionData& data) {
  associated_terms(p, form);
  if (data.position < 1 || data.position > form.l() + 1) {
    throw IndexError("insertion position " + std::to_string(data.position) + " outside [1, " +
                     std::to_string(form.l() + 1) + "]");
  }
  if (data.alpha.n() != p.rank() || data.alpha.m() != p.relator_count()) {
    throw AlphabetError("insertion alpha is over the wrong alphabet");
  }
  const Word alpha = capitalize(data.alpha);
  const Word rho_k = power(p.relator_root(data.relator), data.power);
  const int sign = data.sign < 0 ? -1 : 1;
  const std::size_t a = data.position - 1;

  SyllableForm out = form;
  const Word tail = rho_k.inverse() * alpha.inverse() * form.syllables[a];
  out.syllables[a] = alpha;
  out.syllables.insert(out.syllables.begin() + static_cast<std::ptrdiff_t>(a + 1), {rho_k, tail});
  out.t_letters.insert(out.t_letters.begin() + static_cast<std::ptrdiff_t>(a),
                       {TLetter{data.relator, sign}, TLetter{data.relator, -sign}});
  return out;
}

MixedWord case3_transform(const Presentation& p, const MixedWord& w, const InsertionData& data) {
  return recompose(case3_transform(p, decompose(w), data));
}

PeifferInsertion peiffer_insertion_for(const IdentitySequence& seq, const InsertionData& data) {
  const Presentation& p = seq.presentation();
  if (data.position < 1 || data.position > seq.length() + 1) {
    throw IndexError("insertion position " + std::to_string(data.position) + " out of range");
  }
  Word prefix = data.position == 1 ? Word(p.rank()) : seq.terms()[data.position - 2].conjugator;
  return {data.relator, data.sign < 0 ? -1 : 1, prefix * capitalize(data.alpha), data.power};
}

IdentitySequence apply_move(const IdentitySequence& seq, const Move& move) {
  switch (move.kind) {
    case MoveKind::Exchange:
      return peiffer_exchange(seq, move.position);
    case MoveKind::InverseExchange:
      return peiffer_inverse_exchange(seq, move.position);
    case MoveKind::Delete:
      return peiffer_delete(seq, move.position);
    case MoveKind::Insert:
      if (!move.insertion) throw PreconditionError("insert move without insertion data");
      return peiffer_insert(seq, move.position, peiffer_insertion_for(seq, *move.insertion));
  }
  throw PreconditionError("unknown move kind");
}

SyllableForm apply_move(const Presentation& p, const SyllableForm& form, const Move& move) {
  switch (move.kind) {
    case MoveKind::Exchange:
      return case1_transform(p, form, move.position);
    case MoveKind::InverseExchange:
      return inverse_case1_transform(p, form, move.position);
    case MoveKind::Delete:
      return case2_transform(p, form, move.position);
    case MoveKind::Insert:
      if (!move.insertion) throw PreconditionError("insert move without insertion data");
      return case3_transform(p, form, *move.insertion);
  }
  throw PreconditionError("unknown move kind");
}

namespace {

struct TermsHash {
  std::size_t operator()(const Terms& terms) const noexcept {
    WordHash wh;
    std::size_t h = terms.size();
    for (const IdentityTerm& t : terms) {
      std::size_t x = wh(t.conjugator) ^ (static_cast<std::size_t>(t.relator) * 0x100000001b3ULL) ^
                      static_cast<std::size_t>(t.sign + 2);
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::size_t conjugator_weight(const Terms& terms) {
  std::size_t total = 0;
  for (const IdentityTerm& t : terms) total += t.conjugator.length();
  return total;
}

// Length of the written word u_1 t u_2 ... u_{l+1} for the form of `terms`.
std::size_t written_length(const Terms& terms) {
  std::size_t total = terms.size();
  const Word* prev = nullptr;
  for (const IdentityTerm& t : terms) {
    total += prev ? (prev->inverse() * t.conjugator).length() : t.conjugator.length();
    prev = &t.conjugator;
  }
  if (prev) total += prev->length();
  return total;
}

struct ReductionNode {
  Terms terms;
  std::size_t parent;
  std::optional<Move> move;
  std::size_t insertions;
};

}  // namespace

ReductionResult reduce_to_empty(const Presentation& p, const MixedWord& w, const ReductionBudget& budget) {
  if (!in_kernel_of_pi(p, w)) throw PreconditionError("reduce_to_empty: word is not in the kernel of pi");
  const Terms start = associated_terms(p, decompose(w));

  // Insertion parameters in script order: relator, sign, power, alpha.
  std::vector<InsertionData> insertion_kinds;
  if (budget.max_insertions > 0) {
    const auto alphas = ball(p.rank(), budget.max_alpha_len);
    for (int i = 1; i <= p.relator_count(); ++i) {
      if (p.relator(i).empty()) continue;
      for (int sign : {1, -1}) {
        for (long k = -budget.max_insertion_power; k <= budget.max_insertion_power; ++k) {
          for (const Word& alpha : alphas) {
            insertion_kinds.push_back({0, i, sign, k, MixedWord::from_d_word(alpha, p.relator_count())});
          }
        }
      }
    }
  }

  ReductionResult result;
  std::vector<ReductionNode> nodes;
  std::unordered_set<Terms, TermsHash> visited;
  // (identity length, total conjugator length, insertion order)
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;

  nodes.push_back({start, 0, std::nullopt, 0});
  visited.insert(start);
  frontier.emplace(start.size(), conjugator_weight(start), 0);

  std::optional<std::size_t> goal;
  if (start.empty()) goal = 0;

  auto offer = [&](std::size_t parent, Terms terms, Move move, std::size_t insertions) {
    if (written_length(terms) > budget.max_word_len) return;
    if (!visited.insert(terms).second) return;
    const std::size_t idx = nodes.size();
    const std::size_t len = terms.size();
    const std::size_t weight = conjugator_weight(terms);
    nodes.push_back({std::move(terms), parent, std::move(move), insertions});
    if (len == 0) {
      goal = idx;
      return;
    }
    frontier.emplace(len, weight, idx);
  };

  result.stop_reason = "exhausted";
  while (!goal && !frontier.empty()) {
    if (result.expansions >= budget.max_moves) {
      result.stop_reason = "max_moves";
      break;
    }
    if (frontier.size() > budget.max_frontier) {
      result.stop_reason = "max_frontier";
      break;
    }
    const std::size_t idx = std::get<2>(frontier.top());
    frontier.pop();
    ++result.expansions;
    const Terms terms = nodes[idx].terms;
    const std::size_t used = nodes[idx].insertions;
    const std::size_t l = terms.size();

    for (std::size_t pos = 1; pos < l && !goal; ++pos) {
      if (deletable(p, terms, pos)) offer(idx, delete_terms(p, terms, pos), {MoveKind::Delete, pos, {}}, used);
    }
    for (std::size_t pos = 1; pos < l && !goal; ++pos) {
      offer(idx, exchange_terms(p, terms, pos), {MoveKind::Exchange, pos, {}}, used);
    }
    for (std::size_t pos = 1; pos < l && !goal; ++pos) {
      offer(idx, inverse_exchange_terms(p, terms, pos), {MoveKind::InverseExchange, pos, {}}, used);
    }
    if (used < budget.max_insertions) {
      const IdentitySequence seq(p, terms);
      for (std::size_t pos = 1; pos <= l + 1 && !goal; ++pos) {
        for (InsertionData data : insertion_kinds) {
          data.position = pos;
          Terms next = insert_terms(p, terms, pos, peiffer_insertion_for(seq, data));
          offer(idx, std::move(next), {MoveKind::Insert, pos, data}, used + 1);
        }
      }
    }
  }
  result.nodes = nodes.size();
  if (!goal) return result;

  std::vector<Move> script;
  for (std::size_t i = *goal; i != 0; i = nodes[i].parent) script.push_back(*nodes[i].move);
  std::reverse(script.begin(), script.end());

  ReductionCertificate cert;
  cert.script = std::move(script);
  SyllableForm form = decompose(w);
  IdentitySequence seq(p, start);
  cert.word_trail.push_back(w);
  cert.identity_trail.push_back(seq);
  for (const Move& move : cert.script) {
    form = apply_move(p, form, move);
    seq = apply_move(seq, move);
    if (associated_identity(p, form) != seq) {
      throw std::logic_error("word transform and Peiffer move disagree");
    }
    cert.word_trail.push_back(recompose(form));
    cert.identity_trail.push_back(seq);
  }
  if (!cert.word_trail.back().empty() || !seq.empty()) {
    throw std::logic_error("reduction did not end at the empty word");
  }
  result.certificate = std::move(cert);
  result.stop_reason = "reduced";
  return result;
}

bool verify_certificate(const Presentation& p, const MixedWord& w, const ReductionCertificate& cert) {
  const std::size_t steps = cert.script.size();
  if (cert.word_trail.size() != steps + 1 || cert.identity_trail.size() != steps + 1) return false;
  if (cert.word_trail.front() != w) return false;
  try {
    SyllableForm form = decompose(w);
    IdentitySequence seq = associated_identity(p, form);
    if (seq != cert.identity_trail.front()) return false;
    for (std::size_t k = 0; k < steps; ++k) {
      form = apply_move(p, form, cert.script[k]);
      seq = apply_move(seq, cert.script[k]);
      if (!is_identity(seq)) return false;
      if (associated_identity(p, form) != seq) return false;
      if (seq != cert.identity_trail[k + 1]) return false;
      if (recompose(form) != cert.word_trail[k + 1]) return false;
      if (!in_kernel_of_pi(p, cert.word_trail[k + 1])) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return cert.word_trail.back().empty() && cert.identity_trail.back().empty();
}

std::string format_certificate(const Presentation& p, const ReductionCertificate& cert) {
  const Alphabet alphabet = Alphabet::mixed(p.rank(), p.relator_count());
  std::ostringstream out;
  for (const Move& move : cert.script) {
    out << move_name(move.kind) << ' ' << move.position;
    if (move.kind == MoveKind::Insert && move.insertion) {
      const InsertionData& d = *move.insertion;
      out << ' ' << d.relator << ' ' << d.sign << ' ' << d.power << ' ' << format_word(d.alpha.word(), alphabet);
    }
    out << '\n';
  }
  for (const MixedWord& word : cert.word_trail) out << format_word(word.word(), alphabet) << '\n';
  return out.str();
}

ReductionCertificate parse_certificate(const Presentation& p, std::string_view text) {
  const int n = p.rank();
  const int m = p.relator_count();
  const Alphabet alphabet = Alphabet::mixed(n, m);
  ReductionCertificate cert;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto to_int = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      long v = std::stol(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + std::string(s) + "'", line_no);
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto tokens = split_whitespace(line);
    std::optional<MoveKind> kind;
    if (tokens[0] == "exchange") kind = MoveKind::Exchange;
    if (tokens[0] == "inv-exchange") kind = MoveKind::InverseExchange;
    if (tokens[0] == "delete") kind = MoveKind::Delete;
    if (tokens[0] == "insert") kind = MoveKind::Insert;
    if (kind) {
      if (!cert.word_trail.empty()) throw ParseError("move after the word trail started", line_no);
      if (tokens.size() < 2) throw ParseError("missing position", line_no);
      long pos = to_int(tokens[1]);
      if (pos < 1) throw ParseError("position must be positive", line_no);
      Move move{*kind, static_cast<std::size_t>(pos), std::nullopt};
      if (*kind == MoveKind::Insert) {
        if (tokens.size() < 6) throw ParseError("expected 'insert p i e k <alpha>'", line_no);
        auto alpha_start = static_cast<std::size_t>(tokens[5].data() - line.data());
        MixedWord mixed_alpha(n, m);
        try {
          mixed_alpha = MixedWord(n, m, parse_word(line.substr(alpha_start), alphabet));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_no);
        }
        if (!mixed_alpha.is_d_only()) throw ParseError("insertion alpha must be a d-word", line_no);
        move.insertion = InsertionData{move.position, static_cast<int>(to_int(tokens[2])),
                                       static_cast<int>(to_int(tokens[3])), to_int(tokens[4]), mixed_alpha};
      } else if (tokens.size() != 2) {
        throw ParseError("unexpected tokens after position", line_no);
      }
      cert.script.push_back(std::move(move));
      continue;
    }
    try {
      cert.word_trail.emplace_back(n, m, parse_word(line, alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (cert.word_trail.empty()) throw ParseError("certificate has no word trail");

  // Rebuild the identity trail by replaying the script.
  try {
    SyllableForm form = decompose(cert.word_trail.front());
    IdentitySequence seq = associated_identity(p, form);
    cert.identity_trail.push_back(seq);
    for (const Move& move : cert.script) {
      seq = apply_move(seq, move);
      cert.identity_trail.push_back(seq);
    }
  } catch (const Error& e) {
    throw ParseError(std::string("certificate does not replay: ") + e.what());
  }
  return cert;
}

std::string format_identity(const IdentitySequence& seq) {
  const Alphabet alphabet = Alphabet::indexed(seq.presentation().rank());
  if (seq.empty()) return "( )";
  std::string out = "(";
  for (std::size_t k = 0; k < seq.length(); ++k) {
    const IdentityTerm& t = seq.terms()[k];
    if (k > 0) out += ", ";
    out += "[" + format_word(t.conjugator, alphabet) + "] R" + std::to_string(t.relator) +
           (t.sign < 0 ? "^-1" : "");
  }
  return out + ")";
}

}  // namespace mihailova
