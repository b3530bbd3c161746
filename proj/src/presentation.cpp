#include "mihailova/presentation.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "mihailova/errors.hpp"
#include "mihailova/text.hpp"

namespace mihailova {

Presentation::Presentation(int rank, std::vector<Word> relators) {
  if (rank < 1) throw AlphabetError("presentation rank must be positive");
  auto data = std::make_shared<Data>();
  data->rank = rank;
  for (const Word& r : relators) {
    if (r.rank() != rank) throw AlphabetError("relator rank differs from presentation rank");
    data->roots.push_back(r.empty() ? std::nullopt : std::optional<Word>(root(r).root));
  }
  data->relators = std::move(relators);
  data_ = std::move(data);
}

const Word& Presentation::relator(int index) const {
  if (index < 1 || index > relator_count()) {
    throw IndexError("relator index " + std::to_string(index) + " outside [1, " +
                     std::to_string(relator_count()) + "]");
  }
  return data_->relators[static_cast<std::size_t>(index - 1)];
}

const Word& Presentation::relator_root(int index) const {
  relator(index);
  const auto& r = data_->roots[static_cast<std::size_t>(index - 1)];
  if (!r) throw UndefinedRootError("relator " + std::to_string(index) + " is trivial");
  return *r;
}

bool Presentation::is_validated() const {
  for (const Word& r : relators()) {
    if (r.empty()) return false;
  }
  return true;
}

Word value(const Presentation& p, const ConjugatedRelator& term) {
  const Word& r = p.relator(term.relator);
  return term.conjugator * (term.sign < 0 ? r.inverse() : r) * term.conjugator.inverse();
}

Word product_of_values(const Presentation& p, const std::vector<ConjugatedRelator>& terms) {
  Word acc(p.rank());
  for (const auto& t : terms) acc = acc * value(p, t);
  return acc;
}

namespace {

bool conjugate_or_inverse(const Word& a, const Word& b) {
  return are_conjugate(a, b) || are_conjugate(a, b.inverse());
}

}  // namespace

bool is_concise(const Presentation& p) {
  const auto& rs = p.relators();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].empty()) return false;
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (conjugate_or_inverse(rs[i], rs[j])) return false;
    }
  }
  return true;
}

Presentation concise_refinement(const Presentation& p) {
  std::vector<Word> kept;
  for (const Word& r : p.relators()) {
    if (r.empty()) continue;
    bool duplicate = false;
    for (const Word& k : kept) {
      if (conjugate_or_inverse(r, k)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(r);
  }
  return Presentation(p.rank(), std::move(kept));
}

std::vector<ConcisenessWarning> check_strengthened_conciseness(const Presentation& p) {
  std::vector<ConcisenessWarning> out;
  for (int i = 1; i <= p.relator_count(); ++i) {
    const Word& r = p.relator(i);
    if (are_conjugate(r, r.inverse())) {
      out.push_back({i, "relator " + std::to_string(i) +
                            " is conjugate to its own inverse; deletions of same-sign pairs are not excluded"});
    }
  }
  return out;
}

bool lattice_contains(const std::vector<std::vector<std::int64_t>>& generators,
                      const std::vector<std::int64_t>& target) {
  using boost::multiprecision::cpp_int;
  const std::size_t cols = target.size();
  std::vector<std::vector<cpp_int>> rows;
  for (const auto& g : generators) {
    if (g.size() != cols) throw AlphabetError("lattice generator has wrong dimension");
    rows.emplace_back(g.begin(), g.end());
  }

  // Row echelon form over the integers via gcd row operations.
  std::size_t pivot_row = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        cpp_int q = rows[r][c] / rows[pivot_row][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) {
        pivots.emplace_back(pivot_row, c);
        ++pivot_row;
        break;
      }
    }
  }

  std::vector<cpp_int> t(target.begin(), target.end());
  for (auto [r, c] : pivots) {
    if (t[c] % rows[r][c] != 0) return false;
    cpp_int q = t[c] / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) t[k] -= q * rows[r][k];
  }
  for (const auto& x : t) {
    if (x != 0) return false;
  }
  return true;
}

const char* to_string(WpOutcome outcome) {
  switch (outcome) {
    case WpOutcome::EqualInH:
      return "equal-in-H";
    case WpOutcome::NotEqualInH:
      return "not-equal-in-H";
    case WpOutcome::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<std::vector<std::int64_t>> relator_lattice(const Presentation& p) {
  std::vector<std::vector<std::int64_t>> gens;
  for (const Word& r : p.relators()) gens.push_back(abelianize(r));
  return gens;
}

// A conjugate z R^s z^-1 offered as a left multiplier during the search.
struct Block {
  ConjugatedRelator factor;
  Word value;
};

// Expansion order: relator index, sign, conjugator in length-lex order. The
// conjugators are the ball of the budget radius together with the inverse
// prefixes of R^s, so every cyclic permutation of R^s is available.
std::vector<Block> make_blocks(const Presentation& p, std::size_t max_conjugator_len) {
  std::vector<Block> blocks;
  std::unordered_set<Word, WordHash> seen;
  const auto short_conjugators = ball(p.rank(), max_conjugator_len);
  for (int i = 1; i <= p.relator_count(); ++i) {
    const Word& r = p.relator(i);
    if (r.empty()) continue;
    for (int sign : {1, -1}) {
      Word rs = sign > 0 ? r : r.inverse();
      std::vector<Word> conjugators = short_conjugators;
      for (std::size_t k = 1; k < rs.length(); ++k) conjugators.push_back(rs.slice(0, k).inverse());
      std::sort(conjugators.begin(), conjugators.end());
      conjugators.erase(std::unique(conjugators.begin(), conjugators.end()), conjugators.end());
      for (const Word& z : conjugators) {
        ConjugatedRelator f{z, i, sign};
        Word v = value(p, f);
        if (seen.insert(v).second) blocks.push_back({std::move(f), std::move(v)});
      }
    }
  }
  return blocks;
}

struct SearchNode {
  Word core;
  std::size_t parent;
  std::size_t rotation;
  std::size_t block;
};

}  // namespace

WpVerdict normal_closure_contains(const Presentation& p, const Word& w, const SearchBudget& budget) {
  if (w.rank() != p.rank()) throw AlphabetError("word rank differs from presentation rank");
  WpVerdict verdict;
  if (w.empty()) {
    verdict.outcome = WpOutcome::EqualInH;
    return verdict;
  }
  if (!lattice_contains(relator_lattice(p), abelianize(w))) {
    verdict.outcome = WpOutcome::NotEqualInH;
    verdict.obstruction = abelianize(w);
    return verdict;
  }

  const std::vector<Block> blocks = make_blocks(p, budget.max_conjugator_len);
  const CyclicReduction start = cyclic_reduce(w);

  // Nodes are cyclically reduced words; w is in <<R>> iff any conjugate is,
  // so visited states are identified up to rotation.
  std::vector<SearchNode> nodes;
  std::unordered_set<Word, WordHash> visited;
  using Entry = std::pair<std::size_t, std::size_t>;  // (length, node index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  nodes.push_back({start.core, 0, 0, 0});
  visited.insert(least_rotation(start.core));
  frontier.emplace(start.core.length(), 0);

  std::size_t goal = 0;
  bool found = false;
  while (!frontier.empty() && !found) {
    if (verdict.steps >= budget.max_steps) break;
    auto [len, idx] = frontier.top();
    frontier.pop();
    ++verdict.steps;
    const Word y = nodes[idx].core;
    for (std::size_t k = 0; k < y.length() && !found; ++k) {
      const Word r = rotate(y, k);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        Word next = cyclic_reduce(blocks[b].value * r).core;
        if (next.length() > budget.max_word_len) continue;
        if (!visited.insert(least_rotation(next)).second) continue;
        nodes.push_back({next, idx, k, b});
        if (next.empty()) {
          goal = nodes.size() - 1;
          found = true;
          break;
        }
        frontier.emplace(next.length(), nodes.size() - 1);
      }
    }
  }
  if (!found) return verdict;

  std::vector<std::size_t> path;
  for (std::size_t i = goal; i != 0; i = nodes[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());

  // Step y -> y' uses y = a r a^-1, f r = c y' c^-1, hence
  // y = (a f^-1 a^-1) (a c) y' (a c)^-1; accumulate the outer conjugator.
  Word outer = start.conjugator;
  for (std::size_t i : path) {
    const SearchNode& node = nodes[i];
    const Word& y = nodes[node.parent].core;
    const Block& f = blocks[node.block];
    Word a = y.slice(0, node.rotation);
    Word r = rotate(y, node.rotation);
    Word c = cyclic_reduce(f.value * r).conjugator;
    verdict.certificate.push_back({outer * a * f.factor.conjugator, f.factor.relator, -f.factor.sign});
    outer = outer * a * c;
  }
  if (product_of_values(p, verdict.certificate) != w) {
    throw std::logic_error("normal closure certificate does not multiply out to the query");
  }
  verdict.outcome = WpOutcome::EqualInH;
  return verdict;
}

WpVerdict equal_in_H(const Presentation& p, const Word& w1, const Word& w2, const SearchBudget& budget) {
  return normal_closure_contains(p, w1 * w2.inverse(), budget);
}

WpVerdict equal_in_H(const Presentation& p, const Word& w1, const Word& w2, const MembershipOracle& oracle) {
  return oracle(p, w1 * w2.inverse());
}

WpVerdict abelian_membership_oracle(const Presentation& p, const Word& w) {
  WpVerdict v;
  if (lattice_contains(relator_lattice(p), abelianize(w))) {
    v.outcome = WpOutcome::EqualInH;
  } else {
    v.outcome = WpOutcome::NotEqualInH;
    v.obstruction = abelianize(w);
  }
  return v;
}

Presentation parse_presentation(std::string_view text) {
  std::optional<int> rank;
  std::vector<std::pair<std::size_t, std::string>> relator_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto tokens = split_whitespace(line);
    if (tokens[0] == "rank") {
      if (rank) throw ParseError("duplicate rank line", line_no);
      if (tokens.size() != 2) throw ParseError("expected 'rank <n>'", line_no);
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(std::string(tokens[1]), &used);
        if (used != tokens[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("bad rank '" + std::string(tokens[1]) + "'", line_no);
      }
      if (n < 1) throw ParseError("rank must be positive", line_no);
      rank = n;
    } else if (tokens[0] == "relator") {
      if (!rank) throw ParseError("relator before rank line", line_no);
      relator_lines.emplace_back(line_no, std::string(trim(line.substr(7))));
    } else {
      throw ParseError("unknown directive '" + std::string(tokens[0]) + "'", line_no);
    }
  }
  if (!rank) throw ParseError("missing rank line");
  const Alphabet alphabet = Alphabet::indexed(*rank);
  std::vector<Word> relators;
  for (const auto& [ln, body] : relator_lines) {
    try {
      relators.push_back(parse_word(body, alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return Presentation(*rank, std::move(relators));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  const Alphabet alphabet = Alphabet::indexed(p.rank());
  std::string out = "rank " + std::to_string(p.rank()) + "\n";
  for (const Word& r : p.relators()) out += "relator " + format_word(r, alphabet) + "\n";
  return out;
}

}  // namespace mihailova
