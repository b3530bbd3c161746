#include "mihailova/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "mihailova/autf3.hpp"
#include "mihailova/errors.hpp"
#include "mihailova/text.hpp"

namespace mihailova {

std::string format_pair(const PairWord& pair) {
  const Alphabet x = Alphabet::indexed(pair.left.rank());
  return "(" + format_word(pair.left, x) + " , " + format_word(pair.right, x) + ")";
}

PairWord parse_pair(std::string_view text, int rank) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw ParseError("pair must be written '(<word> , <word>)'");
  }
  body = body.substr(1, body.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("pair needs exactly one ','");
  }
  const Alphabet x = Alphabet::indexed(rank);
  return {parse_word(body.substr(0, comma), x), parse_word(body.substr(comma + 1), x)};
}

std::string format_verdict(const WpVerdict& verdict, int rank) {
  const Alphabet x = Alphabet::indexed(rank);
  std::ostringstream out;
  out << to_string(verdict.outcome) << '\n';
  switch (verdict.outcome) {
    case WpOutcome::EqualInH:
      for (const auto& f : verdict.certificate) {
        out << "factor " << f.relator << ' ' << f.sign << ' ' << format_word(f.conjugator, x) << '\n';
      }
      break;
    case WpOutcome::NotEqualInH:
      out << "obstruction";
      for (auto v : verdict.obstruction) out << ' ' << v;
      out << '\n';
      break;
    case WpOutcome::Unknown:
      out << "budget steps " << verdict.steps << '\n';
      break;
  }
  return out.str();
}

WpVerdict parse_verdict(std::string_view text, int rank) {
  const Alphabet x = Alphabet::indexed(rank);
  std::istringstream in{std::string(text)};
  std::string raw;
  WpVerdict v;
  std::size_t line_no = 0;
  bool have_outcome = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto tokens = split_whitespace(line);
    try {
      if (!have_outcome) {
        if (line == "equal-in-H") {
          v.outcome = WpOutcome::EqualInH;
        } else if (line == "not-equal-in-H") {
          v.outcome = WpOutcome::NotEqualInH;
        } else if (line == "unknown") {
          v.outcome = WpOutcome::Unknown;
        } else {
          throw ParseError("unknown verdict '" + std::string(line) + "'");
        }
        have_outcome = true;
      } else if (tokens[0] == "factor" && tokens.size() >= 4) {
        auto word_start = static_cast<std::size_t>(tokens[3].data() - line.data());
        v.certificate.push_back(
            {parse_word(line.substr(word_start), x), std::stoi(std::string(tokens[1])), std::stoi(std::string(tokens[2]))});
      } else if (tokens[0] == "obstruction") {
        for (std::size_t k = 1; k < tokens.size(); ++k) v.obstruction.push_back(std::stoll(std::string(tokens[k])));
      } else if (tokens[0] == "budget" && tokens.size() == 3 && tokens[1] == "steps") {
        v.steps = std::stoull(std::string(tokens[2]));
      } else {
        throw ParseError("unexpected line '" + std::string(line) + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::logic_error&) {
      throw ParseError("bad number", line_no);
    }
  }
  if (!have_outcome) throw ParseError("empty verdict");
  return v;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  const bool concise = is_concise(p);
  const auto warnings = check_strengthened_conciseness(p);
  out << "rank " << p.rank() << ", " << p.relator_count() << " relators\n";
  out << "validated: " << (p.is_validated() ? "yes" : "no") << '\n';
  out << "concise: " << (concise ? "yes" : "no") << "; warnings: ";
  if (warnings.empty()) {
    out << "none\n";
  } else {
    out << warnings.size() << '\n';
    for (const auto& w : warnings) out << "warning: " << w.message << '\n';
  }
  out << "refined:\n" << format_presentation(concise_refinement(p));
  return kExitOk;
}

int cmd_relators(const Config& cfg, bool verify, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  const Alphabet alphabet = Alphabet::mixed(p.rank(), p.relator_count());
  std::size_t failures = 0;
  const auto family = relator_family(p, cfg.max_d_len);
  for (const MixedWord& r : family) {
    out << format_word(r.word(), alphabet) << '\n';
    if (verify && !in_kernel_of_pi(p, r)) ++failures;
  }
  if (!verify) return kExitOk;
  if (failures == 0) {
    out << family.size() << " relators, all in ker(pi)\n";
    return kExitOk;
  }
  out << failures << " of " << family.size() << " relators not in ker(pi)\n";
  return kExitVerificationFailed;
}

int cmd_membership(const Config& cfg, const std::string& pair_text, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  const PairWord pair = parse_pair(pair_text, p.rank());
  out << format_verdict(in_M(p, pair, cfg.search), p.rank());
  return kExitOk;
}

MixedWord parse_mixed(const Presentation& p, const std::string& text) {
  return MixedWord(p.rank(), p.relator_count(), parse_word(text, Alphabet::mixed(p.rank(), p.relator_count())));
}

int cmd_pi(const Config& cfg, const std::string& word_text, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  out << format_pair(pi(p, parse_mixed(p, word_text))) << '\n';
  return kExitOk;
}

int cmd_reduce_identity(const Config& cfg, const std::string& word_text, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  const MixedWord w = parse_mixed(p, word_text);
  const ReductionResult result = reduce_to_empty(p, w, cfg.reduction);
  if (result.certificate) {
    out << format_certificate(p, *result.certificate);
    return kExitOk;
  }
  const ReductionBudget& b = cfg.reduction;
  out << "unknown\n"
      << "budget max_moves=" << b.max_moves << " max_insertions=" << b.max_insertions
      << " max_frontier=" << b.max_frontier << " max_word_len=" << b.max_word_len
      << " expansions=" << result.expansions << " stop=" << result.stop_reason << '\n';
  return kExitOk;
}

int cmd_embed_aut(const Config& cfg, std::ostream& out) {
  const Presentation p = load_presentation(cfg.input_path);
  out << format_endomorphisms(orbit_undecidable_subgroup(p));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mihailova subgroups, Peiffer reductions and Aut(F_3) embeddings", "mihailova"};
  app.require_subcommand(1);
  Config cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text"}));

  std::size_t steps = 0;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-steps", steps, "Search expansion budget");
  };

  auto* check = app.add_subcommand("check", "Validate a presentation and print its concise refinement");
  check->add_option("presentation", cfg.input_path)->required();

  bool verify = false;
  auto* relators = app.add_subcommand("relators", "Enumerate the relator family");
  relators->add_option("presentation", cfg.input_path)->required();
  relators->add_option("--max-d-len", cfg.max_d_len, "Longest parameter d")->capture_default_str();
  relators->add_flag("--verify", verify, "Check each relator lies in ker(pi)");

  std::vector<std::string> operand;
  auto* membership = app.add_subcommand("membership", "Decide (w1, w2) in M(H) within a budget");
  membership->add_option("presentation", cfg.input_path)->required();
  membership->add_option("pair", operand, "(<word> , <word>)")->required();
  add_budget(membership);
  membership->add_option("--max-conjugator-len", cfg.search.max_conjugator_len)->capture_default_str();
  membership->add_option("--max-word-len", cfg.search.max_word_len)->capture_default_str();

  auto* pi_cmd = app.add_subcommand("pi", "Image of a word in d/t letters under pi");
  pi_cmd->add_option("presentation", cfg.input_path)->required();
  pi_cmd->add_option("word", operand)->required();

  auto* reduce = app.add_subcommand("reduce-identity", "Reduce a kernel word to 1 by Peiffer moves");
  reduce->add_option("presentation", cfg.input_path)->required();
  reduce->add_option("word", operand)->required();
  add_budget(reduce);
  reduce->add_option("--budget-insertions", cfg.reduction.max_insertions)->capture_default_str();
  reduce->add_option("--max-frontier", cfg.reduction.max_frontier)->capture_default_str();

  auto* embed = app.add_subcommand("embed-aut", "Automorphisms of F_3 generating the image of M(H)");
  embed->add_option("presentation", cfg.input_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (steps > 0) {
    cfg.search.max_steps = steps;
    cfg.reduction.max_moves = steps;
  }

  try {
    if (*check) return cmd_check(cfg, out);
    if (*relators) return cmd_relators(cfg, verify, out);
    if (*membership) return cmd_membership(cfg, join(operand), out);
    if (*pi_cmd) return cmd_pi(cfg, join(operand), out);
    if (*reduce) return cmd_reduce_identity(cfg, join(operand), out);
    if (*embed) return cmd_embed_aut(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mihailova
