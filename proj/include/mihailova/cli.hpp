#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mihailova/identities.hpp"
#include "mihailova/presentation.hpp"
#include "mihailova/subgroup.hpp"

namespace mihailova {

struct Config {
  SearchBudget search;        // membership
  ReductionBudget reduction;  // reduce-identity
  std::size_t max_d_len = 2;
  std::string input_path;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// `(<word> , <word>)` in x-letters.
std::string format_pair(const PairWord& pair);
PairWord parse_pair(std::string_view text, int rank);

// Verdict line followed by `factor <i> <e> <conjugator>` lines, an
// `obstruction ...` line, or a `budget ...` line.
std::string format_verdict(const WpVerdict& verdict, int rank);
WpVerdict parse_verdict(std::string_view text, int rank);

}  // namespace mihailova
