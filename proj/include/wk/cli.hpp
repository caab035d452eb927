#pragma once

// Command-line front end. The commands live in the library so tests can drive
// them in-process; tools/wkcorr.cpp is a thin main().

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wk/correlators.hpp"
#include "wk/exact_arith.hpp"

namespace wk::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct OutputRecord {
  std::int64_t g = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  ExactRational value;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// All rows with g <= genus_max, ordered by (g, d1).
std::vector<OutputRecord> build_table(std::int64_t genus_max, TwoPointEvaluator& evaluator, Method method);

std::string render_csv(const std::vector<OutputRecord>& records);
std::string render_json(const std::vector<OutputRecord>& records);
/// Parsers throw DomainError on malformed input.
std::vector<OutputRecord> parse_csv(std::string_view text);
std::vector<OutputRecord> parse_json(std::string_view text);

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wk::cli
