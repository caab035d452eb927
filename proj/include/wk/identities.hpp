#pragma once

// Instance-by-instance machine checks of the coefficient identity, its
// telescoping step, and the equivalence of the two closed forms.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wk/correlators.hpp"
#include "wk/exact_arith.hpp"

namespace wk {

/// Order here is the report sort order.
enum class IdentityId {
  kLemma5,           // C_g b(g,k) = sum_{l=0}^{k+1} a(l-1, 3g-l)
  kIncrement6,       // C_g (b(g,k) - b(g,k-1)) = a(k, 3g-k-1)
  kEquivalence7,     // BDY (1,1) case vs Zograf bracket form, k = 3g1+1
  kEquivalence8_9,   // BDY (2,0) case vs Zograf bracket form, k = 3g1+2
  kReducedSum,       // sum_{l=0}^{k} (k+1-l) a(l-1,3g-l) = C_g sum_{i=-1}^{k-1} b(g,i)
  kElementarySum,    // the weighted sum rewritten as a double sum
  kBracketBridge,    // (6g-3)/(6g-1) = b(g,-1) + b(g,0)
  kValueEquality,    // two_point_bdy vs two_point_zograf
  kSymmetry,         // bdy(d1,d2) vs bdy(d2,d1)
  kReflection,       // zograf(g,k) vs zograf(g,3g-1-k)
  kOracleAgreement,  // DVV recursion vs the closed forms
};

inline constexpr std::size_t kIdentityCount = 11;

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

struct VerificationReport {
  IdentityId identity = IdentityId::kLemma5;
  std::vector<std::int64_t> params;  // (g) or (g, k), k or d1 as appropriate
  ExactRational lhs;
  ExactRational rhs;
  bool passed = false;

  static VerificationReport make(IdentityId id, std::vector<std::int64_t> params, ExactRational lhs,
                                 ExactRational rhs);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Orders by (identity, params).
bool report_less(const VerificationReport& lhs, const VerificationReport& rhs);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// (6g-1)!! / (24^g g!), the scale relating b to sums of a.
ExactRational lemma_scale(std::int64_t g);

/// Requires g >= 1 and -1 <= k <= 3g-2.
VerificationReport check_lemma(std::int64_t g, std::int64_t k);
/// Requires g >= 1 and 0 <= k <= 3g-2.
VerificationReport check_increment(std::int64_t g, std::int64_t k);

/// Every equivalence-style report at genus g. Correlator values come from
/// `evaluator`; the identity sides are summed directly from the coefficients.
std::vector<VerificationReport> check_equivalence(std::int64_t g, TwoPointEvaluator& evaluator);
std::vector<VerificationReport> check_equivalence(std::int64_t g);

/// Oracle vs both closed forms for every two-point index at genus g.
std::vector<VerificationReport> check_oracle(std::int64_t g, TwoPointEvaluator& evaluator);

struct VerificationSummary {
  std::int64_t genus_max = 0;
  std::array<std::uint64_t, kIdentityCount> checked{};
  std::array<std::uint64_t, kIdentityCount> failed{};
  std::vector<VerificationReport> reports;  // sorted by report_less
  std::vector<VerificationReport> failures;

  std::uint64_t total_checked() const;
  std::uint64_t total_failed() const;
  bool ok() const { return failures.empty(); }

  /// Folds in `more`, keeping reports sorted.
  void merge(std::vector<VerificationReport> more);
};

struct VerifyOptions {
  std::int64_t genus_max = 1;
  std::int64_t oracle_genus_max = 0;  // 0 disables the oracle cross-check
  unsigned threads = 0;               // 0 picks the hardware concurrency
};

/// Lemma, increment and equivalence checks for every g <= genus_max and all
/// admissible k, optionally with oracle cross-checks. Uses a fresh evaluator,
/// so the result depends only on the options.
VerificationSummary verify_range(const VerifyOptions& options);
VerificationSummary verify_range(std::int64_t genus_max);

}  // namespace wk
