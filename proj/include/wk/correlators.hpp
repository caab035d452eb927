#pragma once

// Two-point correlators <tau_{d1} tau_{d2}>_g by the BDY and Zograf closed
// forms, plus a symmetric dispatcher that can demand both agree.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wk/exact_arith.hpp"

namespace wk {

/// A pair (d1, d2) with d1 + d2 = 3g - 1 for some genus g >= 1.
struct TwoPointIndex {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t g = 1;

  /// Throws DomainError unless d1, d2 >= 0 and d1 + d2 + 1 is a positive
  /// multiple of 3.
  static TwoPointIndex make(std::int64_t d1, std::int64_t d2);
  static bool is_valid(std::int64_t d1, std::int64_t d2) noexcept;

  TwoPointIndex swapped() const { return {d2, d1, g}; }
};

enum class Method { kBdy, kZograf, kBoth };

/// Parses "bdy", "zograf" or "both".
Method parse_method(std::string_view name);
std::string_view method_name(Method method);

/// The two closed forms disagreed on an index.
class EquivalenceViolation : public std::runtime_error {
 public:
  EquivalenceViolation(TwoPointIndex index, ExactRational bdy, ExactRational zograf);

  const TwoPointIndex& index() const { return index_; }
  const ExactRational& bdy_value() const { return bdy_; }
  const ExactRational& zograf_value() const { return zograf_; }

 private:
  TwoPointIndex index_;
  ExactRational bdy_;
  ExactRational zograf_;
};

struct EvaluationCounters {
  std::uint64_t a_evaluations = 0;
  std::uint64_t b_evaluations = 0;
};

/// Evaluates both closed forms with per-genus row caches, so that a full row
/// d1 = 0..3g-1 costs O(g) coefficient evaluations per formula. Safe for
/// concurrent use; rows for distinct genera are independent.
class TwoPointEvaluator {
 public:
  ExactRational bdy(const TwoPointIndex& index);
  ExactRational zograf(std::int64_t g, std::int64_t k);
  ExactRational evaluate(std::int64_t d1, std::int64_t d2, Method method);

  /// Coefficient evaluations performed so far by this evaluator.
  EvaluationCounters counters() const;

 private:
  // weighted[L] = sum_{l=0}^{L} (L+1-l) a(l-1, 3g-l), L = 0..3g-1.
  struct BdyRow {
    std::vector<ExactRational> weighted;
  };
  // partial[k] = sum_{i=1}^{k-1} b(g, i) for k = 1..3g-1; partial[0] unused.
  struct ZografRow {
    ExactRational b0;
    std::vector<ExactRational> partial;
  };

  std::shared_ptr<const BdyRow> bdy_row(std::int64_t g);
  std::shared_ptr<const ZografRow> zograf_row(std::int64_t g);

  mutable std::shared_mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const BdyRow>> bdy_rows_;
  std::map<std::int64_t, std::shared_ptr<const ZografRow>> zograf_rows_;
  std::atomic<std::uint64_t> a_evaluations_{0};
  std::atomic<std::uint64_t> b_evaluations_{0};
};

/// Process-wide evaluator used by the free functions below.
TwoPointEvaluator& default_evaluator();

/// BDY formula. Indices with residues (0, 2) are evaluated at the swap.
ExactRational two_point_bdy(const TwoPointIndex& index);

/// Zograf formula at k = d1, 0 <= k <= 3g-1. At k = 0 the empty inner sum is
/// read as -b(g, 0), which makes the value reflection symmetric.
ExactRational two_point_zograf(std::int64_t g, std::int64_t k);

/// With Method::kBoth throws EquivalenceViolation if the formulas differ.
ExactRational two_point(std::int64_t d1, std::int64_t d2, Method method);

}  // namespace wk
