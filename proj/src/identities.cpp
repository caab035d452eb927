#include "wk/identities.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "wk/coefficients.hpp"
#include "wk/dvv_oracle.hpp"

namespace wk {
namespace {

constexpr std::array<std::string_view, kIdentityCount> kNames = {
    "lemma5",        "increment6",     "equivalence7", "equivalence8_9", "reduced_sum",      "elementary_sum",
    "bracket_bridge", "value_equality", "symmetry",     "reflection",     "oracle_agreement",
};

std::size_t slot(IdentityId id) { return static_cast<std::size_t>(id); }

// sum_{l=0}^{k} (k+1-l) a(l-1, 3g-l)
ExactRational weighted_a_sum(std::int64_t g, std::int64_t k) {
  ExactRational sum(0);
  for (std::int64_t l = 0; l <= k; ++l) sum += ExactRational(k + 1 - l) * a_coeff(l - 1, 3 * g - l);
  return sum;
}

// sum_{l=-1}^{k-1} sum_{i=0}^{l+1} a(i-1, 3g-i); the inner sum grows by one
// term per step of l.
ExactRational nested_a_sum(std::int64_t g, std::int64_t k) {
  ExactRational outer(0);
  ExactRational inner(0);
  for (std::int64_t l = -1; l <= k - 1; ++l) {
    inner += a_coeff(l, 3 * g - l - 1);
    outer += inner;
  }
  return outer;
}

ExactRational b_sum(std::int64_t g, std::int64_t from, std::int64_t to) {
  ExactRational sum(0);
  for (std::int64_t i = from; i <= to; ++i) sum += b_coeff(g, i);
  return sum;
}

ExactRational bracket_fraction(std::int64_t g) { return ExactRational(BigInt(6 * g - 3), BigInt(6 * g - 1)); }

void require_genus(std::int64_t g) {
  if (g < 1) throw DomainError("genus must be >= 1, got " + std::to_string(g));
}

}  // namespace

std::string_view identity_name(IdentityId id) { return kNames[slot(id)]; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

VerificationReport VerificationReport::make(IdentityId id, std::vector<std::int64_t> params, ExactRational lhs,
                                            ExactRational rhs) {
  const bool passed = lhs == rhs;
  return {id, std::move(params), std::move(lhs), std::move(rhs), passed};
}

bool report_less(const VerificationReport& lhs, const VerificationReport& rhs) {
  if (lhs.identity != rhs.identity) return lhs.identity < rhs.identity;
  return lhs.params < rhs.params;
}

nlohmann::json to_json(const VerificationReport& report) {
  return {{"identity", identity_name(report.identity)},
          {"params", report.params},
          {"lhs", report.lhs.to_string()},
          {"rhs", report.rhs.to_string()},
          {"passed", report.passed}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  const auto id = identity_from_name(j.at("identity").get<std::string>());
  if (!id) throw DomainError("unknown identity " + j.at("identity").dump());
  VerificationReport report{*id, j.at("params").get<std::vector<std::int64_t>>(),
                            ExactRational::parse(j.at("lhs").get<std::string>()),
                            ExactRational::parse(j.at("rhs").get<std::string>()), j.at("passed").get<bool>()};
  return report;
}

ExactRational lemma_scale(std::int64_t g) { return ExactRational(double_factorial(6 * g - 1), pow24_times_factorial(g)); }

VerificationReport check_lemma(std::int64_t g, std::int64_t k) {
  require_genus(g);
  if (k < -1 || k > 3 * g - 2) throw DomainError("check_lemma: k=" + std::to_string(k) + " out of range");
  ExactRational rhs(0);
  for (std::int64_t l = 0; l <= k + 1; ++l) rhs += a_coeff(l - 1, 3 * g - l);
  return VerificationReport::make(IdentityId::kLemma5, {g, k}, lemma_scale(g) * b_coeff(g, k), std::move(rhs));
}

VerificationReport check_increment(std::int64_t g, std::int64_t k) {
  require_genus(g);
  if (k < 0 || k > 3 * g - 2) throw DomainError("check_increment: k=" + std::to_string(k) + " out of range");
  const ExactRational lhs = lemma_scale(g) * (b_coeff(g, k) - b_coeff(g, k - 1));
  return VerificationReport::make(IdentityId::kIncrement6, {g, k}, lhs, a_coeff(k, 3 * g - k - 1));
}

std::vector<VerificationReport> check_equivalence(std::int64_t g, TwoPointEvaluator& evaluator) {
  require_genus(g);
  std::vector<VerificationReport> out;
  const ExactRational scale = lemma_scale(g);

  // k = d1 runs over 3g1+1 (first BDY case) and 3g1+2 (second BDY case).
  for (std::int64_t k = 1; k <= 3 * g - 1; ++k) {
    if (k % 3 == 0) continue;
    const bool first_case = k % 3 == 1;
    const std::int64_t g1 = first_case ? (k - 1) / 3 : (k - 2) / 3;
    const BigInt den = first_case ? BigInt(double_factorial(6 * g1 + 3) * double_factorial(6 * g - 6 * g1 - 3))
                                  : BigInt(double_factorial(6 * g1 + 5) * double_factorial(6 * g - 6 * g1 - 5));
    const ExactRational weighted = weighted_a_sum(g, k);

    const ExactRational lhs = weighted / ExactRational(den);
    const ExactRational rhs = scale / ExactRational(den) * (bracket_fraction(g) + b_sum(g, 1, k - 1));
    out.push_back(VerificationReport::make(first_case ? IdentityId::kEquivalence7 : IdentityId::kEquivalence8_9,
                                           {g, k}, lhs, rhs));
    out.push_back(VerificationReport::make(IdentityId::kReducedSum, {g, k}, weighted, scale * b_sum(g, -1, k - 1)));
    out.push_back(VerificationReport::make(IdentityId::kElementarySum, {g, k}, weighted, nested_a_sum(g, k)));
  }

  out.push_back(VerificationReport::make(IdentityId::kBracketBridge, {g}, bracket_fraction(g),
                                         b_coeff(g, -1) + b_coeff(g, 0)));

  for (std::int64_t d1 = 0; d1 <= 3 * g - 1; ++d1) {
    const std::int64_t d2 = 3 * g - 1 - d1;
    const TwoPointIndex index = TwoPointIndex::make(d1, d2);
    out.push_back(VerificationReport::make(IdentityId::kValueEquality, {g, d1}, evaluator.bdy(index),
                                           evaluator.zograf(g, d1)));
    out.push_back(VerificationReport::make(IdentityId::kSymmetry, {g, d1}, evaluator.bdy(index),
                                           evaluator.bdy(index.swapped())));
    out.push_back(VerificationReport::make(IdentityId::kReflection, {g, d1}, evaluator.zograf(g, d1),
                                           evaluator.zograf(g, d2)));
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

std::vector<VerificationReport> check_equivalence(std::int64_t g) {
  TwoPointEvaluator evaluator;
  return check_equivalence(g, evaluator);
}

std::vector<VerificationReport> check_oracle(std::int64_t g, TwoPointEvaluator& evaluator) {
  require_genus(g);
  std::vector<VerificationReport> out;
  for (std::int64_t d1 = 0; d1 <= 3 * g - 1; ++d1) {
    const std::int64_t d2 = 3 * g - 1 - d1;
    const ExactRational reference = intersection(TauMonomial::make(g, {d1, d2}));
    // Third parameter: 0 compares against BDY, 1 against Zograf.
    out.push_back(VerificationReport::make(IdentityId::kOracleAgreement, {g, d1, 0}, reference,
                                           evaluator.bdy(TwoPointIndex::make(d1, d2))));
    out.push_back(
        VerificationReport::make(IdentityId::kOracleAgreement, {g, d1, 1}, reference, evaluator.zograf(g, d1)));
  }
  return out;
}

std::uint64_t VerificationSummary::total_checked() const {
  std::uint64_t total = 0;
  for (auto c : checked) total += c;
  return total;
}

std::uint64_t VerificationSummary::total_failed() const {
  std::uint64_t total = 0;
  for (auto c : failed) total += c;
  return total;
}

void VerificationSummary::merge(std::vector<VerificationReport> more) {
  for (const auto& report : more) {
    ++checked[slot(report.identity)];
    if (!report.passed) {
      ++failed[slot(report.identity)];
      failures.push_back(report);
    }
  }
  reports.insert(reports.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  std::sort(reports.begin(), reports.end(), report_less);
  std::sort(failures.begin(), failures.end(), report_less);
}

VerificationSummary verify_range(const VerifyOptions& options) {
  require_genus(options.genus_max);
  TwoPointEvaluator evaluator;
  const auto genus_count = static_cast<std::size_t>(options.genus_max);
  std::vector<std::vector<VerificationReport>> per_genus(genus_count);

  auto run_genus = [&](std::int64_t g) {
    std::vector<VerificationReport> reports;
    for (std::int64_t k = -1; k <= 3 * g - 2; ++k) reports.push_back(check_lemma(g, k));
    for (std::int64_t k = 0; k <= 3 * g - 2; ++k) reports.push_back(check_increment(g, k));
    auto equivalence = check_equivalence(g, evaluator);
    reports.insert(reports.end(), equivalence.begin(), equivalence.end());
    if (g <= options.oracle_genus_max) {
      auto oracle = check_oracle(g, evaluator);
      reports.insert(reports.end(), oracle.begin(), oracle.end());
    }
    per_genus[static_cast<std::size_t>(g - 1)] = std::move(reports);
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(genus_count));
  if (threads <= 1) {
    for (std::int64_t g = 1; g <= options.genus_max; ++g) run_genus(g);
  } else {
    // Largest genera first; they dominate the cost.
    std::atomic<std::int64_t> next{options.genus_max};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::int64_t g = next.fetch_sub(1); g >= 1; g = next.fetch_sub(1)) run_genus(g);
      });
    }
  }

  VerificationSummary summary;
  summary.genus_max = options.genus_max;
  std::vector<VerificationReport> all;
  for (auto& reports : per_genus) {
    all.insert(all.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  summary.merge(std::move(all));
  return summary;
}

VerificationSummary verify_range(std::int64_t genus_max) { return verify_range(VerifyOptions{genus_max, 0, 0}); }

}  // namespace wk
