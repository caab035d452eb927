#include "wk/correlators.hpp"

#include <mutex>
#include <string>

#include "wk/coefficients.hpp"

namespace wk {

TwoPointIndex TwoPointIndex::make(std::int64_t d1, std::int64_t d2) {
  if (!is_valid(d1, d2)) {
    throw DomainError("invalid two-point index (" + std::to_string(d1) + ", " + std::to_string(d2) +
                      "): need d1, d2 >= 0 and d1 + d2 = 3g - 1 with g >= 1");
  }
  return {d1, d2, (d1 + d2 + 1) / 3};
}

bool TwoPointIndex::is_valid(std::int64_t d1, std::int64_t d2) noexcept {
  return d1 >= 0 && d2 >= 0 && (d1 + d2 + 1) % 3 == 0;
}

Method parse_method(std::string_view name) {
  if (name == "bdy") return Method::kBdy;
  if (name == "zograf") return Method::kZograf;
  if (name == "both") return Method::kBoth;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kBdy:
      return "bdy";
    case Method::kZograf:
      return "zograf";
    case Method::kBoth:
      return "both";
  }
  return "?";
}

EquivalenceViolation::EquivalenceViolation(TwoPointIndex index, ExactRational bdy, ExactRational zograf)
    : std::runtime_error("closed forms disagree at (" + std::to_string(index.d1) + ", " +
                         std::to_string(index.d2) + "): bdy=" + bdy.to_string() + " zograf=" + zograf.to_string()),
      index_(index),
      bdy_(std::move(bdy)),
      zograf_(std::move(zograf)) {}

std::shared_ptr<const TwoPointEvaluator::BdyRow> TwoPointEvaluator::bdy_row(std::int64_t g) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = bdy_rows_.find(g); it != bdy_rows_.end()) return it->second;
  }
  auto row = std::make_shared<BdyRow>();
  const std::int64_t length = 3 * g;
  row->weighted.reserve(static_cast<std::size_t>(length));
  // Two running sums: the first accumulates a(l-1, 3g-l), the second the first.
  ExactRational cumulative(0);
  ExactRational twice_cumulative(0);
  for (std::int64_t l = 0; l < length; ++l) {
    cumulative += a_coeff(l - 1, 3 * g - l);
    twice_cumulative += cumulative;
    row->weighted.push_back(twice_cumulative);
  }
  a_evaluations_.fetch_add(static_cast<std::uint64_t>(length), std::memory_order_relaxed);
  std::unique_lock lock(mutex_);
  return bdy_rows_.try_emplace(g, std::move(row)).first->second;
}

std::shared_ptr<const TwoPointEvaluator::ZografRow> TwoPointEvaluator::zograf_row(std::int64_t g) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = zograf_rows_.find(g); it != zograf_rows_.end()) return it->second;
  }
  auto row = std::make_shared<ZografRow>();
  row->b0 = b_coeff(g, 0);
  const std::int64_t length = 3 * g;
  row->partial.assign(static_cast<std::size_t>(length), ExactRational(0));
  for (std::int64_t k = 2; k < length; ++k) {
    row->partial[static_cast<std::size_t>(k)] = row->partial[static_cast<std::size_t>(k - 1)] + b_coeff(g, k - 1);
  }
  b_evaluations_.fetch_add(static_cast<std::uint64_t>(length - 1), std::memory_order_relaxed);
  std::unique_lock lock(mutex_);
  return zograf_rows_.try_emplace(g, std::move(row)).first->second;
}

ExactRational TwoPointEvaluator::bdy(const TwoPointIndex& index) {
  const TwoPointIndex checked = TwoPointIndex::make(index.d1, index.d2);
  const TwoPointIndex idx = checked.d1 % 3 == 0 ? checked.swapped() : checked;
  const auto row = bdy_row(idx.g);
  if (idx.d1 % 3 == 1) {
    const std::int64_t g1 = (idx.d1 - 1) / 3;
    const std::int64_t g2 = (idx.d2 - 1) / 3;
    const BigInt den = double_factorial(6 * g1 + 3) * double_factorial(6 * g2 + 3);
    return row->weighted[static_cast<std::size_t>(3 * g1 + 1)] / ExactRational(den);
  }
  const std::int64_t g1 = (idx.d1 - 2) / 3;
  const std::int64_t g2 = idx.d2 / 3;
  const BigInt den = double_factorial(6 * g1 + 5) * double_factorial(6 * g2 + 1);
  return row->weighted[static_cast<std::size_t>(3 * g1 + 2)] / ExactRational(den);
}

ExactRational TwoPointEvaluator::zograf(std::int64_t g, std::int64_t k) {
  if (g < 1 || k < 0 || k > 3 * g - 1) {
    throw DomainError("zograf index out of range: g=" + std::to_string(g) + " k=" + std::to_string(k));
  }
  const auto row = zograf_row(g);
  const ExactRational inner = k == 0 ? -row->b0 : row->partial[static_cast<std::size_t>(k)];
  const ExactRational bracket = ExactRational(BigInt(6 * g - 3), BigInt(6 * g - 1)) + inner;
  const BigInt den = pow24_times_factorial(g) * double_factorial(2 * k + 1) * double_factorial(6 * g - 1 - 2 * k);
  return ExactRational(double_factorial(6 * g - 1), den) * bracket;
}

ExactRational TwoPointEvaluator::evaluate(std::int64_t d1, std::int64_t d2, Method method) {
  const TwoPointIndex index = TwoPointIndex::make(d1, d2);
  switch (method) {
    case Method::kBdy:
      return bdy(index);
    case Method::kZograf:
      return zograf(index.g, index.d1);
    case Method::kBoth:
      break;
  }
  ExactRational from_bdy = bdy(index);
  ExactRational from_zograf = zograf(index.g, index.d1);
  if (from_bdy != from_zograf) throw EquivalenceViolation(index, std::move(from_bdy), std::move(from_zograf));
  return from_bdy;
}

EvaluationCounters TwoPointEvaluator::counters() const {
  return {a_evaluations_.load(std::memory_order_relaxed), b_evaluations_.load(std::memory_order_relaxed)};
}

TwoPointEvaluator& default_evaluator() {
  static TwoPointEvaluator evaluator;
  return evaluator;
}

ExactRational two_point_bdy(const TwoPointIndex& index) { return default_evaluator().bdy(index); }

ExactRational two_point_zograf(std::int64_t g, std::int64_t k) { return default_evaluator().zograf(g, k); }

ExactRational two_point(std::int64_t d1, std::int64_t d2, Method method) {
  return default_evaluator().evaluate(d1, d2, method);
}

}  // namespace wk
