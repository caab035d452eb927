#include "wk/dvv_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wk {

TauMonomial TauMonomial::make(std::int64_t genus, std::vector<std::int64_t> indices) {
  if (genus < 0) throw DomainError("TauMonomial: negative genus");
  if (indices.empty()) throw DomainError("TauMonomial: no insertions");
  if (std::any_of(indices.begin(), indices.end(), [](std::int64_t d) { return d < 0; })) {
    throw DomainError("TauMonomial: negative index");
  }
  std::sort(indices.begin(), indices.end());
  return {genus, std::move(indices)};
}

bool TauMonomial::satisfies_dimension() const {
  const std::int64_t sum = std::accumulate(indices.begin(), indices.end(), std::int64_t{0});
  return sum == 3 * genus + static_cast<std::int64_t>(indices.size()) - 3;
}

namespace {

std::vector<std::int64_t> without(const std::vector<std::int64_t>& v, std::size_t pos) {
  std::vector<std::int64_t> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != pos) out.push_back(v[i]);
  }
  return out;
}

std::vector<std::int64_t> with(std::vector<std::int64_t> v, std::initializer_list<std::int64_t> extra) {
  v.insert(v.end(), extra);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ExactRational DvvOracle::intersection(const TauMonomial& monomial) {
  std::lock_guard lock(mutex_);
  return evaluate(monomial);
}

ExactRational DvvOracle::string_equation_rhs(const TauMonomial& monomial) {
  if (monomial.indices.front() != 0) throw DomainError("string equation needs a tau_0 insertion");
  std::lock_guard lock(mutex_);
  return string_reduce(monomial);
}

std::size_t DvvOracle::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

ExactRational DvvOracle::evaluate(const TauMonomial& m) {
  if (!m.satisfies_dimension()) return ExactRational(0);
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;

  ExactRational value;
  if (m.genus == 0 && m.indices == std::vector<std::int64_t>{0, 0, 0}) {
    value = ExactRational(1);
  } else if (m.genus == 1 && m.indices == std::vector<std::int64_t>{1}) {
    value = ExactRational(BigInt(1), BigInt(24));
  } else if (m.indices.front() == 0) {
    value = string_reduce(m);
  } else {
    value = dvv_reduce(m);
  }
  memo_.emplace(m, value);
  return value;
}

// Drops the leading tau_0 and lowers each remaining index in turn.
ExactRational DvvOracle::string_reduce(const TauMonomial& m) {
  const std::vector<std::int64_t> rest = without(m.indices, 0);
  ExactRational sum(0);
  if (rest.empty()) return sum;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == 0) continue;
    std::vector<std::int64_t> lowered = rest;
    lowered[j] -= 1;
    sum += evaluate(TauMonomial::make(m.genus, std::move(lowered)));
  }
  return sum;
}

// (2k+3)!! <tau_{k+1} tau_S>_g =
//     sum_j (2k+2d_j+1)!!/(2d_j-1)!! <tau_{k+d_j} tau_{S\j}>_g
//   + 1/2 sum_{a+b=k-1} (2a+1)!!(2b+1)!! [ <tau_a tau_b tau_S>_{g-1}
//                                        + sum <tau_a tau_I>_{g'} <tau_b tau_J>_{g-g'} ]
// with the largest index playing tau_{k+1}.
ExactRational DvvOracle::dvv_reduce(const TauMonomial& m) {
  const std::int64_t g = m.genus;
  const std::int64_t k = m.indices.back() - 1;
  const std::vector<std::int64_t> rest = without(m.indices, m.indices.size() - 1);

  ExactRational total(0);
  for (std::size_t j = 0; j < rest.size(); ++j) {
    const std::int64_t dj = rest[j];
    const ExactRational weight(double_factorial(2 * k + 2 * dj + 1), double_factorial(2 * dj - 1));
    std::vector<std::int64_t> merged = without(rest, j);
    merged.push_back(k + dj);
    total += weight * evaluate(TauMonomial::make(g, std::move(merged)));
  }

  const std::size_t subsets = std::size_t{1} << rest.size();
  ExactRational quadratic(0);
  for (std::int64_t a = 0; a <= k - 1; ++a) {
    const std::int64_t b = k - 1 - a;
    const BigInt weight = double_factorial(2 * a + 1) * double_factorial(2 * b + 1);
    ExactRational bracket(0);
    if (g >= 1) bracket += evaluate(TauMonomial{g - 1, with(rest, {a, b})});
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::int64_t> left{a};
      std::vector<std::int64_t> right{b};
      for (std::size_t i = 0; i < rest.size(); ++i) {
        ((mask >> i) & 1U ? left : right).push_back(rest[i]);
      }
      // The dimension constraint fixes the genus of the left factor.
      const std::int64_t left_sum = std::accumulate(left.begin(), left.end(), std::int64_t{0});
      const std::int64_t shifted = left_sum - static_cast<std::int64_t>(left.size()) + 3;
      if (shifted % 3 != 0) continue;
      const std::int64_t g_left = shifted / 3;
      if (g_left < 0 || g_left > g) continue;
      const ExactRational lhs = evaluate(TauMonomial::make(g_left, std::move(left)));
      if (lhs.is_zero()) continue;
      bracket += lhs * evaluate(TauMonomial::make(g - g_left, std::move(right)));
    }
    quadratic += ExactRational(weight) * bracket;
  }
  total += quadratic / ExactRational(2);
  return total / ExactRational(double_factorial(2 * k + 3));
}

DvvOracle& default_oracle() {
  static DvvOracle oracle;
  return oracle;
}

ExactRational intersection(const TauMonomial& monomial) { return default_oracle().intersection(monomial); }

ExactRational one_point(std::int64_t g) {
  if (g < 1) throw DomainError("one_point needs g >= 1, got " + std::to_string(g));
  return intersection(TauMonomial::make(g, {3 * g - 2}));
}

}  // namespace wk
