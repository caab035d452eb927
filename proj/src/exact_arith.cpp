#include "wk/exact_arith.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace wk {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("ExactRational: zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("ExactRational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw DomainError("ExactRational: cannot parse '" + std::string(text) + "'");
  }
  // mpz does not accept a leading '+'.
  const std::string_view unsigned_num = num[0] == '+' ? num.substr(1) : num;
  return ExactRational(BigInt(std::string(unsigned_num)), BigInt(std::string(den)));
}

std::string ExactRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

namespace {

// Append-only table of values indexed by a non-negative integer. std::deque
// keeps references stable across push_back, so callers may hold on to them.
template <typename Step>
class SequenceCache {
 public:
  SequenceCache(BigInt first, Step step) : step_(step) { values_.push_back(std::move(first)); }

  const BigInt& at(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      const std::size_t next = values_.size();
      values_.push_back(step_(values_, next));
    }
    return values_[n];
  }

 private:
  Step step_;
  std::deque<BigInt> values_;
  std::shared_mutex mutex_;
};

auto& factorial_cache() {
  static SequenceCache cache(BigInt(1), [](const std::deque<BigInt>& v, std::size_t n) {
    return BigInt(v[n - 1] * static_cast<unsigned long>(n));
  });
  return cache;
}

// Slot i holds (i-1)!!, so slot 0 is (-1)!!.
auto& double_factorial_cache() {
  static SequenceCache cache(BigInt(1), [](const std::deque<BigInt>& v, std::size_t slot) {
    const auto n = static_cast<unsigned long>(slot - 1);
    if (n <= 1) return BigInt(1);
    return BigInt(v[slot - 2] * n);
  });
  return cache;
}

auto& pow24_factorial_cache() {
  static SequenceCache cache(BigInt(1), [](const std::deque<BigInt>& v, std::size_t g) {
    return BigInt(v[g - 1] * (24UL * static_cast<unsigned long>(g)));
  });
  return cache;
}

}  // namespace

const BigInt& factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  return factorial_cache().at(static_cast<std::size_t>(n));
}

const BigInt& double_factorial(std::int64_t n) {
  if (n < -1) throw DomainError("double factorial below -1: " + std::to_string(n));
  return double_factorial_cache().at(static_cast<std::size_t>(n + 1));
}

const BigInt& pow24_times_factorial(std::int64_t g) {
  if (g < 0) throw DomainError("24^g g! with negative g " + std::to_string(g));
  return pow24_factorial_cache().at(static_cast<std::size_t>(g));
}

}  // namespace wk
