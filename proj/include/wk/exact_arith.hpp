#pragma once

// Exact rational arithmetic and the factorial-type primitives every
// correlator formula is built from.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wk {

using BigInt = mpz_class;

/// Raised when an index falls outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational, always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  explicit ExactRational(const BigInt& value) : q_(value) {}
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p/q" or "n". The result is canonicalized; a zero denominator
  /// or malformed text throws DomainError.
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// "p/q" in lowest terms, or "n" when the denominator is 1.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs) {
    q_ += rhs.q_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    q_ -= rhs.q_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    q_ *= rhs.q_;
    return *this;
  }
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  friend ExactRational operator-(const ExactRational& value) {
    ExactRational out;
    out.q_ = -value.q_;
    return out;
  }

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) { return lhs.q_ == rhs.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
    return os << value.to_string();
  }

 private:
  mpq_class q_;
};

/// n! for n >= 0. Memoized; concurrent callers are safe.
const BigInt& factorial(std::int64_t n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1. Anything below -1 is a DomainError.
const BigInt& double_factorial(std::int64_t n);

/// 24^g * g!, memoized.
const BigInt& pow24_times_factorial(std::int64_t g);

}  // namespace wk
