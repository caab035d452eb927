#pragma once

// Reference values for psi-class intersection numbers by the
// Dijkgraaf-Verlinde-Verlinde recursion. Slow compared to the closed forms;
// only used to validate them.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <vector>

#include "wk/exact_arith.hpp"

namespace wk {

/// <tau_{d1} ... tau_{dn}>_g with the indices kept sorted ascending.
struct TauMonomial {
  std::int64_t genus = 0;
  std::vector<std::int64_t> indices;

  /// Sorts `indices`. Throws DomainError for negative genus, an empty index
  /// list or a negative index.
  static TauMonomial make(std::int64_t genus, std::vector<std::int64_t> indices);
  static TauMonomial make(std::int64_t genus, std::initializer_list<std::int64_t> indices) {
    return make(genus, std::vector<std::int64_t>(indices));
  }

  /// sum d_i == 3g + n - 3
  bool satisfies_dimension() const;

  friend auto operator<=>(const TauMonomial&, const TauMonomial&) = default;
  friend bool operator==(const TauMonomial&, const TauMonomial&) = default;
};

class DvvOracle {
 public:
  ExactRational intersection(const TauMonomial& monomial);

  /// Right side of the string equation for a monomial containing tau_0:
  /// sum_j <tau_{d_j - 1} prod_{i != j} tau_{d_i}>_g, the tau_0 removed.
  ExactRational string_equation_rhs(const TauMonomial& monomial);

  std::size_t memo_size() const;

 private:
  ExactRational evaluate(const TauMonomial& monomial);
  ExactRational string_reduce(const TauMonomial& monomial);
  ExactRational dvv_reduce(const TauMonomial& monomial);

  mutable std::mutex mutex_;
  std::map<TauMonomial, ExactRational> memo_;
};

DvvOracle& default_oracle();

ExactRational intersection(const TauMonomial& monomial);

/// <tau_{3g-2}>_g
ExactRational one_point(std::int64_t g);

}  // namespace wk
