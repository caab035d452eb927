#pragma once

// The two coefficient families behind the closed-form two-point correlators:
// a(k1, k2), paired with the sums in the BDY formula, and b(g, k), paired with
// the Zograf formula.

#include <cstdint>

#include "wk/exact_arith.hpp"

namespace wk {

/// Which branch of the a-coefficient definition an index pair falls into.
enum class ACase {
  kBothShifted,  // k1 = 3g1-2, k2 = 3g2-2, g1, g2 >= 1
  kLeftMultiple,  // k1 = 3g1,   k2 = 3g2-1, g1, g2 >= 0
  kRightMultiple,  // k1 = 3g1-1, k2 = 3g2,   g1, g2 >= 0
  kZero,
};

struct ACoeffKey {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  ACase kind = ACase::kZero;
  // Meaningful only when kind != kZero.
  std::int64_t g1 = 0;
  std::int64_t g2 = 0;

  /// Classifies (k1, k2) by residues mod 3 and checks the genus bounds.
  /// Throws DomainError when either index is below -1.
  static ACoeffKey classify(std::int64_t k1, std::int64_t k2);
};

enum class BBranch {
  kMinusOne,  // k = 3j-1
  kZero,      // k = 3j
  kPlusOne,   // k = 3j+1
};

struct BCoeffKey {
  std::int64_t g = 1;
  std::int64_t k = -1;
  BBranch branch = BBranch::kMinusOne;
  std::int64_t j = 0;

  /// Requires g >= 1 and -1 <= k <= 3g-1, otherwise DomainError.
  static BCoeffKey classify(std::int64_t g, std::int64_t k);
};

ExactRational a_coeff(std::int64_t k1, std::int64_t k2);
ExactRational b_coeff(std::int64_t g, std::int64_t k);

/// Test seam: while alive, a_coeff(k1, k2) returns its true value plus
/// `delta`. Used to prove the verifier notices a corrupted coefficient.
/// Not reentrant; only one perturbation may be active at a time.
class ScopedACoeffPerturbation {
 public:
  ScopedACoeffPerturbation(std::int64_t k1, std::int64_t k2, ExactRational delta);
  ~ScopedACoeffPerturbation();
  ScopedACoeffPerturbation(const ScopedACoeffPerturbation&) = delete;
  ScopedACoeffPerturbation& operator=(const ScopedACoeffPerturbation&) = delete;
};

}  // namespace wk
