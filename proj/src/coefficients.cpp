#include "wk/coefficients.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <string>

namespace wk {
namespace {

// Floor-mod; indices reach -1.
std::int64_t mod3(std::int64_t v) { return ((v % 3) + 3) % 3; }

struct Perturbation {
  std::int64_t k1;
  std::int64_t k2;
  ExactRational delta;
};

std::atomic<bool> perturbation_active{false};
std::mutex perturbation_mutex;
std::optional<Perturbation> perturbation;

ExactRational a_coeff_exact(const ACoeffKey& key) {
  switch (key.kind) {
    case ACase::kBothShifted: {
      const BigInt num = double_factorial(6 * key.g1 - 5) * double_factorial(6 * key.g2 - 5);
      const BigInt den = 2 * pow24_times_factorial(key.g1 - 1) * pow24_times_factorial(key.g2 - 1);
      return ExactRational(num, den);
    }
    case ACase::kLeftMultiple:
    case ACase::kRightMultiple: {
      const BigInt num = double_factorial(6 * key.g1 - 1) * double_factorial(6 * key.g2 - 1);
      const BigInt den = pow24_times_factorial(key.g1) * pow24_times_factorial(key.g2);
      // The genus attached to the index of residue 2 carries the extra ratio.
      const std::int64_t h = key.kind == ACase::kLeftMultiple ? key.g2 : key.g1;
      return -(ExactRational(num, den) * ExactRational(BigInt(6 * h + 1), BigInt(6 * h - 1)));
    }
    case ACase::kZero:
      break;
  }
  return ExactRational(0);
}

}  // namespace

ACoeffKey ACoeffKey::classify(std::int64_t k1, std::int64_t k2) {
  if (k1 < -1 || k2 < -1) {
    throw DomainError("a_coeff index below -1: (" + std::to_string(k1) + ", " + std::to_string(k2) + ")");
  }
  ACoeffKey key{k1, k2, ACase::kZero, 0, 0};
  const auto r1 = mod3(k1);
  const auto r2 = mod3(k2);
  if (r1 == 1 && r2 == 1) {
    key.g1 = (k1 + 2) / 3;
    key.g2 = (k2 + 2) / 3;
    if (key.g1 >= 1 && key.g2 >= 1) key.kind = ACase::kBothShifted;
  } else if (r1 == 0 && r2 == 2) {
    key.g1 = k1 / 3;
    key.g2 = (k2 + 1) / 3;
    if (key.g1 >= 0 && key.g2 >= 0) key.kind = ACase::kLeftMultiple;
  } else if (r1 == 2 && r2 == 0) {
    key.g1 = (k1 + 1) / 3;
    key.g2 = k2 / 3;
    if (key.g1 >= 0 && key.g2 >= 0) key.kind = ACase::kRightMultiple;
  }
  return key;
}

BCoeffKey BCoeffKey::classify(std::int64_t g, std::int64_t k) {
  if (g < 1) throw DomainError("b_coeff genus must be >= 1, got " + std::to_string(g));
  if (k < -1 || k > 3 * g - 1) {
    throw DomainError("b_coeff index k=" + std::to_string(k) + " outside [-1, " + std::to_string(3 * g - 1) +
                      "] at g=" + std::to_string(g));
  }
  switch (mod3(k)) {
    case 2:
      return {g, k, BBranch::kMinusOne, (k + 1) / 3};
    case 0:
      return {g, k, BBranch::kZero, k / 3};
    default:
      return {g, k, BBranch::kPlusOne, (k - 1) / 3};
  }
}

ExactRational a_coeff(std::int64_t k1, std::int64_t k2) {
  ExactRational value = a_coeff_exact(ACoeffKey::classify(k1, k2));
  if (perturbation_active.load(std::memory_order_acquire)) {
    std::lock_guard lock(perturbation_mutex);
    if (perturbation && perturbation->k1 == k1 && perturbation->k2 == k2) value += perturbation->delta;
  }
  return value;
}

ExactRational b_coeff(std::int64_t g, std::int64_t k) {
  const BCoeffKey key = BCoeffKey::classify(g, k);
  const std::int64_t j = key.j;
  const ExactRational scale(double_factorial(6 * g - 3 - 2 * k), double_factorial(6 * g - 1));
  switch (key.branch) {
    case BBranch::kMinusOne: {
      const BigInt num = double_factorial(6 * j - 1) * factorial(g - 1) * (g - 2 * j);
      return scale * ExactRational(num, factorial(j) * factorial(g - j));
    }
    case BBranch::kZero: {
      const BigInt num = -2 * double_factorial(6 * j + 1) * factorial(g - 1);
      return scale * ExactRational(num, factorial(j) * factorial(g - 1 - j));
    }
    case BBranch::kPlusOne: {
      const BigInt num = 2 * double_factorial(6 * j + 3) * factorial(g - 1);
      return scale * ExactRational(num, factorial(j) * factorial(g - 1 - j));
    }
  }
  return ExactRational(0);
}

ScopedACoeffPerturbation::ScopedACoeffPerturbation(std::int64_t k1, std::int64_t k2, ExactRational delta) {
  std::lock_guard lock(perturbation_mutex);
  perturbation = Perturbation{k1, k2, std::move(delta)};
  perturbation_active.store(true, std::memory_order_release);
}

ScopedACoeffPerturbation::~ScopedACoeffPerturbation() {
  std::lock_guard lock(perturbation_mutex);
  perturbation.reset();
  perturbation_active.store(false, std::memory_order_release);
}

}  // namespace wk
