#include <doctest.h>

#include "wk/correlators.hpp"
#include "wk/dvv_oracle.hpp"

using wk::BigInt;
using wk::DomainError;
using wk::ExactRational;
using wk::TauMonomial;

namespace {
ExactRational q(long n, long d = 1) { return ExactRational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("monomial canonical form") {
  const TauMonomial m = TauMonomial::make(2, {4, 0, 2});
  CHECK(m.indices == std::vector<std::int64_t>{0, 2, 4});
  CHECK(m == TauMonomial::make(2, {2, 4, 0}));
  CHECK(m.satisfies_dimension());
  CHECK_FALSE(TauMonomial::make(2, {1, 1}).satisfies_dimension());
  CHECK_THROWS_AS(TauMonomial::make(-1, {0}), DomainError);
  CHECK_THROWS_AS(TauMonomial::make(1, std::vector<std::int64_t>{}), DomainError);
  CHECK_THROWS_AS(TauMonomial::make(1, {-1, 2}), DomainError);
}

TEST_CASE("base cases and small values") {
  CHECK(wk::intersection(TauMonomial::make(0, {0, 0, 0})) == q(1));
  CHECK(wk::intersection(TauMonomial::make(1, {1})) == q(1, 24));
  CHECK(wk::intersection(TauMonomial::make(2, {2, 3})) == q(29, 5760));
  CHECK(wk::intersection(TauMonomial::make(0, {0, 0, 0, 1})) == q(1));
  CHECK(wk::intersection(TauMonomial::make(1, {1, 1, 1})) == q(1, 12));
  CHECK(wk::intersection(TauMonomial::make(2, {2, 2, 2})) == q(7, 240));
  CHECK(wk::intersection(TauMonomial::make(2, {1, 1})) == q(0));
  CHECK(wk::intersection(TauMonomial::make(0, {0, 0})) == q(0));
}

TEST_CASE("one-point values") {
  CHECK(wk::one_point(1) == q(1, 24));
  CHECK(wk::one_point(2) == q(1, 1152));
  CHECK(wk::one_point(3) == q(1, 82944));
  for (long g = 1; g <= 8; ++g) CHECK(wk::one_point(g) == ExactRational(BigInt(1), wk::pow24_times_factorial(g)));
  CHECK_THROWS_AS(wk::one_point(0), DomainError);
}

TEST_CASE("string equation route agrees with the recursion") {
  wk::DvvOracle oracle;
  const std::vector<TauMonomial> cases = {
      TauMonomial::make(1, {0, 2}),    TauMonomial::make(2, {0, 5}),      TauMonomial::make(2, {0, 2, 4}),
      TauMonomial::make(3, {0, 0, 9}), TauMonomial::make(3, {0, 3, 4, 3}), TauMonomial::make(2, {0, 1, 1, 4}),
  };
  for (const auto& m : cases) {
    CHECK(oracle.string_equation_rhs(m) == oracle.intersection(m));
  }
  CHECK_THROWS_AS(oracle.string_equation_rhs(TauMonomial::make(1, {1})), DomainError);
}

TEST_CASE("dilaton equation holds on memoized instances") {
  wk::DvvOracle oracle;
  const std::vector<TauMonomial> rests = {
      TauMonomial::make(1, {1}),       TauMonomial::make(2, {4}),    TauMonomial::make(2, {2, 3}),
      TauMonomial::make(3, {2, 3, 4}), TauMonomial::make(2, {0, 5}), TauMonomial::make(3, {1, 2, 2, 3}),
  };
  for (const auto& rest : rests) {
    std::vector<std::int64_t> with_one = rest.indices;
    with_one.push_back(1);
    const auto n = static_cast<long>(rest.indices.size());
    CHECK(oracle.intersection(TauMonomial::make(rest.genus, with_one)) ==
          q(2 * rest.genus - 2 + n) * oracle.intersection(rest));
  }
}

TEST_CASE("oracle matches both closed forms up to genus 6") {
  for (long g = 1; g <= 6; ++g) {
    for (long d1 = 0; d1 <= 3 * g - 1; ++d1) {
      const long d2 = 3 * g - 1 - d1;
      const ExactRational value = wk::intersection(TauMonomial::make(g, {d1, d2}));
      CHECK(value == wk::two_point(d1, d2, wk::Method::kBdy));
      CHECK(value == wk::two_point(d1, d2, wk::Method::kZograf));
    }
  }
}
