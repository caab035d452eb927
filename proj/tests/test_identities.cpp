#include <doctest.h>

#include <set>

#include "wk/coefficients.hpp"
#include "wk/identities.hpp"

using wk::BigInt;
using wk::DomainError;
using wk::ExactRational;
using wk::IdentityId;
using wk::VerificationReport;

namespace {
ExactRational q(long n, long d = 1) { return ExactRational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("lemma examples") {
  const auto trivial = wk::check_lemma(1, -1);
  CHECK(trivial.passed);
  CHECK(trivial.lhs == q(5, 8));
  CHECK(trivial.rhs == q(5, 8));

  const auto first = wk::check_lemma(1, 0);
  CHECK(first.passed);
  CHECK(first.lhs == q(-1, 4));

  const auto g2 = wk::check_lemma(2, 1);
  CHECK(g2.passed);
  CHECK(g2.lhs == q(35, 64));
  CHECK(g2.params == std::vector<std::int64_t>{2, 1});

  CHECK_THROWS_AS(wk::check_lemma(1, -2), DomainError);
  CHECK_THROWS_AS(wk::check_lemma(1, 2), DomainError);
  CHECK_THROWS_AS(wk::check_lemma(0, 0), DomainError);
}

TEST_CASE("increment examples cover each residue branch") {
  const auto k0 = wk::check_increment(1, 0);
  CHECK(k0.passed);
  CHECK(k0.lhs == q(-7, 8));
  CHECK(k0.rhs == wk::a_coeff(0, 2));

  const auto k2 = wk::check_increment(2, 2);
  CHECK(k2.passed);
  CHECK(k2.lhs == q(-35, 64));

  const auto k1 = wk::check_increment(2, 4);
  CHECK(k1.passed);
  CHECK(k1.lhs == q(35, 16));

  CHECK_THROWS_AS(wk::check_increment(2, -1), DomainError);
  CHECK_THROWS_AS(wk::check_increment(2, 5), DomainError);
}

TEST_CASE("telescoping: increments plus the k=-1 lemma rebuild the lemma") {
  for (long g = 1; g <= 12; ++g) {
    ExactRational running = wk::check_lemma(g, -1).lhs;
    for (long k = 0; k <= 3 * g - 2; ++k) {
      running += wk::check_increment(g, k).lhs;
      CHECK(running == wk::check_lemma(g, k).lhs);
      CHECK(running == wk::check_lemma(g, k).rhs);
    }
  }
}

TEST_CASE("equivalence at genus 1 and 2") {
  for (long g : {1L, 2L}) {
    const auto reports = wk::check_equivalence(g);
    for (const auto& r : reports) {
      CAPTURE(wk::to_json(r).dump());
      CHECK(r.passed);
    }
    std::size_t values = 0;
    for (const auto& r : reports) values += r.identity == IdentityId::kValueEquality;
    CHECK(values == static_cast<std::size_t>(3 * g));
  }
  const auto g2 = wk::check_equivalence(2);
  bool saw = false;
  for (const auto& r : g2) {
    if (r.identity == IdentityId::kValueEquality && r.params == std::vector<std::int64_t>{2, 2}) {
      CHECK(r.lhs == q(29, 5760));
      saw = true;
    }
  }
  CHECK(saw);
}

TEST_CASE("bracket bridge: the sum from -1 absorbs the standalone fraction") {
  const auto reports = wk::check_equivalence(1);
  int bridges = 0;
  for (const auto& r : reports) {
    if (r.identity != IdentityId::kBracketBridge) continue;
    ++bridges;
    CHECK(r.lhs == q(3, 5));
    CHECK(r.passed);
  }
  CHECK(bridges == 1);
}

TEST_CASE("verify_range small genera") {
  const auto one = wk::verify_range(1);
  CHECK(one.ok());
  CHECK(one.checked[static_cast<std::size_t>(IdentityId::kLemma5)] == 3);
  CHECK(one.checked[static_cast<std::size_t>(IdentityId::kIncrement6)] == 2);

  const auto ten = wk::verify_range(10);
  CHECK(ten.ok());
  CHECK(ten.total_failed() == 0);
  CHECK(std::is_sorted(ten.reports.begin(), ten.reports.end(), wk::report_less));
  std::set<std::pair<IdentityId, std::vector<std::int64_t>>> keys;
  for (const auto& r : ten.reports) keys.emplace(r.identity, r.params);
  CHECK(keys.size() == ten.reports.size());
}

TEST_CASE("parallel verification equals the sequential run") {
  const auto sequential = wk::verify_range(wk::VerifyOptions{8, 3, 1});
  const auto parallel = wk::verify_range(wk::VerifyOptions{8, 3, 4});
  CHECK(sequential.reports == parallel.reports);
  CHECK(sequential.checked == parallel.checked);
  CHECK(wk::verify_range(wk::VerifyOptions{8, 3, 1}).reports == sequential.reports);
}

TEST_CASE("corrupted coefficient shows up as failures") {
  wk::ScopedACoeffPerturbation corrupt(2, 3, q(1, 7));
  const auto summary = wk::verify_range(wk::VerifyOptions{3, 2, 1});
  CHECK_FALSE(summary.ok());
  CHECK(summary.failed[static_cast<std::size_t>(IdentityId::kLemma5)] > 0);
  CHECK(summary.failed[static_cast<std::size_t>(IdentityId::kValueEquality)] > 0);
  CHECK(summary.failed[static_cast<std::size_t>(IdentityId::kOracleAgreement)] > 0);
  for (const auto& f : summary.failures) CHECK_FALSE(f.passed);
}

TEST_CASE("report json round-trip") {
  const VerificationReport r = wk::check_lemma(3, 4);
  const auto j = wk::to_json(r);
  CHECK(j.at("identity") == "lemma5");
  CHECK(wk::report_from_json(j) == r);
  CHECK(wk::identity_from_name("nope") == std::nullopt);
  for (std::size_t i = 0; i < wk::kIdentityCount; ++i) {
    const auto id = static_cast<IdentityId>(i);
    CHECK(wk::identity_from_name(wk::identity_name(id)) == id);
  }
}
