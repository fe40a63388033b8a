#include <doctest.h>

#include <cmath>

#include "zonolat/number_theory.hpp"

using namespace zonolat;

namespace {

// mu(n) by trial division.
int mobius_by_factoring(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

TEST_CASE("mobius_sieve small values") {
  CHECK(mobius_sieve(1)(1) == 1);
  const MobiusTable six = mobius_sieve(6);
  CHECK(six(2) == -1);
  CHECK(six(4) == 0);
  CHECK(six(6) == 1);
  CHECK(mobius_sieve(30)(30) == -1);
}

TEST_CASE("mobius_sieve matches factoring and the divisor-sum identity") {
  const MobiusTable mu(2000);
  std::int64_t running = 0;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    REQUIRE(mu(n) == mobius_by_factoring(n));
    int divisor_sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) divisor_sum += mu(d);
    CHECK(divisor_sum == (n == 1 ? 1 : 0));
    running += mu(n);
    CHECK(mu.mertens(n) == running);
  }
}

TEST_CASE("mobius_sieve rejects zero and out-of-range lookups") {
  CHECK_THROWS_AS(mobius_sieve(0), DomainError);
  const MobiusTable mu(10);
  CHECK_THROWS_AS(mu(11), DomainError);
  CHECK_THROWS_AS(mu(0), DomainError);
}

TEST_CASE("zeta values") {
  CHECK(std::abs(zeta(2, 1e-12) - M_PI * M_PI / 6.0) <= 1e-12);
  CHECK(std::abs(zeta(3, 1e-12) - 1.2020569031595942) <= 1e-12);
  CHECK(std::abs(zeta(4, 1e-12) - std::pow(M_PI, 4) / 90.0) <= 1e-12);
  CHECK(std::abs(zeta(20, 1e-12) - 1.0000009539620338) <= 1e-12);
  CHECK(std::abs(zeta(20, 1e-12) - 1.0) <= 1e-6);
}

TEST_CASE("zeta agrees with a ten times longer truncation") {
  for (int d = 2; d <= 8; ++d) {
    for (double tol : {1e-6, 1e-9, 1e-12}) {
      const std::uint64_t n = zeta_terms_for(d, tol);
      const long double longer = zeta_partial(d, 10 * n);
      CHECK(std::abs(static_cast<long double>(zeta(d, tol)) - longer) <= tol);
    }
  }
}

TEST_CASE("zeta domain") {
  CHECK_THROWS_AS(zeta(1), DomainError);
  CHECK_THROWS_AS(zeta(0), DomainError);
  CHECK_THROWS_AS(zeta(2, 0.0), DomainError);
}

TEST_CASE("gamma_pos") {
  CHECK(gamma_pos(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_pos(4.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(gamma_pos(1.5) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_pos(0.0), DomainError);
  CHECK_THROWS_AS(gamma_pos(-1.5), DomainError);
}

TEST_CASE("faulhaber_sum examples") {
  CHECK(faulhaber_sum(2, 4) == 14);
  CHECK(faulhaber_sum(1, 5) == 10);
  CHECK(faulhaber_sum(3, 1) == 0);
  CHECK(faulhaber_sum(0, 7) == 6);
  CHECK_THROWS_AS(faulhaber_sum(2, 0), DomainError);
}

TEST_CASE("faulhaber_sum matches direct summation") {
  for (unsigned d = 0; d <= 10; ++d) {
    BigInt direct = 0;
    for (std::uint64_t p = 1; p <= 60; ++p) {
      CHECK(faulhaber_sum(d, p) == direct);
      direct += boost::multiprecision::pow(BigInt(p), d);
    }
  }
}

TEST_CASE("faulhaber_sum increments by (p-1)^d") {
  for (unsigned d = 0; d <= 6; ++d)
    for (std::uint64_t p = 2; p <= 40; ++p)
      CHECK(faulhaber_sum(d, p) - faulhaber_sum(d, p - 1) ==
            boost::multiprecision::pow(BigInt(p - 1), d));
}

TEST_CASE("faulhaber_sum stays exact beyond 64 bits") {
  const BigInt expected = [] {
    BigInt s = 0;
    for (std::uint64_t i = 1; i < 100000; ++i) s += boost::multiprecision::pow(BigInt(i), 5);
    return s;
  }();
  CHECK(faulhaber_sum(5, 100000) == expected);
  CHECK(expected > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}
