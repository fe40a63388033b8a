#include <doctest.h>

#include "oracles.hpp"
#include "zonolat/number_theory.hpp"
#include "zonolat/primitive_points.hpp"

using namespace zonolat;

namespace {

oracle::Region to_oracle(Region r) {
  switch (r) {
    case Region::canonical_half: return oracle::Region::canonical_half;
    case Region::full_ball: return oracle::Region::full_ball;
    case Region::positive_orthant: return oracle::Region::positive_orthant;
    case Region::orthant_interior: return oracle::Region::orthant_interior;
  }
  return oracle::Region::full_ball;
}

unsigned oracle_q(const QNorm& q) { return q.is_infinite() ? 0 : q.exponent(); }

std::vector<oracle::Point> columns(const PointMatrix& m) {
  std::vector<oracle::Point> out;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    oracle::Point x;
    for (Eigen::Index r = 0; r < m.rows(); ++r) x.push_back(m(r, c));
    out.push_back(x);
  }
  return out;
}

const Region kAllRegions[] = {Region::canonical_half, Region::full_ball, Region::positive_orthant,
                              Region::orthant_interior};

}  // namespace

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(make_vector({0, 0})));
  CHECK_FALSE(is_primitive(make_vector({2, 4})));
  CHECK(is_primitive(make_vector({3, 5})));
  CHECK(is_primitive(make_vector({-1, 0, 0})));
  CHECK_FALSE(is_primitive(make_vector({0, -6, 9})));
}

TEST_CASE("canonical_sign") {
  CHECK(canonical_sign(make_vector({0, -1})) == make_vector({0, 1}));
  CHECK(canonical_sign(make_vector({1, -2})) == make_vector({1, -2}));
  CHECK(canonical_sign(make_vector({-3, 1})) == make_vector({3, -1}));
  const LatticeVector v = make_vector({0, -4, 7});
  CHECK(canonical_sign(canonical_sign(v)) == canonical_sign(v));
  CHECK_THROWS_AS(canonical_sign(make_vector({0, 0})), DomainError);
}

TEST_CASE("QNorm parsing and membership") {
  CHECK(QNorm::parse("1") == QNorm::one());
  CHECK(QNorm::parse("inf") == QNorm::infinity());
  CHECK(QNorm::parse("7").exponent() == 7u);
  CHECK_THROWS_AS(QNorm::parse("0"), DomainError);
  CHECK_THROWS_AS(QNorm::parse("x"), DomainError);
  CHECK_THROWS_AS(QNorm::infinity().exponent(), DomainError);
  CHECK(QNorm::two().contains(make_vector({3, 4}), 5));
  CHECK_FALSE(QNorm::two().contains(make_vector({3, 5}), 5));
  CHECK(QNorm::infinity().contains(make_vector({5, -5}), 5));
  CHECK(QNorm::finite(40).contains(make_vector({3, 3}), 3) == false);
}

TEST_CASE("enumerate_primitive examples") {
  const PointMatrix p1 = enumerate_primitive(2, 1, QNorm::one(), Region::canonical_half);
  CHECK(columns(p1) == std::vector<oracle::Point>{{0, 1}, {1, 0}});
  const PointMatrix p2 = enumerate_primitive(2, 2, QNorm::one(), Region::canonical_half);
  CHECK(columns(p2) == std::vector<oracle::Point>{{0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(enumerate_primitive(3, 2, QNorm::one(), Region::canonical_half).cols() == 9);
}

TEST_CASE("enumerate_primitive matches the box-filter oracle, including order") {
  for (const QNorm q : {QNorm::one(), QNorm::two(), QNorm::finite(3), QNorm::infinity()}) {
    for (int d = 1; d <= 3; ++d) {
      for (Coord p = 0; p <= 6; ++p) {
        for (Region region : kAllRegions) {
          CAPTURE(d);
          CAPTURE(p);
          CAPTURE(q.name());
          CAPTURE(to_string(region));
          const auto got = columns(enumerate_primitive(d, p, q, region));
          CHECK(got == oracle::primitive_points(d, p, oracle_q(q), to_oracle(region)));
        }
      }
    }
  }
}

TEST_CASE("enumerated points are primitive and canonical") {
  const PointMatrix pts = enumerate_primitive(3, 7, QNorm::two(), Region::canonical_half);
  for (Eigen::Index c = 0; c < pts.cols(); ++c) {
    const LatticeVector v = pts.col(c);
    CHECK(is_primitive(v));
    CHECK(canonical_sign(v) == v);
    CHECK(QNorm::two().contains(v, 7));
  }
}

TEST_CASE("large exponents switch to big-integer budgets") {
  // 9^40 does not fit in 64 bits.
  const auto q = QNorm::finite(40);
  const auto got = columns(enumerate_primitive(2, 9, q, Region::canonical_half));
  std::vector<oracle::Point> expected;
  for (long long x = 0; x <= 9; ++x)
    for (long long y = -9; y <= 9; ++y) {
      const oracle::Point pt{x, y};
      if (!oracle::in_region(pt, oracle::Region::canonical_half) || oracle::gcd_of(pt) != 1) continue;
      BigInt s = boost::multiprecision::pow(BigInt(std::llabs(x)), 40) +
                 boost::multiprecision::pow(BigInt(std::llabs(y)), 40);
      if (s <= boost::multiprecision::pow(BigInt(9), 40)) expected.push_back(pt);
    }
  CHECK(got == expected);
}

TEST_CASE("results do not depend on the worker count") {
  for (Region region : kAllRegions) {
    const PointMatrix serial = enumerate_primitive(3, 9, QNorm::one(), region, {100'000'000, 1});
    const PointMatrix parallel = enumerate_primitive(3, 9, QNorm::one(), region, {100'000'000, 4});
    CHECK(serial == parallel);
    const auto a = primitive_stats(3, 9, QNorm::two(), region, {100'000'000, 1});
    const auto b = primitive_stats(3, 9, QNorm::two(), region, {100'000'000, 3});
    CHECK(a.count == b.count);
    CHECK(a.abs_sums == b.abs_sums);
  }
}

TEST_CASE("enumeration cap") {
  EnumerationOptions tight;
  tight.candidate_cap = 100;
  CHECK_THROWS_AS(enumerate_primitive(2, 20, QNorm::one(), Region::full_ball, tight), ResourceError);
  try {
    enumerate_primitive(2, 20, QNorm::one(), Region::full_ball, tight);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  CHECK_NOTHROW(enumerate_primitive(2, 3, QNorm::one(), Region::full_ball, tight));
}

TEST_CASE("lattice_count_ball") {
  CHECK(lattice_count_ball(2, 2, QNorm::one()) == 13);
  CHECK(lattice_count_ball(2, 0, QNorm::one()) == 1);
  CHECK(lattice_count_ball(2, 1, QNorm::infinity()) == 9);
  for (unsigned q : {1u, 2u, 3u, 0u}) {
    const QNorm norm = q == 0 ? QNorm::infinity() : QNorm::finite(q);
    for (int d = 1; d <= 4; ++d)
      for (Coord n = 0; n <= 6; ++n) CHECK(lattice_count_ball(d, n, norm) == oracle::lattice_points(d, n, q));
  }
}

TEST_CASE("count_primitive_sieve examples") {
  CHECK(count_primitive_sieve(2, 2, QNorm::one(), Region::full_ball).count == 8);
  CHECK(count_primitive_sieve(2, 1, QNorm::one(), Region::full_ball).count == 4);
  const CountReport r = count_primitive_sieve(2, 10, QNorm::one(), Region::canonical_half);
  CHECK(r.count == 64);
  CHECK(r.method == CountMethod::sieve);
}

TEST_CASE("count_primitive_sieve rejects unsupported input") {
  CHECK_THROWS_AS(count_primitive_sieve(2, 5, QNorm::one(), Region::positive_orthant), UnsupportedRegion);
  CHECK_THROWS_AS(count_primitive_sieve(2, 5, QNorm::one(), Region::orthant_interior), UnsupportedRegion);
  CHECK_THROWS_AS(count_primitive_sieve(1, 5, QNorm::one(), Region::full_ball), DomainError);
  CHECK_THROWS_AS(count_primitive_sieve(2, 0, QNorm::one(), Region::full_ball), DomainError);
}

TEST_CASE("sieve agrees with enumeration") {
  for (const QNorm q : {QNorm::one(), QNorm::two(), QNorm::infinity()}) {
    for (int d = 2; d <= 3; ++d) {
      for (Coord p = 1; p <= 15; ++p) {
        const BigInt full = count_primitive_sieve(d, p, q, Region::full_ball).count;
        const BigInt half = count_primitive_sieve(d, p, q, Region::canonical_half).count;
        CHECK(full == count_primitive_enumeration(d, p, q, Region::full_ball).count);
        CHECK(half == count_primitive_enumeration(d, p, q, Region::canonical_half).count);
        CHECK(full == 2 * half);
      }
    }
  }
}

TEST_CASE("planar 1-norm count equals twice the totient sum") {
  long long totient_sum = 0;
  for (Coord p = 1; p <= 60; ++p) {
    totient_sum += oracle::totient(p);
    CHECK(count_primitive_sieve(2, p, QNorm::one(), Region::canonical_half).count == 2 * totient_sum);
  }
}

TEST_CASE("a_coeff") {
  for (Coord p = 1; p <= 12; ++p) {
    CHECK(a_coeff(1, p, QNorm::one()) == 1);
    CHECK(a_coeff(1, p, QNorm::infinity()) == 1);
  }
  CHECK(a_coeff(2, 2, QNorm::one()) == 1);
  CHECK(a_coeff(2, 3, QNorm::one()) == 3);
}

TEST_CASE("orthant decomposition of the full ball") {
  for (const QNorm q : {QNorm::one(), QNorm::two(), QNorm::infinity()}) {
    for (int d = 1; d <= 4; ++d) {
      for (Coord p = 1; p <= 8; ++p) {
        BigInt sum = 0;
        for (int i = 1; i <= d; ++i)
          sum += (BigInt(1) << i) * binomial(d, i) * a_coeff(i, p, q);
        CHECK(sum == count_primitive_enumeration(d, p, q, Region::full_ball).count);
      }
    }
  }
}

TEST_CASE("negative radius and dimension are domain errors") {
  CHECK_THROWS_AS(enumerate_primitive(0, 3, QNorm::one(), Region::full_ball), DomainError);
  CHECK_THROWS_AS(enumerate_primitive(2, -1, QNorm::one(), Region::full_ball), DomainError);
  CHECK(enumerate_primitive(2, 0, QNorm::one(), Region::full_ball).cols() == 0);
}
