#ifndef ZONOLAT_NUMBER_THEORY_HPP
#define ZONOLAT_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

#include "zonolat/core.hpp"

namespace zonolat {

/// Möbius function values mu(1)..mu(limit), built once and immutable.
class MobiusTable {
 public:
  explicit MobiusTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  /// mu(n) for 1 <= n <= limit.
  int operator()(std::uint64_t n) const;

  /// Mertens function M(n) = sum_{m<=n} mu(m), with M(0) = 0.
  std::int64_t mertens(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::int8_t> mu_;       // index n, mu_[0] unused
  std::vector<std::int64_t> mertens_;  // prefix sums, mertens_[0] = 0
};

/// Linear sieve up to `limit`. Throws DomainError for limit = 0.
MobiusTable mobius_sieve(std::uint64_t limit);

/// Riemann zeta at an integer d >= 2, absolute error <= tol.
double zeta(int d, double tol = 1e-13);

/// The estimate zeta() uses with a fixed number of series terms: the partial
/// sum plus the midpoint of the integral bracket on the tail.
long double zeta_partial(int d, std::uint64_t terms);

/// Number of series terms zeta(d, tol) uses.
std::uint64_t zeta_terms_for(int d, double tol);

/// Gamma(x) for x > 0.
double gamma_pos(double x);

/// sum_{i=1}^{p-1} i^d, exactly, by Faulhaber's formula.
BigInt faulhaber_sum(unsigned d, std::uint64_t p);

/// Bernoulli numbers B_0..B_n with the B_1 = -1/2 convention.
std::vector<boost::multiprecision::cpp_rational> bernoulli_numbers(unsigned n);

/// Binomial coefficient C(n, k), exact; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace zonolat

#endif  // ZONOLAT_NUMBER_THEORY_HPP
