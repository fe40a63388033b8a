#include "zonolat/number_theory.hpp"

#include <cmath>
#include <string>

namespace zonolat {

using boost::multiprecision::cpp_rational;

MobiusTable::MobiusTable(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw DomainError("mobius_sieve: limit must be at least 1");
  mu_.assign(limit + 1, 0);
  mu_[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu_[i] = -1;
    }
    for (std::uint32_t prime : primes) {
      const std::uint64_t multiple = i * prime;
      if (multiple > limit) break;
      composite[multiple] = true;
      if (i % prime == 0) {
        mu_[multiple] = 0;
        break;
      }
      mu_[multiple] = static_cast<std::int8_t>(-mu_[i]);
    }
  }
  mertens_.assign(limit + 1, 0);
  for (std::uint64_t i = 1; i <= limit; ++i) mertens_[i] = mertens_[i - 1] + mu_[i];
}

int MobiusTable::operator()(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw DomainError("MobiusTable: argument " + std::to_string(n) + " outside [1, " +
                      std::to_string(limit_) + "]");
  }
  return mu_[n];
}

std::int64_t MobiusTable::mertens(std::uint64_t n) const {
  if (n > limit_) throw DomainError("MobiusTable: mertens argument above limit");
  return mertens_[n];
}

MobiusTable mobius_sieve(std::uint64_t limit) { return MobiusTable(limit); }

// The tail T_N = sum_{n>N} n^-d lies in [I(N+1), I(N)] with I(x) = x^(1-d)/(d-1).
// Taking the midpoint leaves an error of at most (I(N) - I(N+1))/2 <= N^-d / 2.
long double zeta_partial(int d, std::uint64_t terms) {
  if (d < 2) throw DomainError("zeta: d must be at least 2 (series diverges)");
  if (terms == 0) throw DomainError("zeta_partial: need at least one term");
  long double sum = 0.0L;
  for (std::uint64_t n = terms; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -d);
  const long double big_n = static_cast<long double>(terms);
  const long double upper = std::pow(big_n, 1 - d) / (d - 1);
  const long double lower = std::pow(big_n + 1.0L, 1 - d) / (d - 1);
  return sum + 0.5L * (upper + lower);
}

std::uint64_t zeta_terms_for(int d, double tol) {
  if (d < 2) throw DomainError("zeta: d must be at least 2 (series diverges)");
  if (!(tol >= 1e-15)) throw DomainError("zeta: tolerance must be at least 1e-15");
  // N^-d / 2 <= tol / 2 leaves the other half of tol for rounding.
  const double n = std::ceil(std::pow(tol, -1.0 / d));
  return static_cast<std::uint64_t>(std::max(n, 1.0));
}

double zeta(int d, double tol) {
  return static_cast<double>(zeta_partial(d, zeta_terms_for(d, tol)));
}

double gamma_pos(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_pos: argument must be positive");
  return std::tgamma(x);
}

std::vector<cpp_rational> bernoulli_numbers(unsigned n) {
  std::vector<cpp_rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    cpp_rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += cpp_rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / (m + 1);
  }
  return b;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// sum_{i=1}^{n} i^d = 1/(d+1) * sum_{j=0}^{d} C(d+1, j) B+_j n^(d+1-j), B+_1 = +1/2.
BigInt faulhaber_sum(unsigned d, std::uint64_t p) {
  if (p == 0) throw DomainError("faulhaber_sum: p must be at least 1");
  const std::uint64_t n = p - 1;
  if (n == 0) return 0;
  auto b = bernoulli_numbers(d);
  if (d >= 1) b[1] = -b[1];
  cpp_rational acc = 0;
  for (unsigned j = 0; j <= d; ++j) {
    acc += cpp_rational(binomial(d + 1, j)) * b[j] * cpp_rational(BigInt(boost::multiprecision::pow(BigInt(n), d + 1 - j)));
  }
  acc /= d + 1;
  if (denominator(acc) != 1) throw InvariantViolation("faulhaber_sum: non-integral result");
  return numerator(acc);
}

}  // namespace zonolat
