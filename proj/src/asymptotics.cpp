#include "zonolat/asymptotics.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "zonolat/number_theory.hpp"
#include "zonolat/zonotope.hpp"

namespace zonolat {

namespace {

double cached_zeta(int d) {
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, zeta(d)).first;
  return it->second;
}

double gamma_inverse_q(QNorm q) { return q.is_infinite() ? 1.0 : gamma_pos(1.0 / q.exponent() + 1.0); }

double gamma_d_over_q(int d, QNorm q) {
  return q.is_infinite() ? 1.0 : gamma_pos(static_cast<double>(d) / q.exponent() + 1.0);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_dimension(int d) {
  if (d < 2) throw DomainError("asymptotic constants need d >= 2");
}

long double to_real(const BigInt& value) { return value.convert_to<long double>(); }

}  // namespace

double ball_volume(int d, double p, QNorm q) {
  if (d < 1) throw DomainError("ball_volume: d must be at least 1");
  if (!(p > 0.0)) throw DomainError("ball_volume: p must be positive");
  return std::pow(2.0 * gamma_inverse_q(q) * p, d) / gamma_d_over_q(d, q);
}

double limit_thm21(int d, QNorm q) {
  require_dimension(d);
  return std::pow(2.0 * gamma_inverse_q(q), d) / (2.0 * gamma_d_over_q(d, q) * cached_zeta(d));
}

double limit_thm22(int d, QNorm q) {
  require_dimension(d);
  return std::pow(gamma_inverse_q(q), d) / (gamma_d_over_q(d, q) * cached_zeta(d));
}

double limit_thm42(int d) {
  require_dimension(d);
  return std::ldexp(1.0, d - 1) / (factorial(d + 1) * cached_zeta(d));
}

double limit_cor44(int d) {
  require_dimension(d);
  return std::ldexp(1.0, d) * std::pow(d + 1.0, d) / (2.0 * factorial(d) * cached_zeta(d));
}

double c_of_d(int d) { return std::pow(limit_cor44(d), 1.0 / (d + 1)); }

KnownBounds known_bounds(int d, long long k) {
  if (d < 1 || k < 1) throw DomainError("known_bounds: d and k must be at least 1");
  KnownBounds b;
  if (k == 1) b.exact = d;
  if (k == 2) b.exact = 3LL * d / 2;
  if (k >= 3) b.upper = k * d - (2LL * d + 2) / 3 - (k - 3);
  if (k < 2LL * d) b.lower = (k + 1) * d / 2;
  return b;
}

std::string to_string(Asymptotic which) {
  switch (which) {
    case Asymptotic::thm21: return "thm21";
    case Asymptotic::thm22: return "thm22";
    case Asymptotic::thm42: return "thm42";
    case Asymptotic::cor44: return "cor44";
    case Asymptotic::thm11: return "thm11";
  }
  return "unknown";
}

Asymptotic parse_asymptotic(std::string_view text) {
  for (Asymptotic a : {Asymptotic::thm21, Asymptotic::thm22, Asymptotic::thm42,
                       Asymptotic::cor44, Asymptotic::thm11}) {
    if (text == to_string(a)) return a;
  }
  throw DomainError("unknown asymptotic '" + std::string(text) +
                    "' (expected thm21, thm22, thm42, cor44 or thm11)");
}

ConvergenceRow convergence_row(int d, QNorm q, Coord p, Asymptotic which,
                               const EnumerationOptions& options) {
  require_dimension(d);
  if (p < 1) throw DomainError("convergence_row: p must be at least 1");
  const bool needs_one = which == Asymptotic::thm42 || which == Asymptotic::cor44 ||
                         which == Asymptotic::thm11;
  if (needs_one && q != QNorm::one()) {
    throw DomainError(to_string(which) + " is defined for q = 1 only");
  }
  ConvergenceRow row;
  row.p = p;
  const BigInt pd = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d));
  switch (which) {
    case Asymptotic::thm21: {
      const BigInt delta = count_primitive_sieve(d, p, q, Region::canonical_half, options).count;
      row.empirical = static_cast<double>(to_real(delta) / to_real(pd));
      row.limit = limit_thm21(d, q);
      break;
    }
    case Asymptotic::thm22: {
      const BigInt delta = metrics_Hplus(d, p, q, options).diameter;
      row.empirical = static_cast<double>(to_real(delta) / to_real(pd));
      row.limit = limit_thm22(d, q);
      break;
    }
    case Asymptotic::thm42: {
      const BigInt k = metrics_H(d, p, q, options).k;
      row.empirical = static_cast<double>(to_real(k) / to_real(pd * p));
      row.limit = limit_thm42(d);
      break;
    }
    case Asymptotic::cor44: {
      const ZonotopeMetrics m = metrics_H(d, p, q, options);
      const BigInt num = boost::multiprecision::pow(m.diameter, static_cast<unsigned>(d + 1));
      const BigInt den = boost::multiprecision::pow(m.k, static_cast<unsigned>(d));
      row.empirical = static_cast<double>(to_real(num) / to_real(den));
      row.limit = limit_cor44(d);
      break;
    }
    case Asymptotic::thm11: {
      const ZonotopeMetrics m = metrics_H(d, p, q, options);
      row.empirical = static_cast<double>(
          to_real(m.diameter) / std::pow(to_real(m.k), static_cast<long double>(d) / (d + 1)));
      row.limit = c_of_d(d);
      break;
    }
  }
  row.relative_gap = std::abs(row.empirical - row.limit) / row.limit;
  return row;
}

std::vector<ConvergenceRow> convergence_table(int d, QNorm q, const std::vector<Coord>& radii,
                                              Asymptotic which,
                                              const EnumerationOptions& options) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(radii.size());
  for (Coord p : radii) rows.push_back(convergence_row(d, q, p, which, options));
  return rows;
}

}  // namespace zonolat
