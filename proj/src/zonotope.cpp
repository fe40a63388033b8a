#include "zonolat/zonotope.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zonolat {

namespace {

bool column_less(const PointMatrix& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (m(r, a) != m(r, b)) return m(r, a) < m(r, b);
  }
  return false;
}

PointMatrix sorted_columns(const PointMatrix& m) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m.cols()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return column_less(m, a, b); });
  PointMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = m.col(order[i]);
  return out;
}

// Fraction-free Gaussian elimination (Bareiss) over the integers.
int exact_rank(const PointMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(rows),
                                     std::vector<BigInt>(static_cast<std::size_t>(cols)));
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) a[r][c] = m(r, c);
  int rank = 0;
  BigInt previous = 1;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / previous;
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

ZonotopeMetrics metrics_from_stats(const PrimitiveStats& stats) {
  ZonotopeMetrics m{stats.count, stats.abs_sums, 0};
  for (const auto& w : m.widths) m.k = std::max(m.k, w);
  return m;
}

}  // namespace

GeneratorSet::GeneratorSet(int d) : d_(d), generators_(d, 0) {
  if (d < 1) throw DomainError("GeneratorSet: dimension must be at least 1");
}

GeneratorSet::GeneratorSet(int d, PointMatrix generators, Trusted)
    : d_(d), generators_(std::move(generators)) {}

GeneratorSet::GeneratorSet(int d, PointMatrix generators) : d_(d) {
  if (d < 1) throw DomainError("GeneratorSet: dimension must be at least 1");
  if (generators.rows() != d && generators.cols() > 0) {
    throw DomainError("GeneratorSet: generators have " + std::to_string(generators.rows()) +
                      " coordinates, expected " + std::to_string(d));
  }
  generators.resize(d, generators.cols());
  PointMatrix directions(d, generators.cols());
  for (Eigen::Index i = 0; i < generators.cols(); ++i) {
    const LatticeVector g = generators.col(i);
    if (!is_canonical(g)) {
      throw DomainError(g.isZero() ? "GeneratorSet: zero generator"
                                   : "GeneratorSet: generator " + std::to_string(i) +
                                         " is not sign-canonical");
    }
    Coord gcd = 0;
    for (Eigen::Index r = 0; r < d; ++r) gcd = std::gcd(gcd, g(r));
    directions.col(i) = g / gcd;
  }
  const PointMatrix sorted_dirs = sorted_columns(directions);
  for (Eigen::Index i = 1; i < sorted_dirs.cols(); ++i) {
    if (sorted_dirs.col(i) == sorted_dirs.col(i - 1)) {
      throw DomainError("GeneratorSet: collinear generators in direction index " + std::to_string(i));
    }
  }
  generators_ = sorted_columns(generators);
}

GeneratorSet GeneratorSet::from_directions(int d, const std::vector<LatticeVector>& vectors) {
  PointMatrix m(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw DomainError("GeneratorSet: vector of wrong dimension");
    m.col(static_cast<Eigen::Index>(i)) = canonical_sign(vectors[i]);
  }
  return GeneratorSet(d, std::move(m));
}

bool GeneratorSet::is_full_dimensional() const { return exact_rank(generators_) == d_; }

GeneratorSet build_H(int d, Coord p, QNorm q, const EnumerationOptions& options) {
  if (p < 1) throw DomainError("build_H: p must be at least 1");
  return GeneratorSet(d, enumerate_primitive(d, p, q, Region::canonical_half, options),
                      GeneratorSet::Trusted{});
}

GeneratorSet build_Hplus(int d, Coord p, QNorm q, const EnumerationOptions& options) {
  if (p < 1) throw DomainError("build_Hplus: p must be at least 1");
  return GeneratorSet(d, enumerate_primitive(d, p, q, Region::positive_orthant, options),
                      GeneratorSet::Trusted{});
}

ZonotopeMetrics metrics(const GeneratorSet& zonotope) {
  ZonotopeMetrics m{BigInt(zonotope.size()), {}, 0};
  const PointMatrix& g = zonotope.generators();
  for (Eigen::Index r = 0; r < zonotope.dimension(); ++r) {
    __int128 width = 0;
    for (Eigen::Index c = 0; c < g.cols(); ++c) width += g(r, c) < 0 ? -g(r, c) : g(r, c);
    // Widths stay far below 2^63 under any realistic enumeration cap.
    m.widths.emplace_back(static_cast<std::int64_t>(width));
    m.k = std::max(m.k, m.widths.back());
  }
  return m;
}

ZonotopeMetrics metrics_H(int d, Coord p, QNorm q, const EnumerationOptions& options) {
  if (p < 1) throw DomainError("metrics_H: p must be at least 1");
  return metrics_from_stats(primitive_stats(d, p, q, Region::canonical_half, options));
}

ZonotopeMetrics metrics_Hplus(int d, Coord p, QNorm q, const EnumerationOptions& options) {
  if (p < 1) throw DomainError("metrics_Hplus: p must be at least 1");
  return metrics_from_stats(primitive_stats(d, p, q, Region::positive_orthant, options));
}

LatticeVector box_corner(const GeneratorSet& zonotope) {
  return zonotope.generators().cwiseMin(Coord{0}).rowwise().sum();
}

BigInt diameter_H1(int d, Coord p, const EnumerationOptions& options) {
  if (p < 0) throw DomainError("diameter_H1: p must be non-negative");
  if (p == 0) return 0;
  if (d == 1) return 1;
  return count_primitive_sieve(d, p, QNorm::one(), Region::canonical_half, options).count;
}

Lemma41Result lemma41_check(int d, Coord p, const EnumerationOptions& options) {
  if (d < 2) throw DomainError("lemma41_check: d must be at least 2");
  if (p < 1) throw DomainError("lemma41_check: p must be at least 1");
  Lemma41Result result;
  result.lhs = metrics_H(d, p, QNorm::one(), options).k * d;
  BigInt smaller = 0;
  for (Coord i = 0; i < p; ++i) smaller += diameter_H1(d, i, options);
  result.rhs = p * diameter_H1(d, p, options) - smaller;
  result.equal = result.lhs == result.rhs;
  return result;
}

std::string to_string(DominanceVerdict verdict) {
  switch (verdict) {
    case DominanceVerdict::strictly_dominated: return "strictly_dominated";
    case DominanceVerdict::weakly_dominated: return "weakly_dominated";
    case DominanceVerdict::tie_is_translate: return "tie_is_translate";
    case DominanceVerdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

DominanceVerdict dominance_check(const GeneratorSet& zonotope, Coord p,
                                 const EnumerationOptions& options) {
  if (p < 1) throw DomainError("dominance_check: p must be at least 1");
  const int d = zonotope.dimension();
  if (!zonotope.is_full_dimensional()) {
    throw DomainError("dominance_check: the zonotope is not " + std::to_string(d) + "-dimensional");
  }
  const ZonotopeMetrics h = metrics_H(d, p, QNorm::one(), options);
  const ZonotopeMetrics z = metrics(zonotope);
  if (h.diameter > z.diameter) return DominanceVerdict::not_applicable;

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("dominance_check: " + what + " (delta(H)=" + h.diameter.str() +
                             ", delta(Z)=" + z.diameter.str() + ", k(H)=" + h.k.str() +
                             ", k(Z)=" + z.k.str() + ")");
  };
  if (h.k > z.k) fail("k(H_1) exceeds k(Z) although delta(H_1) <= delta(Z)");
  if (h.diameter < z.diameter) {
    if (h.k == z.k) fail("k(H_1) = k(Z) although delta(H_1) < delta(Z)");
    return DominanceVerdict::strictly_dominated;
  }
  if (h.k < z.k) return DominanceVerdict::weakly_dominated;
  if (!(build_H(d, p, QNorm::one(), options) == zonotope)) {
    fail("equal diameter and k but Z is not a translate of H_1");
  }
  return DominanceVerdict::tie_is_translate;
}

}  // namespace zonolat
