#ifndef ZONOLAT_PRIMITIVE_POINTS_HPP
#define ZONOLAT_PRIMITIVE_POINTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zonolat/core.hpp"

namespace zonolat {

/// Ball norm: a finite integer exponent q >= 1, or infinity.
class QNorm {
 public:
  static QNorm finite(unsigned q);
  static QNorm infinity() { return QNorm(0); }
  static QNorm one() { return QNorm(1); }
  static QNorm two() { return QNorm(2); }

  /// Accepts "1", "2", any positive integer, or "inf".
  static QNorm parse(std::string_view text);

  bool is_infinite() const { return q_ == 0; }
  /// Exponent q; throws DomainError for the infinity norm.
  unsigned exponent() const;
  std::string name() const;

  /// Exact test ||v||_q <= radius.
  bool contains(const LatticeVector& v, Coord radius) const;

  friend bool operator==(const QNorm&, const QNorm&) = default;

 private:
  explicit QNorm(unsigned q) : q_(q) {}
  unsigned q_;  // 0 encodes infinity
};

enum class Region { canonical_half, full_ball, positive_orthant, orthant_interior };

std::string to_string(Region region);
Region parse_region(std::string_view text);

enum class CountMethod { enumeration, sieve };
std::string to_string(CountMethod method);

struct EnumerationOptions {
  /// Largest number of candidate lattice points a walk may visit.
  std::uint64_t candidate_cap = 100'000'000;
  /// 0 selects default_thread_count().
  unsigned threads = 0;
};

struct CountReport {
  int d = 0;
  Coord p = 0;
  QNorm q = QNorm::one();
  Region region = Region::full_ball;
  BigInt count;
  CountMethod method = CountMethod::enumeration;
};

/// Streaming summary of the primitive points of a region: how many, and the
/// per-coordinate sums of absolute values.
struct PrimitiveStats {
  BigInt count;
  std::vector<BigInt> abs_sums;
};

bool is_primitive(const LatticeVector& v);

/// v or -v, whichever has a positive first non-zero coordinate.
LatticeVector canonical_sign(const LatticeVector& v);

bool is_canonical(const LatticeVector& v);

/// Primitive points of `region` inside B_q(d, p), one per column, in
/// lexicographic order.
PointMatrix enumerate_primitive(int d, Coord p, QNorm q, Region region,
                                const EnumerationOptions& options = {});

/// Same walk as enumerate_primitive without storing the points.
PrimitiveStats primitive_stats(int d, Coord p, QNorm q, Region region,
                               const EnumerationOptions& options = {});

/// Number of lattice points (primitive or not) of `region` in B_q(d, p); this
/// is the candidate count an enumeration visits.
BigInt region_lattice_count(int d, Coord p, QNorm q, Region region,
                            const EnumerationOptions& options = {});

/// |B_q(d, n) ∩ Z^d|.
BigInt lattice_count_ball(int d, Coord n, QNorm q, const EnumerationOptions& options = {});

/// Möbius-sieve count for full_ball or canonical_half.
CountReport count_primitive_sieve(int d, Coord p, QNorm q, Region region,
                                  const EnumerationOptions& options = {});

/// Count by direct enumeration; supports every region.
CountReport count_primitive_enumeration(int d, Coord p, QNorm q, Region region,
                                        const EnumerationOptions& options = {});

/// Primitive points of B_q(i, p) with every coordinate >= 1.
BigInt a_coeff(int i, Coord p, QNorm q, const EnumerationOptions& options = {});

}  // namespace zonolat

#endif  // ZONOLAT_PRIMITIVE_POINTS_HPP
