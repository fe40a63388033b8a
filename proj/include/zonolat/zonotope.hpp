#ifndef ZONOLAT_ZONOTOPE_HPP
#define ZONOLAT_ZONOTOPE_HPP

#include <string>
#include <vector>

#include "zonolat/core.hpp"
#include "zonolat/primitive_points.hpp"

namespace zonolat {

/**
 * Generators of a lattice zonotope, one column per generator.
 *
 * Every generator is nonzero with a positive first non-zero coordinate, no
 * two are collinear, and columns are kept in lexicographic order so that two
 * sets describe the same zonotope (up to translation) iff they compare equal.
 * Generators need not be primitive.
 */
class GeneratorSet {
 public:
  /// Empty set in dimension d.
  explicit GeneratorSet(int d);

  /// Validates and sorts. Throws DomainError on a zero, non-canonical or
  /// collinear generator, or on a row count different from d.
  GeneratorSet(int d, PointMatrix generators);

  /// Sign-canonicalizes each vector first, then validates as above.
  static GeneratorSet from_directions(int d, const std::vector<LatticeVector>& vectors);

  int dimension() const { return d_; }
  Eigen::Index size() const { return generators_.cols(); }
  const PointMatrix& generators() const { return generators_; }
  LatticeVector generator(Eigen::Index i) const { return generators_.col(i); }

  /// Rank of the generator matrix equals d.
  bool is_full_dimensional() const;

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.d_ == b.d_ && a.generators_.cols() == b.generators_.cols() &&
           a.generators_ == b.generators_;
  }

 private:
  struct Trusted {};
  GeneratorSet(int d, PointMatrix generators, Trusted);
  friend GeneratorSet build_H(int, Coord, QNorm, const EnumerationOptions&);
  friend GeneratorSet build_Hplus(int, Coord, QNorm, const EnumerationOptions&);

  int d_;
  PointMatrix generators_;
};

struct ZonotopeMetrics {
  BigInt diameter;             // number of generators
  std::vector<BigInt> widths;  // width_j = sum over generators of |g_j|
  BigInt k;                    // max width
};

/// H_q(d, p): all canonical primitive vectors of q-norm at most p.
GeneratorSet build_H(int d, Coord p, QNorm q, const EnumerationOptions& options = {});

/// H_q^+(d, p): the generators of H_q(d, p) in the non-negative orthant.
GeneratorSet build_Hplus(int d, Coord p, QNorm q, const EnumerationOptions& options = {});

/// Diameter, coordinate widths and k. The bounding box of the zonotope
/// (placed as the sum of [0, g]) has side lengths equal to the widths and a
/// lattice corner, so k is the smallest integer with a lattice translate in
/// [0, k]^d.
ZonotopeMetrics metrics(const GeneratorSet& zonotope);

/// metrics(build_H(d, p, q)) without materializing the generators.
ZonotopeMetrics metrics_H(int d, Coord p, QNorm q, const EnumerationOptions& options = {});

/// metrics(build_Hplus(d, p, q)) without materializing the generators.
ZonotopeMetrics metrics_Hplus(int d, Coord p, QNorm q, const EnumerationOptions& options = {});

/// Lowest corner of the bounding box: sum over generators of min(0, g).
/// Translating by its negative places the zonotope in [0, k]^d.
LatticeVector box_corner(const GeneratorSet& zonotope);

/// Number of generators of H_1(d, p), with the value 0 at p = 0.
BigInt diameter_H1(int d, Coord p, const EnumerationOptions& options = {});

struct Lemma41Result {
  BigInt lhs;  // k(H_1(d,p)) * d
  BigInt rhs;  // p * delta(H_1(d,p)) - sum_{i<p} delta(H_1(d,i))
  bool equal = false;
};

/// Compares the directly measured k(H_1(d,p)) * d against the expression
/// built from the diameters of the smaller H_1(d,i).
Lemma41Result lemma41_check(int d, Coord p, const EnumerationOptions& options = {});

enum class DominanceVerdict {
  strictly_dominated,  // delta(H) < delta(Z), so k(H) < k(Z)
  weakly_dominated,    // delta(H) = delta(Z) and k(H) < k(Z)
  tie_is_translate,    // both equal, and Z has the generators of H_1(d,p)
  not_applicable,      // delta(H) > delta(Z)
};

std::string to_string(DominanceVerdict verdict);

/// Compares Z against H_1(d, p) in diameter and box size. Throws
/// DomainError if Z is not full-dimensional and InvariantViolation if the
/// comparison ever contradicts dominance by H_1(d,p).
DominanceVerdict dominance_check(const GeneratorSet& zonotope, Coord p,
                                 const EnumerationOptions& options = {});

}  // namespace zonolat

#endif  // ZONOLAT_ZONOTOPE_HPP
