#ifndef ZONOLAT_SAMPLING_HPP
#define ZONOLAT_SAMPLING_HPP

#include <random>

#include "zonolat/zonotope.hpp"

namespace zonolat {

/// Canonical primitive vectors of 1-norm at most max_norm, in lexicographic order.
PointMatrix primitive_pool(int d, Coord max_norm);

/// m distinct vectors drawn uniformly from primitive_pool(d, max_norm),
/// retried until they span R^d. Throws DomainError if m < d or m exceeds
/// the pool size.
GeneratorSet sample_full_dimensional(int d, Coord max_norm, Eigen::Index m, std::mt19937_64& rng);

}  // namespace zonolat

#endif  // ZONOLAT_SAMPLING_HPP
