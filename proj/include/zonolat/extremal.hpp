#ifndef ZONOLAT_EXTREMAL_HPP
#define ZONOLAT_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include "zonolat/core.hpp"
#include "zonolat/primitive_points.hpp"
#include "zonolat/zonotope.hpp"

namespace zonolat {

struct SpecialDeltaZ {
  BigInt k;
  BigInt delta_z;
};

/// (k(H_1(d,p)), delta(H_1(d,p))). At that k the largest diameter of a
/// lattice zonotope in [0,k]^d is delta(H_1(d,p)), attained only by H_1(d,p).
SpecialDeltaZ special_delta_z(int d, Coord p, const EnumerationOptions& options = {});

struct ExtremalOptions {
  int max_dimension = 2;
  Coord max_k = 9;
  std::uint64_t node_cap = 1'000'000'000;
};

struct ExtremalResult {
  int d = 0;
  Coord k = 0;
  std::int64_t best_count = 0;
  std::vector<GeneratorSet> optimal_sets;  // sorted, each in canonical column order
  bool search_exhaustive = false;
  std::uint64_t nodes = 0;
};

/// Candidate generators: canonical primitive vectors with every |coordinate| <= k.
PointMatrix extremal_candidates(int d, Coord k);

/**
 * Largest number of pairwise non-collinear lattice generators whose
 * coordinate widths are all at most k, by exhaustive branch-and-bound.
 *
 * Candidates are the primitive canonical vectors, visited in order of
 * increasing 1-norm. A branch is cut when even the cheapest remaining
 * candidates cannot fit into the unused 1-norm budget k*d well enough to
 * reach the incumbent count, so every optimum is reported. Exceeding
 * `node_cap` stops the search with search_exhaustive = false.
 *
 * Throws ResourceError if d or k exceed the option caps.
 */
ExtremalResult brute_force_delta_z(int d, Coord k, const ExtremalOptions& options = {});

}  // namespace zonolat

#endif  // ZONOLAT_EXTREMAL_HPP
