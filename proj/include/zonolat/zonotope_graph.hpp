#ifndef ZONOLAT_ZONOTOPE_GRAPH_HPP
#define ZONOLAT_ZONOTOPE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zonolat/core.hpp"
#include "zonolat/zonotope.hpp"

namespace zonolat {

/// One sign per generator; +1 or -1.
struct SignVector {
  std::vector<std::int8_t> signs;

  std::size_t size() const { return signs.size(); }
  SignVector operator-() const;
  std::string str() const;  // e.g. "+-+"

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

struct GraphVertex {
  SignVector signs;
  LatticeVector coords;  // sum of the generators with a + sign
};

/// Vertex-edge graph of a zonotope placed as the Minkowski sum of [0, g_i].
struct ZonotopeGraph {
  std::size_t generator_count = 0;
  std::vector<GraphVertex> vertices;  // lexicographic on signs, + before -
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted

  /// Adjacency lists derived from `edges`.
  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct GraphOptions {
  std::size_t max_generators = 12;
  int max_dimension = 6;
};

/// True iff some c satisfies rows(i) . c > 0 for every row (columns are the
/// constraint normals). Decided exactly by Fourier-Motzkin elimination over
/// the integers.
bool strictly_feasible(const PointMatrix& normals);

/// Sign vectors s for which s_i (g_i . c) > 0 has a solution c.
std::vector<SignVector> feasible_sign_vectors(const GeneratorSet& zonotope,
                                              const GraphOptions& options = {});

ZonotopeGraph build_graph(const GeneratorSet& zonotope, const GraphOptions& options = {});

/// BFS distance between two vertices; throws InvariantViolation if unreachable.
std::size_t graph_distance(const ZonotopeGraph& graph, std::size_t from, std::size_t to);

/// Maximum BFS eccentricity. Throws InvariantViolation if disconnected.
std::size_t graph_diameter(const ZonotopeGraph& graph);

}  // namespace zonolat

#endif  // ZONOLAT_ZONOTOPE_GRAPH_HPP
