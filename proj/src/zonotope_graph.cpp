#include "zonolat/zonotope_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace zonolat {

namespace {

using Row = std::vector<Coord>;

// Divides by the gcd of the entries. Returns false for the zero row, which
// encodes the unsatisfiable strict inequality 0 > 0.
bool normalize(Row& row) {
  Coord g = 0;
  for (Coord v : row) g = std::gcd(g, v);
  if (g == 0) return false;
  if (g > 1)
    for (Coord& v : row) v /= g;
  return true;
}

Coord narrow(__int128 value) {
  if (value > std::numeric_limits<Coord>::max() || value < std::numeric_limits<Coord>::min()) {
    throw ResourceError("Fourier-Motzkin coefficient overflow");
  }
  return static_cast<Coord>(value);
}

bool fourier_motzkin(std::vector<Row> rows, std::size_t vars) {
  for (auto& r : rows)
    if (!normalize(r)) return false;
  for (std::size_t var = vars; var-- > 0;) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<Row> next, positive, negative;
    for (auto& r : rows) {
      if (r[var] > 0) positive.push_back(std::move(r));
      else if (r[var] < 0) negative.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const Row& pos : positive) {
      for (const Row& neg : negative) {
        // (-neg[var]) * pos + pos[var] * neg cancels the variable; both
        // multipliers are positive so strictness is preserved.
        Row combined(vars, 0);
        for (std::size_t j = 0; j < vars; ++j) {
          combined[j] = narrow(static_cast<__int128>(-neg[var]) * pos[j] +
                               static_cast<__int128>(pos[var]) * neg[j]);
        }
        if (!normalize(combined)) return false;
        next.push_back(std::move(combined));
      }
    }
    rows = std::move(next);
  }
  return true;
}

std::uint64_t mask_of(const SignVector& s) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.signs[i] < 0) mask |= std::uint64_t{1} << i;
  return mask;
}

void check_limits(const GeneratorSet& zonotope, const GraphOptions& options) {
  const auto m = static_cast<std::size_t>(zonotope.size());
  if (m > options.max_generators || m > 63) {
    throw ResourceError("zonotope graph: " + std::to_string(m) +
                        " generators exceed the generator cap of " +
                        std::to_string(std::min<std::size_t>(options.max_generators, 63)));
  }
  if (zonotope.dimension() > options.max_dimension) {
    throw ResourceError("zonotope graph: dimension " + std::to_string(zonotope.dimension()) +
                        " exceeds the cap of " + std::to_string(options.max_dimension));
  }
}

}  // namespace

SignVector SignVector::operator-() const {
  SignVector out = *this;
  for (auto& s : out.signs) s = static_cast<std::int8_t>(-s);
  return out;
}

std::string SignVector::str() const {
  std::string out;
  for (auto s : signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::vector<std::vector<std::size_t>> ZonotopeGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool strictly_feasible(const PointMatrix& normals) {
  std::vector<Row> rows;
  for (Eigen::Index c = 0; c < normals.cols(); ++c) {
    rows.emplace_back(normals.col(c).data(), normals.col(c).data() + normals.rows());
  }
  return fourier_motzkin(std::move(rows), static_cast<std::size_t>(normals.rows()));
}

std::vector<SignVector> feasible_sign_vectors(const GeneratorSet& zonotope,
                                              const GraphOptions& options) {
  check_limits(zonotope, options);
  const auto m = static_cast<std::size_t>(zonotope.size());
  const PointMatrix& g = zonotope.generators();
  std::vector<SignVector> out;
  PointMatrix normals(zonotope.dimension(), static_cast<Eigen::Index>(m));
  SignVector prefix;
  // Depth-first over sign prefixes; an infeasible prefix has no feasible
  // extension, so its subtree is skipped.
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      out.push_back(prefix);
      return;
    }
    for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
      normals.col(static_cast<Eigen::Index>(depth)) = s * g.col(static_cast<Eigen::Index>(depth));
      if (!strictly_feasible(normals.leftCols(static_cast<Eigen::Index>(depth + 1)))) continue;
      prefix.signs.push_back(s);
      self(self, depth + 1);
      prefix.signs.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

ZonotopeGraph build_graph(const GeneratorSet& zonotope, const GraphOptions& options) {
  ZonotopeGraph graph;
  graph.generator_count = static_cast<std::size_t>(zonotope.size());
  const PointMatrix& g = zonotope.generators();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (auto& s : feasible_sign_vectors(zonotope, options)) {
    LatticeVector coords = LatticeVector::Zero(zonotope.dimension());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.signs[i] > 0) coords += g.col(static_cast<Eigen::Index>(i));
    index.emplace(mask_of(s), graph.vertices.size());
    graph.vertices.push_back({std::move(s), std::move(coords)});
  }
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const std::uint64_t mask = mask_of(graph.vertices[v].signs);
    for (std::size_t i = 0; i < graph.generator_count; ++i) {
      auto it = index.find(mask ^ (std::uint64_t{1} << i));
      if (it != index.end() && it->second > v) graph.edges.emplace_back(v, it->second);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

namespace {

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(adj.size(), unseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u]) {
      if (dist[w] == unseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::size_t graph_distance(const ZonotopeGraph& graph, std::size_t from, std::size_t to) {
  if (from >= graph.vertices.size() || to >= graph.vertices.size()) {
    throw DomainError("graph_distance: vertex index out of range");
  }
  const std::size_t d = bfs(graph.adjacency(), from)[to];
  if (d == std::numeric_limits<std::size_t>::max()) {
    throw InvariantViolation("graph_distance: vertices are not connected");
  }
  return d;
}

std::size_t graph_diameter(const ZonotopeGraph& graph) {
  const auto adj = graph.adjacency();
  std::size_t diameter = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (std::size_t d : bfs(adj, v)) {
      if (d == std::numeric_limits<std::size_t>::max()) {
        throw InvariantViolation("graph_diameter: zonotope graph is disconnected");
      }
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

}  // namespace zonolat
