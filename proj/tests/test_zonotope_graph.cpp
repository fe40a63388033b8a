#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "zonolat/sampling.hpp"
#include "zonolat/zonotope_graph.hpp"

using namespace zonolat;

namespace {

GeneratorSet set_of(int d, std::initializer_list<std::initializer_list<Coord>> vectors) {
  std::vector<LatticeVector> v;
  for (auto list : vectors) v.push_back(make_vector(list));
  return GeneratorSet::from_directions(d, v);
}

std::string signs(std::initializer_list<int> s) {
  std::string out;
  for (int v : s) out.push_back(v > 0 ? '+' : '-');
  return out;
}

// Sign patterns realized by integer directions in [-radius, radius]^d that
// lie on no hyperplane g . c = 0.
std::set<std::string> grid_sign_patterns(const GeneratorSet& z, long long radius) {
  std::set<std::string> out;
  oracle::for_each_box_point(z.dimension(), radius, [&](const oracle::Point& c) {
    std::string pattern;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      long long dot = 0;
      for (int r = 0; r < z.dimension(); ++r) dot += z.generators()(r, i) * c[static_cast<std::size_t>(r)];
      if (dot == 0) return;
      pattern.push_back(dot > 0 ? '+' : '-');
    }
    out.insert(pattern);
  });
  return out;
}

std::set<std::string> feasible_strings(const GeneratorSet& z) {
  std::set<std::string> out;
  for (const auto& s : feasible_sign_vectors(z)) out.insert(s.str());
  return out;
}

}  // namespace

TEST_CASE("strictly_feasible") {
  CHECK(strictly_feasible(PointMatrix{{1, 0}, {0, 1}}));
  CHECK_FALSE(strictly_feasible(PointMatrix{{1, -1}, {0, 0}}));
  CHECK_FALSE(strictly_feasible(PointMatrix{{0}, {0}}));
  // c1 > 0, c2 > 0, -c1 - c2 > 0
  CHECK_FALSE(strictly_feasible(PointMatrix{{1, 0, -1}, {0, 1, -1}}));
  // c1 > 0, c2 > 0, c1 - c2 > 0
  CHECK(strictly_feasible(PointMatrix{{1, 0, 1}, {0, 1, -1}}));
  CHECK(strictly_feasible(PointMatrix(3, 0)));
}

TEST_CASE("feasible_sign_vectors examples") {
  CHECK(feasible_sign_vectors(set_of(2, {{1, 0}, {0, 1}})).size() == 4);
  // Stored order is (0,1), (1,0), (1,1); the two excluded patterns are
  // symmetric in the first two generators.
  const auto hex = feasible_strings(set_of(2, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(hex.size() == 6);
  CHECK(hex.count(signs({1, 1, -1})) == 0);
  CHECK(hex.count(signs({-1, -1, 1})) == 0);
  CHECK_THROWS_AS(set_of(2, {{1, 0}, {2, 0}}), DomainError);
}

TEST_CASE("feasible sign vectors match a grid search of directions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const GeneratorSet z2 = sample_full_dimensional(2, 5, 2 + trial % 6, rng);
    CHECK(feasible_strings(z2) == grid_sign_patterns(z2, 60));
    const GeneratorSet z3 = sample_full_dimensional(3, 2, 3 + trial % 4, rng);
    CHECK(feasible_strings(z3) == grid_sign_patterns(z3, 20));
  }
}

TEST_CASE("build_graph examples") {
  const ZonotopeGraph hexagon = build_graph(set_of(2, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(hexagon.vertices.size() == 6);
  CHECK(hexagon.edges.size() == 6);
  const ZonotopeGraph square = build_graph(set_of(2, {{1, 0}, {0, 1}}));
  CHECK(square.vertices.size() == 4);
  CHECK(square.edges.size() == 4);
  for (const auto& adj : square.adjacency()) CHECK(adj.size() == 2);
  const ZonotopeGraph octagon = build_graph(build_H(2, 2, QNorm::one()));
  CHECK(octagon.vertices.size() == 8);
  CHECK(octagon.edges.size() == 8);
}

TEST_CASE("graph_diameter examples") {
  CHECK(graph_diameter(build_graph(set_of(2, {{1, 0}, {0, 1}}))) == 2);
  CHECK(graph_diameter(build_graph(set_of(2, {{1, 0}, {0, 1}, {1, 1}}))) == 3);
  CHECK(graph_diameter(build_graph(build_H(3, 2, QNorm::one()))) == 9);
}

TEST_CASE("vertices lie in the bounding box and come in antipodal pairs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const GeneratorSet z = sample_full_dimensional(d, 4, d + trial % 6, rng);
    const ZonotopeGraph g = build_graph(z);
    const LatticeVector lo = z.generators().cwiseMin(Coord{0}).rowwise().sum();
    const LatticeVector hi = z.generators().cwiseMax(Coord{0}).rowwise().sum();
    const LatticeVector total = z.generators().rowwise().sum();
    CHECK(g.vertices.size() % 2 == 0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& vertex = g.vertices[v];
      CHECK((vertex.coords.array() >= lo.array()).all());
      CHECK((vertex.coords.array() <= hi.array()).all());
      const auto it = std::find_if(g.vertices.begin(), g.vertices.end(),
                                   [&](const GraphVertex& w) { return w.signs == -vertex.signs; });
      REQUIRE(it != g.vertices.end());
      CHECK(vertex.coords + it->coords == total);
      CHECK(graph_distance(g, v, static_cast<std::size_t>(it - g.vertices.begin())) ==
            static_cast<std::size_t>(z.size()));
    }
    if (d == 2) CHECK(g.vertices.size() == 2 * static_cast<std::size_t>(z.size()));
  }
}

TEST_CASE("graph diameter equals the number of generators") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    std::uniform_int_distribution<Eigen::Index> m(d, std::min(10, 2 * d + 4));
    const GeneratorSet z = sample_full_dimensional(d, 4, m(rng), rng);
    CHECK(graph_diameter(build_graph(z)) == static_cast<std::size_t>(z.size()));
  }
  for (Coord p = 1; p <= 4; ++p) {
    const GeneratorSet h = build_H(2, p, QNorm::one());
    CHECK(graph_diameter(build_graph(h)) == static_cast<std::size_t>(h.size()));
  }
}

TEST_CASE("degenerate zonotopes still have diameter m") {
  // A planar zonotope sitting in R^3.
  const GeneratorSet z = set_of(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(graph_diameter(build_graph(z)) == 3);
  CHECK(build_graph(GeneratorSet(2)).vertices.size() == 1);
}

TEST_CASE("caps and invariants") {
  const GeneratorSet h4 = build_H(2, 4, QNorm::one());
  CHECK(h4.size() == 12);
  CHECK_NOTHROW(build_graph(h4));
  CHECK_THROWS_AS(build_graph(build_H(2, 5, QNorm::one())), ResourceError);
  GraphOptions wide;
  wide.max_generators = 20;
  CHECK(graph_diameter(build_graph(build_H(2, 5, QNorm::one()), wide)) == 20);
  CHECK_THROWS_AS(build_graph(build_H(7, 1, QNorm::one())), ResourceError);

  ZonotopeGraph broken;
  broken.vertices.resize(2);
  CHECK_THROWS_AS(graph_diameter(broken), InvariantViolation);
}
