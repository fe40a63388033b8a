#include "zonolat/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace zonolat {

Json big_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

BigInt big_from_json(const Json& value) {
  if (value.is_string()) return BigInt(value.get<std::string>());
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  throw DomainError("expected an integer or a decimal string");
}

double round12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

Json points_to_json(const PointMatrix& points) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    Json point = Json::array();
    for (Eigen::Index r = 0; r < points.rows(); ++r) point.push_back(points(r, c));
    out.push_back(std::move(point));
  }
  return out;
}

PointMatrix points_from_json(const Json& json, int d) {
  if (!json.is_array()) throw DomainError("expected a JSON array of integer arrays");
  PointMatrix out(d, static_cast<Eigen::Index>(json.size()));
  for (std::size_t c = 0; c < json.size(); ++c) {
    const Json& point = json[c];
    if (!point.is_array() || point.size() != static_cast<std::size_t>(d)) {
      throw DomainError("point " + std::to_string(c) + " does not have " + std::to_string(d) +
                        " coordinates");
    }
    for (int r = 0; r < d; ++r) {
      if (!point[static_cast<std::size_t>(r)].is_number_integer()) {
        throw DomainError("non-integer coordinate in point " + std::to_string(c));
      }
      out(r, static_cast<Eigen::Index>(c)) = point[static_cast<std::size_t>(r)].get<Coord>();
    }
  }
  return out;
}

std::string points_to_csv(const PointMatrix& points) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < points.rows(); ++r) out << (r ? "," : "") << 'x' << r + 1;
  out << '\n';
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    for (Eigen::Index r = 0; r < points.rows(); ++r) out << (r ? "," : "") << points(r, c);
    out << '\n';
  }
  return out.str();
}

Json to_json(const CountReport& report) {
  return Json{{"d", report.d},
              {"p", report.p},
              {"q", report.q.name()},
              {"region", to_string(report.region)},
              {"count", big_to_json(report.count)},
              {"method", to_string(report.method)}};
}

Json to_json(const GeneratorSet& zonotope) {
  return Json{{"d", zonotope.dimension()}, {"generators", points_to_json(zonotope.generators())}};
}

GeneratorSet generator_set_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("d") || !json.contains("generators")) {
    throw DomainError("generator set JSON needs fields d and generators");
  }
  const int d = json.at("d").get<int>();
  return GeneratorSet(d, points_from_json(json.at("generators"), d));
}

Json to_json(const ZonotopeMetrics& metrics) {
  Json widths = Json::array();
  for (const auto& w : metrics.widths) widths.push_back(big_to_json(w));
  return Json{{"diameter", big_to_json(metrics.diameter)},
              {"widths", std::move(widths)},
              {"k", big_to_json(metrics.k)}};
}

Json to_json(const ZonotopeGraph& graph) {
  Json vertices = Json::array();
  for (const auto& v : graph.vertices) {
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < v.coords.size(); ++i) coords.push_back(v.coords(i));
    vertices.push_back(Json{{"signs", v.signs.str()}, {"coords", std::move(coords)}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const ExtremalResult& result) {
  Json sets = Json::array();
  for (const auto& s : result.optimal_sets) sets.push_back(points_to_json(s.generators()));
  return Json{{"d", result.d},
              {"k", result.k},
              {"best_count", result.best_count},
              {"optimal_sets", std::move(sets)},
              {"search_exhaustive", result.search_exhaustive}};
}

Json to_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"p", r.p},
                       {"empirical", round12(r.empirical)},
                       {"limit", round12(r.limit)},
                       {"relative_gap", round12(r.relative_gap)}});
  }
  return out;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "p,empirical,limit,relative_gap\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%.12g,%.12g,%.12g\n", static_cast<long long>(r.p),
                  r.empirical, r.limit, r.relative_gap);
    out += buf;
  }
  return out;
}

}  // namespace zonolat
