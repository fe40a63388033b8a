#ifndef ZONOLAT_SERIALIZE_HPP
#define ZONOLAT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "zonolat/asymptotics.hpp"
#include "zonolat/extremal.hpp"
#include "zonolat/primitive_points.hpp"
#include "zonolat/zonotope.hpp"
#include "zonolat/zonotope_graph.hpp"

namespace zonolat {

using Json = nlohmann::ordered_json;

/// JSON integer when the value fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& value);

/// Value rounded to 12 significant digits.
double round12(double value);

/// [[x1, ..., xd], ...]
Json points_to_json(const PointMatrix& points);
PointMatrix points_from_json(const Json& json, int d);

/// Header x1..xd, one point per line.
std::string points_to_csv(const PointMatrix& points);

/// {d, p, q, region, count, method}
Json to_json(const CountReport& report);

/// {d, generators: [[...]]}
Json to_json(const GeneratorSet& zonotope);
GeneratorSet generator_set_from_json(const Json& json);

/// {diameter, widths, k}
Json to_json(const ZonotopeMetrics& metrics);

/// {vertices: [{signs, coords}], edges: [[i, j]]}
Json to_json(const ZonotopeGraph& graph);

/// {d, k, best_count, optimal_sets, search_exhaustive}
Json to_json(const ExtremalResult& result);

/// [{p, empirical, limit, relative_gap}, ...]
Json to_json(const std::vector<ConvergenceRow>& rows);

/// Header p,empirical,limit,relative_gap; reals with 12 significant digits.
std::string to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace zonolat

#endif  // ZONOLAT_SERIALIZE_HPP
