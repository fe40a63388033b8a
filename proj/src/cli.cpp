#include "zonolat/cli.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zonolat/asymptotics.hpp"
#include "zonolat/extremal.hpp"
#include "zonolat/number_theory.hpp"
#include "zonolat/sampling.hpp"
#include "zonolat/serialize.hpp"
#include "zonolat/zonotope.hpp"
#include "zonolat/zonotope_graph.hpp"

namespace zonolat {

namespace {

struct SuiteResult {
  std::size_t passed = 0;
  std::size_t total = 0;
};

void tally(SuiteResult& r, bool ok) {
  ++r.total;
  if (ok) ++r.passed;
}

SuiteResult verify_lemma41(int d, Coord p_max, const EnumerationOptions& options) {
  SuiteResult r;
  for (Coord p = 1; p <= p_max; ++p) tally(r, lemma41_check(d, p, options).equal);
  return r;
}

BigInt full_ball_count(int d, Coord p, QNorm q, const EnumerationOptions& options) {
  if (d >= 2) return count_primitive_sieve(d, p, q, Region::full_ball, options).count;
  return count_primitive_enumeration(d, p, q, Region::full_ball, options).count;
}

SuiteResult verify_eq23(int d, Coord p_max, QNorm q, const EnumerationOptions& options) {
  SuiteResult r;
  for (Coord p = 1; p <= p_max; ++p) {
    BigInt sum = 0;
    for (int i = 1; i <= d; ++i) sum += binomial(d, i) * a_coeff(i, p, q, options);
    tally(r, sum == metrics_Hplus(d, p, q, options).diameter);
  }
  return r;
}

SuiteResult verify_eq24(int d, Coord p_max, QNorm q, const EnumerationOptions& options) {
  SuiteResult r;
  for (Coord p = 1; p <= p_max; ++p) {
    BigInt sum = 0;
    for (int i = 1; i <= d; ++i) sum += (BigInt(1) << i) * binomial(d, i) * a_coeff(i, p, q, options);
    tally(r, sum == full_ball_count(d, p, q, options));
  }
  return r;
}

SuiteResult verify_base_case(Coord p_max, QNorm q, const EnumerationOptions& options) {
  SuiteResult r;
  for (Coord p = 1; p <= p_max; ++p) {
    const BigInt plus = metrics_Hplus(2, p, q, options).diameter;
    tally(r, 4 * plus - 4 == full_ball_count(2, p, q, options));
  }
  return r;
}

SuiteResult verify_dominance(int d, Coord p_max, std::size_t samples, std::uint64_t seed,
                             const EnumerationOptions& options) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  const auto pool_size = primitive_pool(d, 5).cols();
  std::uniform_int_distribution<Eigen::Index> size_dist(d, std::min<Eigen::Index>(pool_size, 4 * d + 4));
  for (std::size_t s = 0; s < samples; ++s) {
    const GeneratorSet z = sample_full_dimensional(d, 5, size_dist(rng), rng);
    for (Coord p = 1; p <= p_max; ++p) {
      bool ok = true;
      try {
        dominance_check(z, p, options);
      } catch (const InvariantViolation&) {
        ok = false;
      }
      tally(r, ok);
    }
  }
  return r;
}

std::vector<Coord> radius_range(Coord first, Coord last) {
  std::vector<Coord> out;
  for (Coord p = first; p <= last; ++p) out.push_back(p);
  return out;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw DomainError("unknown format '" + format + "' (expected json or csv)");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zonolat: primitive zonotopes, primitive lattice point counts and their asymptotics",
               "zonolat"};
  app.require_subcommand(1);

  std::function<int()> action;
  EnumerationOptions enumeration;

  int d = 2;
  Coord p = 1;
  std::string q_text = "1";
  std::string region_text;
  std::string format = "json";

  auto add_enumeration_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", enumeration.candidate_cap, "Enumeration cap in candidate points")
        ->capture_default_str();
  };

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List primitive points of a region of B_q(d,p)");
  enumerate->add_option("-d", d, "Dimension")->required();
  enumerate->add_option("-p", p, "Radius")->required();
  enumerate->add_option("-q", q_text, "Norm: positive integer or inf")->capture_default_str();
  enumerate->add_option("--region", region_text,
                        "canonical_half, full_ball, positive_orthant or orthant_interior")
      ->default_str("canonical_half");
  enumerate->add_option("--format", format, "json or csv")->capture_default_str();
  add_enumeration_cap(enumerate);
  enumerate->callback([&] {
    action = [&] {
      check_format(format);
      const Region region = region_text.empty() ? Region::canonical_half : parse_region(region_text);
      const PointMatrix points = enumerate_primitive(d, p, QNorm::parse(q_text), region, enumeration);
      if (format == "csv") out << points_to_csv(points);
      else out << points_to_json(points).dump() << '\n';
      return int{exit_ok};
    };
  });

  // count
  std::string method = "auto";
  auto* count = app.add_subcommand("count", "Count primitive points of a region of B_q(d,p)");
  count->add_option("-d", d, "Dimension")->required();
  count->add_option("-p", p, "Radius")->required();
  count->add_option("-q", q_text, "Norm: positive integer or inf")->capture_default_str();
  count->add_option("--region", region_text, "Region kind")->default_str("full_ball");
  count->add_option("--method", method, "auto, sieve, enumeration or both")->capture_default_str();
  add_enumeration_cap(count);
  count->callback([&] {
    action = [&] {
      const Region region = region_text.empty() ? Region::full_ball : parse_region(region_text);
      const QNorm q = QNorm::parse(q_text);
      const bool sieve_ok = d >= 2 && (region == Region::full_ball || region == Region::canonical_half);
      if (method == "auto") method = sieve_ok ? "sieve" : "enumeration";
      if (method == "sieve") {
        out << to_json(count_primitive_sieve(d, p, q, region, enumeration)).dump() << '\n';
      } else if (method == "enumeration") {
        out << to_json(count_primitive_enumeration(d, p, q, region, enumeration)).dump() << '\n';
      } else if (method == "both") {
        const CountReport sieve = count_primitive_sieve(d, p, q, region, enumeration);
        const CountReport direct = count_primitive_enumeration(d, p, q, region, enumeration);
        out << Json::array({to_json(sieve), to_json(direct)}).dump() << '\n';
        if (sieve.count != direct.count) {
          throw InvariantViolation("sieve and enumeration counts disagree");
        }
      } else {
        throw DomainError("unknown method '" + method + "'");
      }
      return int{exit_ok};
    };
  });

  // zonotope
  bool plus = false;
  bool show_generators = false;
  auto* zonotope = app.add_subcommand("zonotope", "Metrics of H_q(d,p) or H_q^+(d,p)");
  zonotope->add_option("-d", d, "Dimension")->required();
  zonotope->add_option("-p", p, "Radius")->required();
  zonotope->add_option("-q", q_text, "Norm: positive integer or inf")->capture_default_str();
  zonotope->add_flag("--plus", plus, "Use H_q^+ (non-negative orthant generators)");
  zonotope->add_flag("--show-generators", show_generators, "Include the generator list");
  add_enumeration_cap(zonotope);
  zonotope->callback([&] {
    action = [&] {
      const QNorm q = QNorm::parse(q_text);
      if (show_generators) {
        const GeneratorSet z = plus ? build_Hplus(d, p, q, enumeration) : build_H(d, p, q, enumeration);
        Json j = to_json(z);
        const Json m = to_json(metrics(z));
        for (const auto& [key, value] : m.items()) j[key] = value;
        out << j.dump() << '\n';
      } else {
        const ZonotopeMetrics m = plus ? metrics_Hplus(d, p, q, enumeration) : metrics_H(d, p, q, enumeration);
        out << to_json(m).dump() << '\n';
      }
      return int{exit_ok};
    };
  });

  // graph-check
  std::string generators_json;
  bool show_graph = false;
  GraphOptions graph_options;
  auto* graph = app.add_subcommand("graph-check",
                                   "Build the vertex-edge graph and check diameter = generator count");
  graph->add_option("-d", d, "Dimension");
  graph->add_option("-p", p, "Radius of H_q(d,p)");
  graph->add_option("-q", q_text, "Norm: positive integer or inf")->capture_default_str();
  graph->add_flag("--plus", plus, "Use H_q^+");
  graph->add_option("--generators", generators_json, "Explicit generators as JSON [[...], ...]");
  graph->add_option("--max-generators", graph_options.max_generators, "Generator cap")
      ->capture_default_str();
  graph->add_flag("--show-graph", show_graph, "Include vertices and edges");
  graph->callback([&] {
    action = [&] {
      GeneratorSet z(d);
      if (!generators_json.empty()) {
        const Json parsed = Json::parse(generators_json, nullptr, false);
        if (parsed.is_discarded() || !parsed.is_array() || parsed.empty() || !parsed[0].is_array()) {
          throw DomainError("--generators must be a non-empty JSON array of integer arrays");
        }
        const int dim = static_cast<int>(parsed[0].size());
        std::vector<LatticeVector> vectors;
        const PointMatrix pts = points_from_json(parsed, dim);
        for (Eigen::Index c = 0; c < pts.cols(); ++c) vectors.push_back(pts.col(c));
        z = GeneratorSet::from_directions(dim, vectors);
      } else {
        const QNorm q = QNorm::parse(q_text);
        z = plus ? build_Hplus(d, p, q) : build_H(d, p, q);
      }
      const ZonotopeGraph g = build_graph(z, graph_options);
      const std::size_t diameter = graph_diameter(g);
      const bool holds = diameter == static_cast<std::size_t>(z.size());
      Json j{{"generators", z.size()},
             {"vertices", g.vertices.size()},
             {"edges", g.edges.size()},
             {"diameter", diameter},
             {"holds", holds}};
      if (show_graph) j["graph"] = to_json(g);
      out << j.dump() << '\n';
      if (!holds) throw InvariantViolation("graph diameter differs from the generator count");
      return int{exit_ok};
    };
  });

  // verify
  std::string suite;
  Coord p_max = 10;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run an exact identity suite");
  verify->add_option("suite", suite, "lemma41, eq23, eq24, base-case, dominance or all")->required();
  verify->add_option("-d", d, "Dimension (base-case always uses d = 2)")->capture_default_str();
  verify->add_option("--p-max", p_max, "Check every p from 1 to this radius")->capture_default_str();
  verify->add_option("-q", q_text, "Norm for eq23, eq24 and base-case")->capture_default_str();
  verify->add_option("--samples", samples, "Random zonotopes for the dominance suite")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for the dominance suite")->capture_default_str();
  add_enumeration_cap(verify);
  verify->callback([&] {
    action = [&] {
      const QNorm q = QNorm::parse(q_text);
      std::vector<std::string> suites{suite};
      if (suite == "all") suites = {"lemma41", "eq23", "eq24", "base-case", "dominance"};
      bool all_hold = true;
      for (const auto& name : suites) {
        SuiteResult r;
        std::string noun = "identities";
        if (name == "lemma41") r = verify_lemma41(d, p_max, enumeration);
        else if (name == "eq23") r = verify_eq23(d, p_max, q, enumeration);
        else if (name == "eq24") r = verify_eq24(d, p_max, q, enumeration);
        else if (name == "base-case") r = verify_base_case(p_max, q, enumeration);
        else if (name == "dominance") {
          r = verify_dominance(d, p_max, samples, seed, enumeration);
          noun = "checks";
        } else {
          throw DomainError("unknown suite '" + name + "'");
        }
        const std::string prefix = suites.size() > 1 ? name + ": " : "";
        out << prefix << r.passed << '/' << r.total << ' ' << noun << " hold\n";
        all_hold = all_hold && r.passed == r.total;
      }
      return int{all_hold ? exit_ok : exit_invariant_violation};
    };
  });

  // converge
  std::vector<Coord> radii;
  std::string which_text = "thm21";
  auto* converge = app.add_subcommand("converge", "Empirical ratios against their limit constants");
  converge->add_option("-d", d, "Dimension")->required();
  converge->add_option("-q", q_text, "Norm")->capture_default_str();
  converge->add_option("--p-list", radii, "Radii, comma separated")->required()->delimiter(',');
  converge->add_option("--which", which_text, "thm21, thm22, thm42, cor44 or thm11")
      ->capture_default_str();
  converge->add_option("--format", format, "json or csv")->capture_default_str();
  add_enumeration_cap(converge);
  converge->callback([&] {
    action = [&] {
      check_format(format);
      const auto rows = convergence_table(d, QNorm::parse(q_text), radii, parse_asymptotic(which_text),
                                          enumeration);
      if (format == "csv") out << to_csv(rows);
      else out << to_json(rows).dump() << '\n';
      return int{exit_ok};
    };
  });

  // extremal
  Coord k = 0;
  bool brute_force = false;
  ExtremalOptions extremal_options;
  auto* extremal = app.add_subcommand("extremal", "Largest diameter of a lattice zonotope in [0,k]^d");
  extremal->add_option("-d", d, "Dimension")->required();
  extremal->add_option("-k", k, "Hypercube side (brute force)");
  extremal->add_option("-p", p, "Radius of H_1(d,p) (exact special value)");
  extremal->add_flag("--brute-force", brute_force, "Exhaustive branch-and-bound search");
  extremal->add_option("--node-cap", extremal_options.node_cap, "Branch-and-bound node cap")
      ->capture_default_str();
  extremal->add_option("--max-k", extremal_options.max_k, "Largest k accepted by the search")
      ->capture_default_str();
  extremal->add_option("--max-d", extremal_options.max_dimension, "Largest d accepted by the search")
      ->capture_default_str();
  add_enumeration_cap(extremal);
  extremal->callback([&] {
    action = [&] {
      if (brute_force) {
        if (k < 1) throw DomainError("--brute-force needs -k");
        const ExtremalResult r = brute_force_delta_z(d, k, extremal_options);
        Json j = to_json(r);
        j["unique"] = r.optimal_sets.size() == 1;
        out << j.dump() << '\n';
        return int{r.search_exhaustive ? exit_ok : exit_resource_error};
      }
      const SpecialDeltaZ s = special_delta_z(d, p, enumeration);
      out << Json{{"d", d}, {"p", p}, {"k", big_to_json(s.k)}, {"delta_z", big_to_json(s.delta_z)}}.dump()
          << '\n';
      return int{exit_ok};
    };
  });

  // table
  auto* table = app.add_subcommand("table", "Rows (p, k, delta) for H_1(d,p), p = 1..p-max");
  table->add_option("-d", d, "Dimension")->required();
  table->add_option("--p-max", p_max, "Largest radius")->capture_default_str();
  table->add_option("--format", format, "json or csv")->capture_default_str();
  add_enumeration_cap(table);
  table->callback([&] {
    action = [&] {
      check_format(format);
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "p,k,delta\n";
      for (Coord r : radius_range(1, p_max)) {
        const ZonotopeMetrics m = metrics_H(d, r, QNorm::one(), enumeration);
        rows.push_back(Json{{"p", r}, {"k", big_to_json(m.k)}, {"delta", big_to_json(m.diameter)}});
        csv << r << ',' << m.k << ',' << m.diameter << '\n';
      }
      if (format == "csv") out << csv.str();
      else out << rows.dump() << '\n';
      return int{exit_ok};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_domain_error;
  }

  try {
    return action ? action() : int{exit_domain_error};
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return exit_resource_error;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace zonolat
