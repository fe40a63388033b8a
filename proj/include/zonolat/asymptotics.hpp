#ifndef ZONOLAT_ASYMPTOTICS_HPP
#define ZONOLAT_ASYMPTOTICS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zonolat/core.hpp"
#include "zonolat/primitive_points.hpp"

namespace zonolat {

/// Volume of B_q(d, p). For the infinity norm this is (2p)^d.
double ball_volume(int d, double p, QNorm q);

/// Limit of delta(H_q(d,p)) / p^d.
double limit_thm21(int d, QNorm q);

/// Limit of delta(H_q^+(d,p)) / p^d.
double limit_thm22(int d, QNorm q);

/// Limit of k(H_1(d,p)) / p^(d+1): 2^(d-1) / ((d+1)! zeta(d)).
double limit_thm42(int d);

/// Limit of delta^(d+1) / k^d for H_1(d,p): 2^d (d+1)^d / (2 d! zeta(d)).
double limit_cor44(int d);

/// c(d) = limit_cor44(d)^(1/(d+1)), the constant in delta_z(d,k) ~ c(d) k^(d/(d+1)).
double c_of_d(int d);

/// Known values and bounds on the largest diameter delta(d, k) of a lattice
/// polytope in [0, k]^d.
struct KnownBounds {
  std::optional<long long> lower;  // floor((k+1)d/2) when k < 2d
  std::optional<long long> upper;  // kd - ceil(2d/3) - (k-3) when k >= 3
  std::optional<long long> exact;  // d for k = 1, floor(3d/2) for k = 2
};

KnownBounds known_bounds(int d, long long k);

enum class Asymptotic { thm21, thm22, thm42, cor44, thm11 };

std::string to_string(Asymptotic which);
Asymptotic parse_asymptotic(std::string_view text);

struct ConvergenceRow {
  Coord p = 0;
  double empirical = 0.0;
  double limit = 0.0;
  double relative_gap = 0.0;  // |empirical - limit| / limit
};

/// Empirical ratio at each radius next to its limit constant. Rows are in
/// the order of `radii`. thm42, cor44 and thm11 are defined for q = 1 only.
std::vector<ConvergenceRow> convergence_table(int d, QNorm q, const std::vector<Coord>& radii,
                                              Asymptotic which,
                                              const EnumerationOptions& options = {});

/// One row, same conventions as convergence_table.
ConvergenceRow convergence_row(int d, QNorm q, Coord p, Asymptotic which,
                               const EnumerationOptions& options = {});

}  // namespace zonolat

#endif  // ZONOLAT_ASYMPTOTICS_HPP
