#ifndef ZONOLAT_CORE_HPP
#define ZONOLAT_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace zonolat {

using Coord = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Integer point of Z^d.
using LatticeVector = Eigen::Matrix<Coord, Eigen::Dynamic, 1>;

/// A list of lattice points, one per column (d rows).
using PointMatrix = Eigen::Matrix<Coord, Eigen::Dynamic, Eigen::Dynamic>;

/// Bad input: violated precondition or malformed argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The sieve cannot count this region (it is not closed under scaling).
class UnsupportedRegion : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configurable cap (candidates, nodes, generators) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked mathematical identity failed. Should never fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Worker count for internal parallelism: ZONOLAT_THREADS if set, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Lattice vector from an initializer list, mostly for tests and examples.
inline LatticeVector make_vector(std::initializer_list<Coord> coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Coord c : coords) v(i++) = c;
  return v;
}

}  // namespace zonolat

#endif  // ZONOLAT_CORE_HPP
