// Independent brute-force oracles shared by the unit tests. Nothing here
// calls into the library's enumeration, sieve or graph code.
#ifndef ZONOLAT_TESTS_ORACLES_HPP
#define ZONOLAT_TESTS_ORACLES_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Point = std::vector<long long>;

inline long long ipow(long long base, unsigned e) {
  long long r = 1;
  while (e--) r *= base;
  return r;
}

// q = 0 means the infinity norm.
inline bool in_ball(const Point& x, long long p, unsigned q) {
  if (q == 0) {
    for (long long v : x)
      if (std::llabs(v) > p) return false;
    return true;
  }
  long long s = 0;
  for (long long v : x) s += ipow(std::llabs(v), q);
  return s <= ipow(p, q);
}

inline long long gcd_of(const Point& x) {
  long long g = 0;
  for (long long v : x) g = std::gcd(g, v);
  return g;
}

// Every point of the box [-p, p]^d in lexicographic order.
inline void for_each_box_point(int d, long long p, const std::function<void(const Point&)>& f) {
  Point x(static_cast<std::size_t>(d), -p);
  for (;;) {
    f(x);
    int i = d - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == p) x[static_cast<std::size_t>(i--)] = -p;
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

enum class Region { canonical_half, full_ball, positive_orthant, orthant_interior };

inline bool in_region(const Point& x, Region r) {
  switch (r) {
    case Region::full_ball: return true;
    case Region::canonical_half:
      for (long long v : x)
        if (v != 0) return v > 0;
      return false;
    case Region::positive_orthant:
      for (long long v : x)
        if (v < 0) return false;
      return true;
    case Region::orthant_interior:
      for (long long v : x)
        if (v < 1) return false;
      return true;
  }
  return false;
}

inline std::vector<Point> primitive_points(int d, long long p, unsigned q, Region r) {
  std::vector<Point> out;
  for_each_box_point(d, p, [&](const Point& x) {
    if (in_ball(x, p, q) && in_region(x, r) && gcd_of(x) == 1) out.push_back(x);
  });
  return out;
}

inline long long lattice_points(int d, long long p, unsigned q) {
  long long n = 0;
  for_each_box_point(d, p, [&](const Point& x) { n += in_ball(x, p, q); });
  return n;
}

inline long long totient(long long n) {
  long long count = 0;
  for (long long i = 1; i <= n; ++i) count += std::gcd(i, n) == 1;
  return count;
}

}  // namespace oracle

#endif  // ZONOLAT_TESTS_ORACLES_HPP
