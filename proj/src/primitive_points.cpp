#include "zonolat/primitive_points.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <type_traits>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "zonolat/number_theory.hpp"

namespace zonolat {

namespace {

using Wide = __int128;

BigInt to_big(Wide value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-value)
                                         : static_cast<unsigned __int128>(value);
  BigInt result = static_cast<std::uint64_t>(magnitude >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-result) : result;
}

void check_shape(int d, Coord p) {
  if (d < 1) throw DomainError("dimension d must be at least 1");
  if (p < 0) throw DomainError("radius p must be non-negative");
}

// Runs task(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any task is rethrown on the calling thread.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

unsigned resolve_threads(const EnumerationOptions& options) {
  return options.threads == 0 ? default_thread_count() : options.threads;
}

// Depth-first walk of the lattice points of a region of B_q(d, p). The
// budget is the remaining p^q - sum |x_i|^q (always zero for the infinity
// norm, where only the coordinate range matters).
template <class Budget>
class BallWalker {
 public:
  // `total` overrides the budget p^q; it must lie in [p^q, (p+1)^q).
  BallWalker(int d, Coord p, const QNorm& q, Region region, const BigInt* total = nullptr)
      : d_(d), region_(region), powers_(static_cast<std::size_t>(p) + 1, Budget(0)) {
    if (!q.is_infinite()) {
      const unsigned e = q.exponent();
      for (Coord x = 0; x <= p; ++x) {
        Budget v(1);
        for (unsigned i = 0; i < e; ++i) v *= Budget(x);
        powers_[static_cast<std::size_t>(x)] = v;
      }
    }
    total_ = powers_.back();
    if (total != nullptr) {
      if constexpr (std::is_same_v<Budget, BigInt>) total_ = *total;
      else total_ = total->convert_to<Budget>();
    }
  }

  std::pair<Coord, Coord> first_range() const { return range(true, total_); }

  template <class Visit>
  void walk_first(Coord x0, Visit& visit) const {
    std::vector<Coord> buf(static_cast<std::size_t>(d_));
    buf[0] = x0;
    const Coord g = x0 < 0 ? -x0 : x0;
    if (d_ == 1) {
      if (g == 1) visit(buf.data());
      return;
    }
    descend(1, total_ - powers_[static_cast<std::size_t>(g)], g, x0 == 0, buf.data(), visit);
  }

  // Lattice points with first coordinate x0; `prefixes` counts inner nodes.
  Wide count_first(Coord x0, std::uint64_t& prefixes, std::uint64_t cap) const {
    if (d_ == 1) return 1;
    const Coord g = x0 < 0 ? -x0 : x0;
    return count_from(1, total_ - powers_[static_cast<std::size_t>(g)], x0 == 0, prefixes, cap);
  }

 private:
  Coord reach(const Budget& rem) const {
    auto it = std::upper_bound(powers_.begin(), powers_.end(), rem);
    return static_cast<Coord>(it - powers_.begin()) - 1;
  }

  std::pair<Coord, Coord> range(bool prefix_zero, const Budget& rem) const {
    const Coord r = reach(rem);
    switch (region_) {
      case Region::full_ball: return {-r, r};
      case Region::canonical_half: return {prefix_zero ? 0 : -r, r};
      case Region::positive_orthant: return {0, r};
      case Region::orthant_interior: return {1, r};
    }
    return {0, -1};
  }

  template <class Visit>
  void descend(int idx, const Budget& rem, Coord g, bool prefix_zero, Coord* buf,
               Visit& visit) const {
    const auto [lo, hi] = range(prefix_zero, rem);
    if (idx == d_ - 1) {
      for (Coord x = lo; x <= hi; ++x) {
        if (std::gcd(g, x) == 1) {
          buf[idx] = x;
          visit(static_cast<const Coord*>(buf));
        }
      }
      return;
    }
    for (Coord x = lo; x <= hi; ++x) {
      buf[idx] = x;
      const Coord ax = x < 0 ? -x : x;
      descend(idx + 1, rem - powers_[static_cast<std::size_t>(ax)], std::gcd(g, ax),
              prefix_zero && x == 0, buf, visit);
    }
  }

  Wide count_from(int idx, const Budget& rem, bool prefix_zero, std::uint64_t& prefixes,
                  std::uint64_t cap) const {
    const auto [lo, hi] = range(prefix_zero, rem);
    if (hi < lo) return 0;
    if (idx == d_ - 1) return static_cast<Wide>(hi - lo + 1);
    if (++prefixes > cap) {
      throw ResourceError("lattice count exceeds the enumeration cap of " + std::to_string(cap) +
                          " candidates");
    }
    Wide total = 0;
    for (Coord x = lo; x <= hi; ++x) {
      const Coord ax = x < 0 ? -x : x;
      total += count_from(idx + 1, rem - powers_[static_cast<std::size_t>(ax)],
                          prefix_zero && x == 0, prefixes, cap);
    }
    return total;
  }

  int d_;
  Region region_;
  std::vector<Budget> powers_;
  Budget total_;
};

// Calls fn(walker) with a walker whose budget type holds p^q exactly.
template <class Fn>
decltype(auto) with_walker(int d, Coord p, const QNorm& q, Region region, Fn&& fn,
                           const BigInt* total = nullptr) {
  bool fits = true;
  if (!q.is_infinite()) {
    const BigInt budget = total ? *total : BigInt(boost::multiprecision::pow(BigInt(p), q.exponent()));
    fits = budget <= BigInt(std::numeric_limits<std::int64_t>::max() / 2);
  }
  if (fits) return fn(BallWalker<std::int64_t>(d, p, q, region, total));
  return fn(BallWalker<BigInt>(d, p, q, region, total));
}

// Largest r with r^q <= budget.
Coord integer_root(const BigInt& budget, unsigned q) {
  Coord r = static_cast<Coord>(std::pow(budget.convert_to<long double>(), 1.0L / q));
  r = std::max<Coord>(r - 1, 0);
  while (boost::multiprecision::pow(BigInt(r + 1), q) <= budget) ++r;
  while (r > 0 && boost::multiprecision::pow(BigInt(r), q) > budget) --r;
  return r;
}

BigInt count_lattice_walk(int d, Coord p, const QNorm& q, Region region,
                          const EnumerationOptions& options, const BigInt* total) {
  return with_walker(d, p, q, region, [&](const auto& walker) {
    const auto [lo, hi] = walker.first_range();
    if (hi < lo) return BigInt(0);
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Wide> counts(n, 0);
    std::atomic<std::uint64_t> prefixes{0};
    parallel_for(n, resolve_threads(options), [&](std::size_t i) {
      std::uint64_t local = 0;
      counts[i] = walker.count_first(lo + static_cast<Coord>(i), local, options.candidate_cap);
      if ((prefixes += local) > options.candidate_cap) {
        throw ResourceError("lattice count exceeds the enumeration cap of " +
                            std::to_string(options.candidate_cap) + " candidates");
      }
    });
    Wide sum = 0;
    for (Wide c : counts) sum += c;
    return to_big(sum);
  }, total);
}

// |{y in Z^d : sum |y_i|^q <= budget}| for a finite exponent q.
BigInt lattice_count_budget(int d, const BigInt& budget, const QNorm& q,
                            const EnumerationOptions& options) {
  const Coord r = integer_root(budget, q.exponent());
  return count_lattice_walk(d, r, q, Region::full_ball, options, &budget);
}

void enforce_cap(int d, Coord p, const QNorm& q, Region region,
                 const EnumerationOptions& options) {
  const BigInt candidates = region_lattice_count(d, p, q, region, options);
  if (candidates > options.candidate_cap) {
    throw ResourceError("enumeration of " + candidates.str() +
                        " candidates exceeds the enumeration cap of " +
                        std::to_string(options.candidate_cap));
  }
}

}  // namespace

QNorm QNorm::finite(unsigned q) {
  if (q == 0) throw DomainError("q-norm exponent must be at least 1");
  return QNorm(q);
}

QNorm QNorm::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  unsigned q = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || ptr != text.data() + text.size() || q == 0) {
    throw DomainError("invalid q-norm '" + std::string(text) + "' (expected a positive integer or inf)");
  }
  return finite(q);
}

unsigned QNorm::exponent() const {
  if (is_infinite()) throw DomainError("the infinity norm has no finite exponent");
  return q_;
}

std::string QNorm::name() const { return is_infinite() ? "inf" : std::to_string(q_); }

bool QNorm::contains(const LatticeVector& v, Coord radius) const {
  if (is_infinite()) return v.size() == 0 || v.cwiseAbs().maxCoeff() <= radius;
  BigInt sum = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    sum += boost::multiprecision::pow(BigInt(v(i) < 0 ? -v(i) : v(i)), q_);
  }
  return sum <= boost::multiprecision::pow(BigInt(radius), q_);
}

std::string to_string(Region region) {
  switch (region) {
    case Region::canonical_half: return "canonical_half";
    case Region::full_ball: return "full_ball";
    case Region::positive_orthant: return "positive_orthant";
    case Region::orthant_interior: return "orthant_interior";
  }
  return "unknown";
}

Region parse_region(std::string_view text) {
  for (Region r : {Region::canonical_half, Region::full_ball, Region::positive_orthant,
                   Region::orthant_interior}) {
    if (text == to_string(r)) return r;
  }
  throw DomainError("unknown region '" + std::string(text) + "'");
}

std::string to_string(CountMethod method) {
  return method == CountMethod::sieve ? "sieve" : "enumeration";
}

bool is_primitive(const LatticeVector& v) {
  Coord g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g == 1;
}

LatticeVector canonical_sign(const LatticeVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) > 0) return v;
    if (v(i) < 0) return -v;
  }
  throw DomainError("canonical_sign: the zero vector has no canonical sign");
}

bool is_canonical(const LatticeVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return v(i) > 0;
  }
  return false;
}

BigInt region_lattice_count(int d, Coord p, QNorm q, Region region,
                            const EnumerationOptions& options) {
  check_shape(d, p);
  return count_lattice_walk(d, p, q, region, options, nullptr);
}

BigInt lattice_count_ball(int d, Coord n, QNorm q, const EnumerationOptions& options) {
  check_shape(d, n);
  if (q.is_infinite()) return boost::multiprecision::pow(BigInt(2 * n + 1), static_cast<unsigned>(d));
  if (q.exponent() == 1) {
    BigInt total = 0;
    const auto top = std::min<std::uint64_t>(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i <= top; ++i) {
      total += (BigInt(1) << i) * binomial(static_cast<std::uint64_t>(d), i) *
               binomial(static_cast<std::uint64_t>(n), i);
    }
    return total;
  }
  return region_lattice_count(d, n, q, Region::full_ball, options);
}

PointMatrix enumerate_primitive(int d, Coord p, QNorm q, Region region,
                                const EnumerationOptions& options) {
  check_shape(d, p);
  enforce_cap(d, p, q, region, options);
  return with_walker(d, p, q, region, [&](const auto& walker) {
    const auto [lo, hi] = walker.first_range();
    if (hi < lo) return PointMatrix(d, 0);
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Coord>> chunks(n);
    parallel_for(n, resolve_threads(options), [&](std::size_t i) {
      auto& out = chunks[i];
      auto visit = [&](const Coord* point) { out.insert(out.end(), point, point + d); };
      walker.walk_first(lo + static_cast<Coord>(i), visit);
    });
    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    PointMatrix points(d, static_cast<Eigen::Index>(total / static_cast<std::size_t>(d)));
    Coord* dst = points.data();
    for (const auto& c : chunks) dst = std::copy(c.begin(), c.end(), dst);
    return points;
  });
}

PrimitiveStats primitive_stats(int d, Coord p, QNorm q, Region region,
                               const EnumerationOptions& options) {
  check_shape(d, p);
  enforce_cap(d, p, q, region, options);
  return with_walker(d, p, q, region, [&](const auto& walker) {
    PrimitiveStats stats{0, std::vector<BigInt>(static_cast<std::size_t>(d), 0)};
    const auto [lo, hi] = walker.first_range();
    if (hi < lo) return stats;
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Wide> counts(n, 0);
    std::vector<std::vector<Wide>> sums(n, std::vector<Wide>(static_cast<std::size_t>(d), 0));
    parallel_for(n, resolve_threads(options), [&](std::size_t i) {
      Wide count = 0;
      auto& sum = sums[i];
      auto visit = [&](const Coord* point) {
        ++count;
        for (int j = 0; j < d; ++j) sum[static_cast<std::size_t>(j)] += point[j] < 0 ? -point[j] : point[j];
      };
      walker.walk_first(lo + static_cast<Coord>(i), visit);
      counts[i] = count;
    });
    Wide count = 0;
    std::vector<Wide> total(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < n; ++i) {
      count += counts[i];
      for (std::size_t j = 0; j < total.size(); ++j) total[j] += sums[i][j];
    }
    stats.count = to_big(count);
    for (std::size_t j = 0; j < total.size(); ++j) stats.abs_sums[j] = to_big(total[j]);
    return stats;
  });
}

CountReport count_primitive_sieve(int d, Coord p, QNorm q, Region region,
                                  const EnumerationOptions& options) {
  if (d < 2) throw DomainError("count_primitive_sieve: d must be at least 2");
  if (p < 1) throw DomainError("count_primitive_sieve: p must be at least 1");
  if (region != Region::full_ball && region != Region::canonical_half) {
    throw UnsupportedRegion("the Möbius sieve supports only full_ball and canonical_half (got " +
                            to_string(region) + "); use enumeration");
  }
  const MobiusTable mu(static_cast<std::uint64_t>(p));
  BigInt full = 0;
  if (q.is_infinite() || q.exponent() == 1) {
    // The norm is integral on Z^d, so ||m y|| <= p iff ||y|| <= floor(p/m).
    // Group the m with equal floor(p/m) and weight them by Mertens differences.
    for (Coord m = 1; m <= p;) {
      const Coord v = p / m;
      const Coord last = p / v;
      const std::int64_t weight = mu.mertens(static_cast<std::uint64_t>(last)) -
                                  mu.mertens(static_cast<std::uint64_t>(m - 1));
      if (weight != 0) full += weight * (lattice_count_ball(d, v, q, options) - 1);
      m = last + 1;
    }
  } else {
    // ||m y||_q <= p iff sum |y_i|^q <= floor(p^q / m^q), which is not the
    // ball of radius floor(p/m).
    const unsigned e = q.exponent();
    const BigInt top = boost::multiprecision::pow(BigInt(p), e);
    for (Coord m = 1; m <= p; ++m) {
      const int weight = mu(static_cast<std::uint64_t>(m));
      if (weight == 0) continue;
      const BigInt budget = top / boost::multiprecision::pow(BigInt(m), e);
      full += weight * (lattice_count_budget(d, budget, q, options) - 1);
    }
  }
  CountReport report{d, p, q, region, full, CountMethod::sieve};
  if (region == Region::canonical_half) report.count = full / 2;
  return report;
}

CountReport count_primitive_enumeration(int d, Coord p, QNorm q, Region region,
                                        const EnumerationOptions& options) {
  return CountReport{d, p, q, region, primitive_stats(d, p, q, region, options).count,
                     CountMethod::enumeration};
}

BigInt a_coeff(int i, Coord p, QNorm q, const EnumerationOptions& options) {
  if (i < 1) throw DomainError("a_coeff: dimension must be at least 1");
  if (p < 1) throw DomainError("a_coeff: p must be at least 1");
  return primitive_stats(i, p, q, Region::orthant_interior, options).count;
}

}  // namespace zonolat
