#include "zonolat/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zonolat {

SpecialDeltaZ special_delta_z(int d, Coord p, const EnumerationOptions& options) {
  if (d < 2) throw DomainError("special_delta_z: d must be at least 2");
  if (p < 1) throw DomainError("special_delta_z: p must be at least 1");
  const ZonotopeMetrics m = metrics_H(d, p, QNorm::one(), options);
  return {m.k, m.diameter};
}

PointMatrix extremal_candidates(int d, Coord k) {
  PointMatrix pool = enumerate_primitive(d, k, QNorm::infinity(), Region::canonical_half);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(pool.cols()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const Eigen::RowVectorX<Coord> norms = pool.cwiseAbs().colwise().sum();
  // The pool is in lexicographic order, so a stable sort keeps that as the tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return norms(a) < norms(b); });
  PointMatrix sorted(pool.rows(), pool.cols());
  for (std::size_t i = 0; i < order.size(); ++i) sorted.col(static_cast<Eigen::Index>(i)) = pool.col(order[i]);
  return sorted;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(int d, Coord k, PointMatrix candidates, std::uint64_t node_cap)
      : d_(d), k_(k), pool_(std::move(candidates)), node_cap_(node_cap),
        widths_(static_cast<std::size_t>(d), 0) {
    prefix_norm_.push_back(0);
    for (Eigen::Index c = 0; c < pool_.cols(); ++c) {
      prefix_norm_.push_back(prefix_norm_.back() + pool_.col(c).cwiseAbs().sum());
    }
  }

  void run() { descend(0); }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::int64_t best() const { return best_; }
  const std::vector<std::vector<Eigen::Index>>& optima() const { return optima_; }

 private:
  // Most candidates from index i on whose total 1-norm fits in `budget`.
  std::int64_t fit_bound(std::size_t i, Coord budget) const {
    auto first = prefix_norm_.begin() + static_cast<std::ptrdiff_t>(i);
    auto it = std::upper_bound(first, prefix_norm_.end(), prefix_norm_[i] + budget);
    return static_cast<std::int64_t>(it - first) - 1;
  }

  bool fits(Eigen::Index c) const {
    for (int j = 0; j < d_; ++j) {
      const Coord a = pool_(j, c) < 0 ? -pool_(j, c) : pool_(j, c);
      if (widths_[static_cast<std::size_t>(j)] + a > k_) return false;
    }
    return true;
  }

  void apply(Eigen::Index c, Coord sign) {
    for (int j = 0; j < d_; ++j) {
      const Coord a = pool_(j, c) < 0 ? -pool_(j, c) : pool_(j, c);
      widths_[static_cast<std::size_t>(j)] += sign * a;
      used_ += sign * a;
    }
  }

  void descend(std::size_t i) {
    if (aborted_) return;
    if (++nodes_ > node_cap_) {
      aborted_ = true;
      return;
    }
    const auto count = static_cast<std::int64_t>(chosen_.size());
    if (count + fit_bound(i, k_ * d_ - used_) < best_) return;
    if (i == static_cast<std::size_t>(pool_.cols())) {
      if (count > best_) {
        best_ = count;
        optima_.clear();
      }
      optima_.push_back(chosen_);
      return;
    }
    const auto c = static_cast<Eigen::Index>(i);
    if (fits(c)) {
      apply(c, 1);
      chosen_.push_back(c);
      descend(i + 1);
      chosen_.pop_back();
      apply(c, -1);
    }
    descend(i + 1);
  }

  int d_;
  Coord k_;
  PointMatrix pool_;
  std::uint64_t node_cap_;
  std::vector<Coord> prefix_norm_;
  std::vector<Coord> widths_;
  Coord used_ = 0;
  std::vector<Eigen::Index> chosen_;
  std::int64_t best_ = -1;
  std::vector<std::vector<Eigen::Index>> optima_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

bool lexicographically_less(const GeneratorSet& a, const GeneratorSet& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < a.dimension(); ++r) {
      const Coord x = a.generators()(r, c);
      const Coord y = b.generators()(r, c);
      if (x != y) return x < y;
    }
  }
  return a.size() < b.size();
}

}  // namespace

ExtremalResult brute_force_delta_z(int d, Coord k, const ExtremalOptions& options) {
  if (d < 1) throw DomainError("brute_force_delta_z: d must be at least 1");
  if (k < 1) throw DomainError("brute_force_delta_z: k must be at least 1");
  if (d > options.max_dimension) {
    throw ResourceError("brute_force_delta_z: d = " + std::to_string(d) +
                        " exceeds the dimension cap of " + std::to_string(options.max_dimension));
  }
  if (k > options.max_k) {
    throw ResourceError("brute_force_delta_z: k = " + std::to_string(k) +
                        " exceeds the k cap of " + std::to_string(options.max_k));
  }
  const PointMatrix pool = extremal_candidates(d, k);
  BranchAndBound search(d, k, pool, options.node_cap);
  search.run();

  ExtremalResult result;
  result.d = d;
  result.k = k;
  result.best_count = std::max<std::int64_t>(search.best(), 0);
  result.search_exhaustive = !search.aborted();
  result.nodes = search.nodes();
  for (const auto& picks : search.optima()) {
    PointMatrix generators(d, static_cast<Eigen::Index>(picks.size()));
    for (std::size_t i = 0; i < picks.size(); ++i) generators.col(static_cast<Eigen::Index>(i)) = pool.col(picks[i]);
    result.optimal_sets.emplace_back(d, std::move(generators));
  }
  std::sort(result.optimal_sets.begin(), result.optimal_sets.end(), lexicographically_less);
  return result;
}

}  // namespace zonolat
