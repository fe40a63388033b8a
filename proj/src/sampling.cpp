#include "zonolat/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace zonolat {

PointMatrix primitive_pool(int d, Coord max_norm) {
  return enumerate_primitive(d, max_norm, QNorm::one(), Region::canonical_half);
}

GeneratorSet sample_full_dimensional(int d, Coord max_norm, Eigen::Index m, std::mt19937_64& rng) {
  const PointMatrix pool = primitive_pool(d, max_norm);
  if (m < d || m > pool.cols()) {
    throw DomainError("sample_full_dimensional: need d <= m <= " + std::to_string(pool.cols()));
  }
  std::vector<Eigen::Index> index(static_cast<std::size_t>(pool.cols()));
  std::iota(index.begin(), index.end(), Eigen::Index{0});
  for (;;) {
    std::shuffle(index.begin(), index.end(), rng);
    PointMatrix picked(d, m);
    for (Eigen::Index i = 0; i < m; ++i) picked.col(i) = pool.col(index[static_cast<std::size_t>(i)]);
    GeneratorSet set(d, std::move(picked));
    if (set.is_full_dimensional()) return set;
  }
}

}  // namespace zonolat
