/// Internal: indexable sets of position pairs ("slots") and exactly-uniform
/// sampling of slot subsets / multisets.  Positions are identified with
/// vertex ids (0-based) — samplers plant the identity sequence.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "seqloc/graph.hpp"

namespace seqloc::detail {

/// A region of the C(n,2) position pairs, either "all pairs at sequential
/// distance x in [x_lo, x_hi]" (decoded arithmetically) or an explicit list.
class SlotRegion {
 public:
  static SlotRegion distance_range(int n, int x_lo, int x_hi) {
    SlotRegion r;
    r.n_ = n;
    r.x_lo_ = std::max(1, x_lo);
    r.x_hi_ = std::min(n - 1, x_hi);
    std::int64_t total = 0;
    for (int x = r.x_lo_; x <= r.x_hi_; ++x) {
      r.cum_.push_back(total);
      total += n - x;  // slots (i, i + x), i = 0..n-x-1
    }
    r.size_ = total;
    return r;
  }

  static SlotRegion explicit_slots(std::vector<std::pair<int, int>> slots) {
    SlotRegion r;
    r.slots_ = std::move(slots);
    r.size_ = static_cast<std::int64_t>(r.slots_.size());
    return r;
  }

  std::int64_t size() const { return size_; }

  std::pair<int, int> slot(std::int64_t k) const {
    if (!slots_.empty()) return slots_[static_cast<std::size_t>(k)];
    // Find the distance layer containing index k.
    auto it = std::upper_bound(cum_.begin(), cum_.end(), k);
    const int layer = static_cast<int>(it - cum_.begin()) - 1;
    const int x = x_lo_ + layer;
    const int i = static_cast<int>(k - cum_[static_cast<std::size_t>(layer)]);
    return {i, i + x};
  }

 private:
  int n_ = 0;
  int x_lo_ = 1;
  int x_hi_ = 0;
  std::int64_t size_ = 0;
  std::vector<std::int64_t> cum_;
  std::vector<std::pair<int, int>> slots_;
};

/// m distinct indices from [0, k_total), uniform over all m-subsets
/// (partial Fisher-Yates).  Unsorted.
inline std::vector<std::int64_t> sample_distinct(std::int64_t k_total,
                                                 std::int64_t m,
                                                 std::mt19937_64& rng) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(k_total));
  for (std::int64_t i = 0; i < k_total; ++i)
    pool[static_cast<std::size_t>(i)] = i;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::int64_t> pick(i, k_total - 1);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(pick(rng))]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return out;
}

/// m indices from [0, k_total) with repetition, uniform over all multisets
/// of size m (not iid draws): a sorted m-subset of [0, k_total + m - 1)
/// mapped through the stars-and-bars bijection a_i -> a_i - i.
inline std::vector<std::int64_t> sample_multiset(std::int64_t k_total,
                                                 std::int64_t m,
                                                 std::mt19937_64& rng) {
  std::vector<std::int64_t> a = sample_distinct(k_total + m - 1, m, rng);
  std::sort(a.begin(), a.end());
  for (std::int64_t i = 0; i < m; ++i)
    a[static_cast<std::size_t>(i)] -= i;
  return a;
}

/// Uniformly samples m slots from the region (distinct when simple) and
/// assembles the edges; vertex ids equal position - 1.
inline void sample_region_edges(const SlotRegion& region, std::int64_t m,
                                bool simple, std::mt19937_64& rng,
                                std::vector<Edge>& out) {
  if (m == 0) return;
  if (region.size() == 0)
    throw ValidationError("cannot place edges into an empty region");
  if (simple && m > region.size())
    throw ValidationError("cannot place " + std::to_string(m) +
                          " distinct edges into " +
                          std::to_string(region.size()) + " slots");
  std::vector<std::int64_t> picks =
      simple ? sample_distinct(region.size(), m, rng)
             : sample_multiset(region.size(), m, rng);
  for (std::int64_t k : picks) {
    auto [u, v] = region.slot(k);
    out.push_back({u, v, 1});
  }
}

}  // namespace seqloc::detail
