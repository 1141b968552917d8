#ifndef HAMPLANE_SRC_SUBSET_SPACE_HPP
#define HAMPLANE_SRC_SUBSET_SPACE_HPP

// Ranked enumerations of basis subsets. Each space has a fixed sequential
// order; any index can be unranked, so a prefix of the order can be split into
// contiguous ranges and handed to workers without changing what is examined.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "hamplane/cycle_space.hpp"
#include "hamplane/grinberg.hpp"

namespace hamplane::detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(std::max(0.0, seconds)))) {}
  bool expired() const { return std::chrono::steady_clock::now() >= end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

// Subsets whose size profile matches one of the given size solutions: for
// each solution, the product over sizes of "choose x_i of the basis cycles of
// size i". Solutions in order; within one, the last size varies fastest and
// each choice runs through combinations lexicographically.
class FilteredSpace {
 public:
  FilteredSpace(const CycleBasis& basis, const std::vector<SizeSolution>& solutions) {
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      pools_[static_cast<std::int64_t>(basis.cycles[i].size())].push_back(i);
    }
    for (const SizeSolution& s : solutions) {
      Entry e;
      e.count = 1;
      for (auto [size, x] : s.counts) {
        const auto& pool = pools_.at(size);
        const auto k = static_cast<std::size_t>(x);
        e.blocks.push_back({&pool, k, binomial(pool.size(), k)});
        e.count = saturating_mul(e.count, e.blocks.back().count);
      }
      offsets_.push_back(total_);
      total_ = saturating_add(total_, e.count);
      entries_.push_back(std::move(e));
    }
  }

  FilteredSpace(const FilteredSpace&) = delete;
  FilteredSpace& operator=(const FilteredSpace&) = delete;

  std::uint64_t size() const { return total_; }

  class Cursor {
   public:
    Cursor(const FilteredSpace& space, std::uint64_t index) : space_(&space) {
      auto it = std::upper_bound(space.offsets_.begin(), space.offsets_.end(), index);
      solution_ = static_cast<std::size_t>(it - space.offsets_.begin()) - 1;
      std::uint64_t local = index - space.offsets_[solution_];
      const Entry& e = space.entries_[solution_];
      combos_.assign(e.blocks.size(), {});
      for (std::size_t b = e.blocks.size(); b-- > 0;) {
        const Block& blk = e.blocks[b];
        combos_[b] = unrank(blk.pool->size(), blk.k, local % blk.count);
        local /= blk.count;
      }
    }

    std::size_t solution() const { return solution_; }

    void members(std::vector<std::size_t>& out) const {
      out.clear();
      const Entry& e = space_->entries_[solution_];
      for (std::size_t b = 0; b < combos_.size(); ++b) {
        for (std::size_t p : combos_[b]) out.push_back((*e.blocks[b].pool)[p]);
      }
      std::sort(out.begin(), out.end());
    }

    void advance() {
      const Entry& e = space_->entries_[solution_];
      for (std::size_t b = combos_.size(); b-- > 0;) {
        if (next_combination(combos_[b], e.blocks[b].pool->size())) return;
        first_combination(combos_[b], e.blocks[b].k);
      }
      ++solution_;
      if (solution_ < space_->entries_.size()) {
        const Entry& next = space_->entries_[solution_];
        combos_.assign(next.blocks.size(), {});
        for (std::size_t b = 0; b < next.blocks.size(); ++b) first_combination(combos_[b], next.blocks[b].k);
      }
    }

   private:
    static void first_combination(std::vector<std::size_t>& c, std::size_t k) {
      c.resize(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = i;
    }
    static bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
      const std::size_t k = c.size();
      for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
          ++c[i];
          for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
          return true;
        }
      }
      return false;
    }
    static std::vector<std::size_t> unrank(std::size_t n, std::size_t k, std::uint64_t r) {
      std::vector<std::size_t> c;
      c.reserve(k);
      std::size_t x = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (;;) {
          const std::uint64_t skip = binomial(n - x - 1, k - i - 1);
          if (skip > r) break;
          r -= skip;
          ++x;
        }
        c.push_back(x++);
      }
      return c;
    }

    const FilteredSpace* space_;
    std::size_t solution_ = 0;
    std::vector<std::vector<std::size_t>> combos_;
  };

 private:
  struct Block {
    const std::vector<std::size_t>* pool;
    std::size_t k;
    std::uint64_t count;
  };
  struct Entry {
    std::vector<Block> blocks;
    std::uint64_t count = 0;
  };

  std::map<std::int64_t, std::vector<std::size_t>> pools_;
  std::vector<Entry> entries_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
};

// All nonzero subsets of a basis of dimension d < 64 in binary-reflected Gray
// code order: index t is mask gray(t + 1), so consecutive subsets differ in
// one member and the running sum needs one XOR per step.
class GraySpace {
 public:
  explicit GraySpace(std::size_t dim) : dim_(dim) {}
  std::uint64_t size() const { return dim_ == 0 ? 0 : (std::uint64_t{1} << dim_) - 1; }

  static std::uint64_t gray(std::uint64_t x) { return x ^ (x >> 1); }

 private:
  std::size_t dim_;
};

struct RangeOutcome {
  std::uint64_t examined = 0;
  bool stopped = false;  // hit the deadline before finishing its range
};

// Splits [0, count) into `workers` contiguous ranges and runs
// body(worker, lo, hi, stop_flag) -> RangeOutcome for each. Returns the combined
// outcome; worker outputs are owned by the caller via the body's captures.
template <typename Body>
RangeOutcome run_ranges(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (count < 4096) workers = 1;
  std::atomic<bool> stop{false};
  std::vector<RangeOutcome> outcomes(workers);
  auto range = [&](unsigned w) {
    const std::uint64_t lo = count / workers * w + std::min<std::uint64_t>(w, count % workers);
    const std::uint64_t hi = lo + count / workers + (w < count % workers ? 1 : 0);
    outcomes[w] = body(w, lo, hi, stop);
  };
  if (workers == 1) {
    range(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(range, w);
    for (auto& t : pool) t.join();
  }
  RangeOutcome total;
  for (const auto& o : outcomes) {
    total.examined += o.examined;
    total.stopped = total.stopped || o.stopped;
  }
  return total;
}

}  // namespace hamplane::detail

#endif  // HAMPLANE_SRC_SUBSET_SPACE_HPP
