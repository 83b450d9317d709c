#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "flockgraph/graph.hpp"

namespace flock {

// Raw orientation enumeration, a cap keeps the index space at most
// 2^kDefaultEdgeCap (~16.7M) unless callers raise it explicitly.
inline constexpr int kDefaultEdgeCap = 24;

// Number of cross-flock pairs for the given flock sizes.
int cross_pair_count(std::span<const int> sizes);

// All orientations of the given flock sizes, addressable by index: bit b of
// the orientation index picks the direction of the b-th canonical pair
// (ascending (min, max) order), 0 = min pecks max, 1 = max pecks min. The
// stream iterates indices ascending.
class OrientationRange {
 public:
  explicit OrientationRange(std::vector<int> sizes, int edge_cap = kDefaultEdgeCap);

  std::uint64_t size() const { return count_; }
  const std::vector<int>& sizes() const { return sizes_; }
  int edge_count() const { return edge_count_; }

  MultiFlockGraph at(std::uint64_t orientation_index) const;

  class iterator {
   public:
    using value_type = MultiFlockGraph;
    using difference_type = std::int64_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const OrientationRange* range, std::uint64_t index) : range_(range), index_(index) {}

    MultiFlockGraph operator*() const { return range_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const OrientationRange* range_;
    std::uint64_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

 private:
  std::vector<int> sizes_;
  int edge_count_ = 0;
  std::uint64_t count_ = 0;
};

// Deterministic seeded generation: one splitmix64 value per canonical pair in
// (min, max) order, low bit 0 orienting min -> max and 1 orienting
// max -> min. Bit-exact across platforms and runs.
MultiFlockGraph random_graph(std::span<const int> sizes, std::uint64_t seed);

// The next value of the splitmix64 stream; `state` advances in place.
// Exposed so tests can pin generator output independently.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Named instances taken from the figures the duke bounds are illustrated
// with; see fixture() for the exact arc lists.
enum class FixtureName { Fig1, Fig6, Fig7, Fig8, Fig13 };

MultiFlockGraph fixture(FixtureName name);

}  // namespace flock
