#include "flockgraph/enumerate.hpp"

#include <string>

namespace flock {

int cross_pair_count(std::span<const int> sizes) {
  int total = 0;
  int pairs = 0;
  for (int s : sizes) {
    pairs += total * s;
    total += s;
  }
  return pairs;
}

OrientationRange::OrientationRange(std::vector<int> sizes, int edge_cap)
    : sizes_(std::move(sizes)) {
  // Size validation happens in the graph builder; run it once up front.
  (void)MultiFlockGraph::from_pair_directions(sizes_, [](ChickenId, ChickenId) { return false; });
  edge_count_ = cross_pair_count(sizes_);
  if (edge_count_ > edge_cap) {
    throw TooLargeError("orientation space has " + std::to_string(edge_count_) +
                        " edges, above the cap of " + std::to_string(edge_cap));
  }
  count_ = std::uint64_t{1} << edge_count_;
}

MultiFlockGraph OrientationRange::at(std::uint64_t orientation_index) const {
  if (orientation_index >= count_) {
    throw Error("orientation index " + std::to_string(orientation_index) + " out of range");
  }
  int bit = 0;
  return MultiFlockGraph::from_pair_directions(sizes_, [&](ChickenId, ChickenId) {
    return ((orientation_index >> bit++) & 1) != 0;
  });
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

MultiFlockGraph random_graph(std::span<const int> sizes, std::uint64_t seed) {
  std::uint64_t state = seed;
  return MultiFlockGraph::from_pair_directions(
      std::vector<int>(sizes.begin(), sizes.end()),
      [&state](ChickenId, ChickenId) { return (splitmix64_next(state) & 1) != 0; });
}

MultiFlockGraph fixture(FixtureName name) {
  auto make = [](std::vector<int> sizes, std::vector<Arc> arcs) {
    return MultiFlockGraph::build(std::move(sizes), arcs);
  };
  switch (name) {
    case FixtureName::Fig1:
      // Five singleton flocks; the far-right chicken is a 4-King but not a
      // 3-Duke.
      return make({1, 1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                    {3, 0}, {2, 0}, {4, 1}, {4, 2}, {3, 1}});
    case FixtureName::Fig6:
      // Bi-flock with exactly one 1-Duke and no other dukes.
      return make({1, 3}, {{0, 1}, {0, 2}, {0, 3}});
    case FixtureName::Fig7:
      // Bi-flock with only four 3-Dukes and no 1-Duke.
      return make({2, 4}, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {5, 1}});
    case FixtureName::Fig8:
      // Four flocks, exactly three 2-Dukes, each pecking the bottom chicken.
      return make({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    case FixtureName::Fig13:
      // Five flocks with exactly four 3-Dukes, each pecking the bottom
      // chicken.
      return make({1, 1, 1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                    {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  }
  throw Error("unknown fixture");
}

}  // namespace flock
