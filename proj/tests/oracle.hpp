#pragma once

// Test-side oracle, kept independent of the library's BFS path: all-pairs
// distances by Floyd-Warshall relaxation over the raw peck table, and duke /
// king sets read off that matrix. Slow and obviously correct.

#include <cstdint>
#include <vector>

#include "flockgraph/graph.hpp"

namespace oracle {

inline constexpr int kUnreachable = 1 << 20;

inline std::vector<std::vector<int>> all_pairs_distances(const flock::MultiFlockGraph& g) {
  const int n = g.chicken_count();
  std::vector<std::vector<int>> dist(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kUnreachable));
  for (int i = 0; i < n; ++i) {
    dist[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (g.pecks(i, j)) dist[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
      }
    }
  }
  return dist;
}

inline std::vector<flock::ChickenId> dukes(const flock::MultiFlockGraph& g, int m) {
  const auto dist = all_pairs_distances(g);
  std::vector<flock::ChickenId> result;
  for (int c = 0; c < g.chicken_count(); ++c) {
    bool ok = true;
    for (int t = 0; t < g.chicken_count(); ++t) {
      if (g.flock_of(t) != g.flock_of(c) && dist[c][t] > m) ok = false;
    }
    if (ok) result.push_back(c);
  }
  return result;
}

inline std::vector<flock::ChickenId> kings(const flock::MultiFlockGraph& g, int m) {
  const auto dist = all_pairs_distances(g);
  std::vector<flock::ChickenId> result;
  for (int c = 0; c < g.chicken_count(); ++c) {
    bool ok = true;
    for (int t = 0; t < g.chicken_count(); ++t) {
      if (t != c && dist[c][t] > m) ok = false;
    }
    if (ok) result.push_back(c);
  }
  return result;
}

// Reference splitmix64, written out separately from the library.
inline std::uint64_t splitmix64_reference(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace oracle
