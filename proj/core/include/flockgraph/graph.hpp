#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flockgraph/errors.hpp"

namespace flock {

// Chickens and flocks are addressed by dense 0-based indices. Chickens are
// numbered flock by flock in declared order, so flock f owns the contiguous
// index range [flock_begin(f), flock_end(f)).
using ChickenId = int;
using FlockId = int;

struct Arc {
  ChickenId from = 0;
  ChickenId to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A multi-flock chicken graph: partite sets ("flocks") of chickens plus a
// complete antisymmetric orientation of every cross-flock pair ("u pecks v").
// Instances are immutable after construction; every query is const and safe
// for concurrent use.
class MultiFlockGraph {
 public:
  // Validates sizes and the arc list. The arcs must cover every cross-flock
  // pair exactly once; anything else raises the matching error type
  // (EmptyFlock, UnknownChicken, IntraFlockArc, DuplicatePair, MissingPair).
  static MultiFlockGraph build(std::vector<int> sizes, std::span<const Arc> arcs);

  // Builds a graph whose orientation is chosen pair by pair. `max_pecks_min`
  // is invoked exactly once per cross-flock pair {u, v} with u < v, in
  // ascending (u, v) order; returning true orients the arc v -> u, false
  // orients u -> v. Completeness and antisymmetry hold by construction, so
  // only the sizes are validated. Enumeration and seeded generation are built
  // on top of this.
  template <typename F>
  static MultiFlockGraph from_pair_directions(std::vector<int> sizes, F&& max_pecks_min) {
    MultiFlockGraph g = skeleton(std::move(sizes));
    for (ChickenId u = 0; u < g.total_; ++u) {
      for (ChickenId v = u + 1; v < g.total_; ++v) {
        if (g.flock_of_[u] == g.flock_of_[v]) continue;
        if (max_pecks_min(u, v)) {
          g.table_[static_cast<std::size_t>(v) * g.total_ + u] = 1;
        } else {
          g.table_[static_cast<std::size_t>(u) * g.total_ + v] = 1;
        }
      }
    }
    return g;
  }

  int chicken_count() const { return total_; }
  int flock_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }

  FlockId flock_of(ChickenId c) const {
    check_chicken(c);
    return flock_of_[c];
  }
  int flock_size(FlockId f) const {
    check_flock(f);
    return sizes_[f];
  }
  ChickenId flock_begin(FlockId f) const {
    check_flock(f);
    return flock_begin_[f];
  }
  ChickenId flock_end(FlockId f) const {
    check_flock(f);
    return flock_begin_[f] + sizes_[f];
  }
  bool same_flock(ChickenId u, ChickenId v) const {
    check_chicken(u);
    check_chicken(v);
    return flock_of_[u] == flock_of_[v];
  }

  // True iff the arc u -> v is present. Same-flock (and u == v) queries
  // return false rather than erroring, so out-sets are plain subsets of the
  // non-flock chickens.
  bool pecks(ChickenId u, ChickenId v) const {
    check_chicken(u);
    check_chicken(v);
    return table_[static_cast<std::size_t>(u) * total_ + v] != 0;
  }

  int out_degree(ChickenId u) const;
  std::vector<ChickenId> out_set(ChickenId u) const;

  // All arcs in canonical order: one entry per cross-flock pair, listed by
  // ascending (min, max), each carrying its actual direction.
  std::vector<Arc> arcs() const;

  friend bool operator==(const MultiFlockGraph& a, const MultiFlockGraph& b) {
    return a.sizes_ == b.sizes_ && a.table_ == b.table_;
  }

 private:
  MultiFlockGraph() = default;
  static MultiFlockGraph skeleton(std::vector<int> sizes);

  void check_chicken(ChickenId c) const;
  void check_flock(FlockId f) const;

  std::vector<int> sizes_;
  std::vector<FlockId> flock_of_;
  std::vector<ChickenId> flock_begin_;
  int total_ = 0;
  std::vector<char> table_;  // dense direction table, table_[u * n + v] = u pecks v
};

// Shortest peck-chain length from src to every chicken; nullopt marks the
// unreachable ones. Computed by breadth-first traversal over out-arcs.
std::vector<std::optional<int>> peck_distances(const MultiFlockGraph& g, ChickenId src);

// The chickens of flock f whose out-degree equals the flock's maximum
// out-degree. Nonempty for every flock of every valid graph.
std::vector<ChickenId> prominent_chickens(const MultiFlockGraph& g, FlockId f);

enum class FlockRelationKind { FirstDominatesSecond, SecondDominatesFirst, Balanced };

struct FlockRelation {
  FlockRelationKind kind = FlockRelationKind::Balanced;
  // Every chicken of the dominating flock that pecks all of the dominated
  // flock, sorted ascending; empty iff the flocks are balanced.
  std::vector<ChickenId> dominating_witnesses;
};

// Balanced iff neither flock contains a chicken pecking all of the other.
// Mutual domination is impossible: two opposing dominating chickens would
// have to peck each other in both directions.
FlockRelation flock_relation(const MultiFlockGraph& g, FlockId i, FlockId j);

// e eclipses d (same flock, e != d) iff out-set(e) strictly contains
// out-set(d).
bool eclipses(const MultiFlockGraph& g, ChickenId e, ChickenId d);

// True iff no flock-mate eclipses c.
bool non_eclipsed(const MultiFlockGraph& g, ChickenId c);

}  // namespace flock
