#include "flockgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace flock {

namespace {

std::string pair_text(ChickenId u, ChickenId v) {
  return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

}  // namespace

MultiFlockGraph MultiFlockGraph::skeleton(std::vector<int> sizes) {
  if (sizes.empty()) {
    throw EmptyFlockError("a graph needs at least one flock");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) {
      throw EmptyFlockError("flock " + std::to_string(i) + " has size " +
                            std::to_string(sizes[i]) + "; every flock needs at least one chicken");
    }
  }
  MultiFlockGraph g;
  g.sizes_ = std::move(sizes);
  g.flock_begin_.reserve(g.sizes_.size());
  int total = 0;
  for (std::size_t f = 0; f < g.sizes_.size(); ++f) {
    g.flock_begin_.push_back(total);
    for (int k = 0; k < g.sizes_[f]; ++k) g.flock_of_.push_back(static_cast<FlockId>(f));
    total += g.sizes_[f];
  }
  g.total_ = total;
  g.table_.assign(static_cast<std::size_t>(total) * total, 0);
  return g;
}

MultiFlockGraph MultiFlockGraph::build(std::vector<int> sizes, std::span<const Arc> arcs) {
  MultiFlockGraph g = skeleton(std::move(sizes));
  const int n = g.total_;
  // 0 = uncovered, 1 = covered; indexed by unordered pair
  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n) {
      throw UnknownChickenError("arc endpoint " + std::to_string(a.from) + " is out of range");
    }
    if (a.to < 0 || a.to >= n) {
      throw UnknownChickenError("arc endpoint " + std::to_string(a.to) + " is out of range");
    }
    if (g.flock_of_[a.from] == g.flock_of_[a.to]) {
      throw IntraFlockArcError("arc " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
                               " joins two chickens of flock " +
                               std::to_string(g.flock_of_[a.from]));
    }
    const ChickenId lo = std::min(a.from, a.to);
    const ChickenId hi = std::max(a.from, a.to);
    char& mark = covered[static_cast<std::size_t>(lo) * n + hi];
    if (mark) {
      throw DuplicatePairError("pair " + pair_text(lo, hi) + " is oriented more than once");
    }
    mark = 1;
    g.table_[static_cast<std::size_t>(a.from) * n + a.to] = 1;
  }
  for (ChickenId u = 0; u < n; ++u) {
    for (ChickenId v = u + 1; v < n; ++v) {
      if (g.flock_of_[u] == g.flock_of_[v]) continue;
      if (!covered[static_cast<std::size_t>(u) * n + v]) {
        throw MissingPairError("cross-flock pair " + pair_text(u, v) + " has no arc");
      }
    }
  }
  return g;
}

void MultiFlockGraph::check_chicken(ChickenId c) const {
  if (c < 0 || c >= total_) {
    throw UnknownChickenError("chicken " + std::to_string(c) + " is out of range (graph has " +
                              std::to_string(total_) + " chickens)");
  }
}

void MultiFlockGraph::check_flock(FlockId f) const {
  if (f < 0 || f >= flock_count()) {
    throw UnknownFlockError("flock " + std::to_string(f) + " is out of range (graph has " +
                            std::to_string(flock_count()) + " flocks)");
  }
}

int MultiFlockGraph::out_degree(ChickenId u) const {
  check_chicken(u);
  const char* row = table_.data() + static_cast<std::size_t>(u) * total_;
  int deg = 0;
  for (int v = 0; v < total_; ++v) deg += row[v];
  return deg;
}

std::vector<ChickenId> MultiFlockGraph::out_set(ChickenId u) const {
  check_chicken(u);
  const char* row = table_.data() + static_cast<std::size_t>(u) * total_;
  std::vector<ChickenId> out;
  for (ChickenId v = 0; v < total_; ++v) {
    if (row[v]) out.push_back(v);
  }
  return out;
}

std::vector<Arc> MultiFlockGraph::arcs() const {
  std::vector<Arc> result;
  for (ChickenId u = 0; u < total_; ++u) {
    for (ChickenId v = u + 1; v < total_; ++v) {
      if (flock_of_[u] == flock_of_[v]) continue;
      if (table_[static_cast<std::size_t>(u) * total_ + v]) {
        result.push_back(Arc{u, v});
      } else {
        result.push_back(Arc{v, u});
      }
    }
  }
  return result;
}

std::vector<std::optional<int>> peck_distances(const MultiFlockGraph& g, ChickenId src) {
  const int n = g.chicken_count();
  if (src < 0 || src >= n) {
    throw UnknownChickenError("chicken " + std::to_string(src) + " is out of range");
  }
  std::vector<std::optional<int>> dist(n);
  dist[src] = 0;
  std::deque<ChickenId> queue{src};
  while (!queue.empty()) {
    const ChickenId u = queue.front();
    queue.pop_front();
    const int du = *dist[u];
    for (ChickenId v = 0; v < n; ++v) {
      if (g.pecks(u, v) && !dist[v]) {
        dist[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<ChickenId> prominent_chickens(const MultiFlockGraph& g, FlockId f) {
  const ChickenId begin = g.flock_begin(f);
  const ChickenId end = g.flock_end(f);
  int best = -1;
  for (ChickenId c = begin; c < end; ++c) best = std::max(best, g.out_degree(c));
  std::vector<ChickenId> result;
  for (ChickenId c = begin; c < end; ++c) {
    if (g.out_degree(c) == best) result.push_back(c);
  }
  return result;
}

namespace {

std::vector<ChickenId> dominating_chickens(const MultiFlockGraph& g, FlockId i, FlockId j) {
  std::vector<ChickenId> witnesses;
  for (ChickenId c = g.flock_begin(i); c < g.flock_end(i); ++c) {
    bool pecks_all = true;
    for (ChickenId t = g.flock_begin(j); t < g.flock_end(j); ++t) {
      if (!g.pecks(c, t)) {
        pecks_all = false;
        break;
      }
    }
    if (pecks_all) witnesses.push_back(c);
  }
  return witnesses;
}

}  // namespace

FlockRelation flock_relation(const MultiFlockGraph& g, FlockId i, FlockId j) {
  if (i < 0 || i >= g.flock_count() || j < 0 || j >= g.flock_count()) {
    throw UnknownFlockError("flock pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") is out of range");
  }
  if (i == j) {
    throw SameFlockError("flock_relation needs two distinct flocks, got " + std::to_string(i) +
                         " twice");
  }
  std::vector<ChickenId> first = dominating_chickens(g, i, j);
  if (!first.empty()) {
    return FlockRelation{FlockRelationKind::FirstDominatesSecond, std::move(first)};
  }
  std::vector<ChickenId> second = dominating_chickens(g, j, i);
  if (!second.empty()) {
    return FlockRelation{FlockRelationKind::SecondDominatesFirst, std::move(second)};
  }
  return FlockRelation{FlockRelationKind::Balanced, {}};
}

bool eclipses(const MultiFlockGraph& g, ChickenId e, ChickenId d) {
  if (e == d) {
    throw SameChickenError("eclipses(" + std::to_string(e) + ", " + std::to_string(d) +
                           ") needs two distinct chickens");
  }
  if (!g.same_flock(e, d)) {
    throw DifferentFlocksError("eclipses is defined only within one flock; chickens " +
                               std::to_string(e) + " and " + std::to_string(d) +
                               " live in different flocks");
  }
  bool strictly_more = false;
  for (ChickenId v = 0; v < g.chicken_count(); ++v) {
    const bool de = g.pecks(e, v);
    const bool dd = g.pecks(d, v);
    if (dd && !de) return false;  // e misses a chicken d pecks
    if (de && !dd) strictly_more = true;
  }
  return strictly_more;
}

bool non_eclipsed(const MultiFlockGraph& g, ChickenId c) {
  const FlockId f = g.flock_of(c);
  for (ChickenId e = g.flock_begin(f); e < g.flock_end(f); ++e) {
    if (e != c && eclipses(g, e, c)) return false;
  }
  return true;
}

}  // namespace flock
