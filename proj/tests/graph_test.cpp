#include "flockgraph/graph.hpp"

#include <doctest.h>

#include <set>

#include "flockgraph/enumerate.hpp"
#include "oracle.hpp"

using namespace flock;

namespace {

MultiFlockGraph fig6() { return fixture(FixtureName::Fig6); }
MultiFlockGraph fig7() { return fixture(FixtureName::Fig7); }

}  // namespace

TEST_CASE("build accepts the figure arc lists") {
  const MultiFlockGraph g = MultiFlockGraph::build({1, 3}, std::vector<Arc>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(g.chicken_count() == 4);
  CHECK(g.flock_count() == 2);
  CHECK(g.flock_of(0) == 0);
  CHECK(g.flock_of(3) == 1);
  CHECK(g.pecks(0, 1));
  CHECK_FALSE(g.pecks(1, 0));
}

TEST_CASE("build accepts a single flock with no arcs") {
  const MultiFlockGraph g = MultiFlockGraph::build({2}, std::vector<Arc>{});
  CHECK(g.chicken_count() == 2);
  CHECK_FALSE(g.pecks(0, 1));
  CHECK_FALSE(g.pecks(1, 0));
}

TEST_CASE("build rejects malformed inputs") {
  CHECK_THROWS_AS(MultiFlockGraph::build({}, std::vector<Arc>{}), EmptyFlockError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 0}, std::vector<Arc>{}), EmptyFlockError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 1}, std::vector<Arc>{{0, 1}, {1, 0}}),
                  DuplicatePairError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 1}, std::vector<Arc>{{0, 1}, {0, 1}}),
                  DuplicatePairError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 1}, std::vector<Arc>{}), MissingPairError);
  CHECK_THROWS_AS(MultiFlockGraph::build({2, 1}, std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}}),
                  IntraFlockArcError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 1}, std::vector<Arc>{{0, 7}}), UnknownChickenError);
  CHECK_THROWS_AS(MultiFlockGraph::build({1, 1}, std::vector<Arc>{{0, 0}}), IntraFlockArcError);
}

TEST_CASE("pecks is total on cross pairs, false within flocks") {
  const MultiFlockGraph g = fig7();
  CHECK(g.pecks(2, 0));  // arc c -> a read from the figure
  CHECK_FALSE(g.pecks(0, 2));
  CHECK_FALSE(g.pecks(0, 0));
  CHECK_FALSE(g.pecks(0, 1));  // same flock
  CHECK_FALSE(g.pecks(1, 0));
  CHECK_THROWS_AS((void)g.pecks(0, 99), UnknownChickenError);
}

TEST_CASE("peck_distances walks the fig1 path") {
  const MultiFlockGraph g = fixture(FixtureName::Fig1);
  const auto dist = peck_distances(g, 0);
  CHECK(dist[0] == 0);
  CHECK(dist[1] == 1);
  CHECK(dist[2] == 2);
  CHECK(dist[3] == 3);
  CHECK(dist[4] == 4);
}

TEST_CASE("peck_distances marks unreachable chickens") {
  const MultiFlockGraph g = MultiFlockGraph::build({3}, std::vector<Arc>{});
  const auto dist = peck_distances(g, 0);
  CHECK(dist[0] == 0);
  CHECK_FALSE(dist[1].has_value());
  CHECK_FALSE(dist[2].has_value());
}

TEST_CASE("peck_distances fig7 reaches b through two hops of flock 1") {
  const MultiFlockGraph g = fig7();
  const auto dist = peck_distances(g, 2);
  CHECK(dist[0] == 1);
  CHECK(dist[1] == 3);  // 2 -> 0 -> 5 -> 1
}

TEST_CASE("prominent chickens by flock") {
  CHECK(prominent_chickens(fig6(), 0) == std::vector<ChickenId>{0});
  CHECK(prominent_chickens(fig7(), 0) == std::vector<ChickenId>{0, 1});
  const MultiFlockGraph g = MultiFlockGraph::build({2, 1}, std::vector<Arc>{{0, 2}, {2, 1}});
  CHECK(prominent_chickens(g, 0) == std::vector<ChickenId>{0});
  CHECK_THROWS_AS(prominent_chickens(g, 5), UnknownFlockError);
}

TEST_CASE("flock_relation reports domination and balance") {
  const FlockRelation dom = flock_relation(fig6(), 0, 1);
  CHECK(dom.kind == FlockRelationKind::FirstDominatesSecond);
  CHECK(dom.dominating_witnesses == std::vector<ChickenId>{0});

  const FlockRelation bal = flock_relation(fig7(), 0, 1);
  CHECK(bal.kind == FlockRelationKind::Balanced);
  CHECK(bal.dominating_witnesses.empty());

  const MultiFlockGraph tiny = MultiFlockGraph::build({1, 1}, std::vector<Arc>{{0, 1}});
  const FlockRelation rel = flock_relation(tiny, 0, 1);
  CHECK(rel.kind == FlockRelationKind::FirstDominatesSecond);
  CHECK(rel.dominating_witnesses == std::vector<ChickenId>{0});
  const FlockRelation swapped = flock_relation(tiny, 1, 0);
  CHECK(swapped.kind == FlockRelationKind::SecondDominatesFirst);

  CHECK_THROWS_AS(flock_relation(tiny, 0, 0), SameFlockError);
  CHECK_THROWS_AS(flock_relation(tiny, 0, 9), UnknownFlockError);
}

TEST_CASE("eclipses compares out-sets strictly") {
  const MultiFlockGraph g = MultiFlockGraph::build({2, 1}, std::vector<Arc>{{0, 2}, {2, 1}});
  CHECK(eclipses(g, 0, 1));       // out(0) = {2} strictly contains out(1) = {}
  CHECK_FALSE(eclipses(g, 1, 0));
  CHECK_FALSE(non_eclipsed(g, 1));
  CHECK(non_eclipsed(g, 0));

  const MultiFlockGraph f7 = fig7();
  CHECK_FALSE(eclipses(f7, 0, 1));  // {3,4,5} and {2,3,4} are incomparable
  CHECK_FALSE(eclipses(f7, 1, 0));
  CHECK(non_eclipsed(f7, 0));

  CHECK_THROWS_AS(eclipses(g, 0, 0), SameChickenError);
  CHECK_THROWS_AS(eclipses(g, 0, 2), DifferentFlocksError);
}

TEST_CASE("singleton flock chickens are never eclipsed") {
  const MultiFlockGraph g = fixture(FixtureName::Fig8);
  for (ChickenId c = 0; c < g.chicken_count(); ++c) CHECK(non_eclipsed(g, c));
}

TEST_CASE("orientation totality over an exhaustive sweep") {
  const OrientationRange range({2, 2});
  for (const MultiFlockGraph& g : range) {
    for (ChickenId u = 0; u < g.chicken_count(); ++u) {
      for (ChickenId v = 0; v < g.chicken_count(); ++v) {
        if (u == v || g.flock_of(u) == g.flock_of(v)) {
          CHECK_FALSE(g.pecks(u, v));
        } else {
          CHECK(g.pecks(u, v) != g.pecks(v, u));
        }
      }
    }
  }
}

TEST_CASE("no pair of flocks ever dominates mutually") {
  for (const auto& sizes : {std::vector<int>{2, 2}, std::vector<int>{1, 2, 2}}) {
    const OrientationRange range(sizes);
    for (const MultiFlockGraph& g : range) {
      for (FlockId i = 0; i < g.flock_count(); ++i) {
        for (FlockId j = i + 1; j < g.flock_count(); ++j) {
          const FlockRelation fwd = flock_relation(g, i, j);
          const FlockRelation rev = flock_relation(g, j, i);
          const bool i_dom = fwd.kind == FlockRelationKind::FirstDominatesSecond;
          const bool j_dom = fwd.kind == FlockRelationKind::SecondDominatesFirst;
          CHECK_FALSE((i_dom && j_dom));
          // Orientation-reversed query must agree.
          CHECK((rev.kind == FlockRelationKind::Balanced) ==
                (fwd.kind == FlockRelationKind::Balanced));
          CHECK(fwd.dominating_witnesses == rev.dominating_witnesses);
          CHECK((fwd.kind == FlockRelationKind::Balanced) == fwd.dominating_witnesses.empty());
        }
      }
    }
  }
}

TEST_CASE("eclipse is a strict partial order within a flock") {
  const OrientationRange range({3, 2});
  for (const MultiFlockGraph& g : range) {
    for (ChickenId a = 0; a < 3; ++a) {
      for (ChickenId b = 0; b < 3; ++b) {
        if (a == b) continue;
        if (eclipses(g, a, b)) CHECK_FALSE(eclipses(g, b, a));
        for (ChickenId c = 0; c < 3; ++c) {
          if (c == a || c == b) continue;
          if (eclipses(g, a, b) && eclipses(g, b, c)) CHECK(eclipses(g, a, c));
        }
      }
    }
  }
}

TEST_CASE("prominence is nonempty for every flock") {
  const OrientationRange range({1, 2, 2});
  for (const MultiFlockGraph& g : range) {
    for (FlockId f = 0; f < g.flock_count(); ++f) {
      CHECK_FALSE(prominent_chickens(g, f).empty());
    }
  }
}

TEST_CASE("finite distances agree with the all-pairs oracle") {
  const OrientationRange range({2, 3});
  for (const MultiFlockGraph& g : range) {
    const auto matrix = oracle::all_pairs_distances(g);
    for (ChickenId src = 0; src < g.chicken_count(); ++src) {
      const auto dist = peck_distances(g, src);
      CHECK(dist[src] == 0);
      for (ChickenId t = 0; t < g.chicken_count(); ++t) {
        if (dist[t]) {
          CHECK(*dist[t] == matrix[src][t]);
          // Every positive distance is witnessed by an arc from the previous
          // ring.
          if (*dist[t] > 0) {
            bool witnessed = false;
            for (ChickenId p = 0; p < g.chicken_count(); ++p) {
              if (dist[p] && *dist[p] == *dist[t] - 1 && g.pecks(p, t)) witnessed = true;
            }
            CHECK(witnessed);
          }
        } else {
          CHECK(matrix[src][t] >= oracle::kUnreachable);
        }
      }
    }
  }
}
