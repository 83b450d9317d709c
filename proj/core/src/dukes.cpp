#include "flockgraph/dukes.hpp"

#include <string>

namespace flock {

namespace {

void check_m(int m) {
  if (m < 1) {
    throw NonPositiveMError("m must be positive, got " + std::to_string(m));
  }
}

}  // namespace

bool is_m_duke(const MultiFlockGraph& g, ChickenId c, int m) {
  check_m(m);
  const auto dist = peck_distances(g, c);
  const FlockId home = g.flock_of(c);
  for (ChickenId t = 0; t < g.chicken_count(); ++t) {
    if (g.flock_of(t) == home) continue;
    if (!dist[t] || *dist[t] > m) return false;
  }
  return true;
}

bool is_m_king(const MultiFlockGraph& g, ChickenId c, int m) {
  check_m(m);
  const auto dist = peck_distances(g, c);
  for (ChickenId t = 0; t < g.chicken_count(); ++t) {
    if (t == c) continue;
    if (!dist[t] || *dist[t] > m) return false;
  }
  return true;
}

std::vector<ChickenId> m_dukes(const MultiFlockGraph& g, int m) {
  check_m(m);
  std::vector<ChickenId> result;
  for (ChickenId c = 0; c < g.chicken_count(); ++c) {
    if (is_m_duke(g, c, m)) result.push_back(c);
  }
  return result;
}

std::vector<ChickenId> m_kings(const MultiFlockGraph& g, int m) {
  check_m(m);
  std::vector<ChickenId> result;
  for (ChickenId c = 0; c < g.chicken_count(); ++c) {
    if (is_m_king(g, c, m)) result.push_back(c);
  }
  return result;
}

std::vector<ChickenId> transmitters(const MultiFlockGraph& g) { return m_dukes(g, 1); }

DukeProfile duke_profile(const MultiFlockGraph& g, int max_m) {
  check_m(max_m);
  DukeProfile profile;
  profile.max_m = max_m;
  profile.dukes_by_m.resize(static_cast<std::size_t>(max_m) + 1);
  profile.kings_by_m.resize(static_cast<std::size_t>(max_m) + 1);
  for (int m = 1; m <= max_m; ++m) {
    profile.dukes_by_m[static_cast<std::size_t>(m)] = m_dukes(g, m);
    profile.kings_by_m[static_cast<std::size_t>(m)] = m_kings(g, m);
  }
  profile.transmitters = profile.dukes_by_m[1];
  return profile;
}

OracleClassification oracle_classification(const MultiFlockGraph& g) {
  OracleClassification result;
  result.one_duke_witnesses = transmitters(g);
  result.has_one_duke = !result.one_duke_witnesses.empty();
  result.two_dukes = m_dukes(g, 2);
  result.has_three_two_dukes = result.two_dukes.size() >= 3;
  result.three_dukes = m_dukes(g, 3);
  result.has_four_three_dukes = result.three_dukes.size() >= 4;
  if (!result.has_one_duke && !result.has_three_two_dukes && !result.has_four_three_dukes) {
    throw TheoremViolationError(
        "no 1-Duke, fewer than three 2-Dukes and fewer than four 3-Dukes; "
        "this graph would contradict the classification theorem",
        g);
  }
  return result;
}

}  // namespace flock
