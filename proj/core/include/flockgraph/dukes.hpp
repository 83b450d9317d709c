#pragma once

#include <vector>

#include "flockgraph/graph.hpp"

namespace flock {

// An m-Duke has peck chains of length at most m to every chicken outside its
// own flock; an m-King additionally covers its flock-mates. Every operation
// here recomputes from breadth-first distances, which makes this module the
// brute-force oracle the constructive results are validated against.

// True iff every chicken outside c's flock is within distance m of c.
// Vacuously true on a single-flock graph.
bool is_m_duke(const MultiFlockGraph& g, ChickenId c, int m);

// True iff every other chicken, flock-mates included, is within distance m.
// A chicken whose flock-mates are unreachable is never an m-King.
bool is_m_king(const MultiFlockGraph& g, ChickenId c, int m);

// Set-valued forms; results are sorted ascending.
std::vector<ChickenId> m_dukes(const MultiFlockGraph& g, int m);
std::vector<ChickenId> m_kings(const MultiFlockGraph& g, int m);

// The 1-Dukes: chickens pecking every chicken outside their flock.
std::vector<ChickenId> transmitters(const MultiFlockGraph& g);

struct DukeProfile {
  int max_m = 0;
  // Indexed by m in [1, max_m]; index 0 is unused and stays empty.
  std::vector<std::vector<ChickenId>> dukes_by_m;
  std::vector<std::vector<ChickenId>> kings_by_m;
  std::vector<ChickenId> transmitters;

  const std::vector<ChickenId>& dukes(int m) const { return dukes_by_m.at(static_cast<std::size_t>(m)); }
  const std::vector<ChickenId>& kings(int m) const { return kings_by_m.at(static_cast<std::size_t>(m)); }
};

// Default max_m for profiles (and the CLI): 4, the largest bound the duke /
// king comparison needs.
inline constexpr int kDefaultMaxM = 4;

DukeProfile duke_profile(const MultiFlockGraph& g, int max_m = kDefaultMaxM);

class TheoremViolationError : public Error {
 public:
  TheoremViolationError(const std::string& what, MultiFlockGraph graph)
      : Error(what), graph(std::move(graph)) {}

  MultiFlockGraph graph;
};

struct OracleClassification {
  bool has_one_duke = false;
  std::vector<ChickenId> one_duke_witnesses;  // = transmitters
  bool has_three_two_dukes = false;
  std::vector<ChickenId> two_dukes;  // the full 2-Duke set
  bool has_four_three_dukes = false;
  std::vector<ChickenId> three_dukes;  // the full 3-Duke set
};

// Checks which disjuncts of "either a 1-Duke, three 2-Dukes, or four 3-Dukes"
// hold. At least one must on every valid graph; a graph where none does is
// either a library bug or a genuine counterexample, reported as
// TheoremViolationError carrying the graph.
OracleClassification oracle_classification(const MultiFlockGraph& g);

}  // namespace flock
