#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flockgraph/dukes.hpp"
#include "flockgraph/graph.hpp"

namespace flock {

// Witness extraction: each lemma and theorem about dukes becomes an operation
// that returns concrete witness chickens together with certificates. A
// certificate is checkable arc by arc with no reference to how it was built,
// so callers never have to trust the proof-following code.

struct DukeCertificate {
  ChickenId duke = 0;
  int bound = 0;
  // One peck chain per chicken outside the duke's flock; every path starts at
  // the duke, ends at its key, and has at most `bound` arcs.
  std::map<ChickenId, std::vector<ChickenId>> chains;
};

// Returns a description of the first defect found, or nullopt when the
// certificate is sound: full coverage of the chickens outside the duke's
// flock, every consecutive pair an actual arc, every chain within bound.
std::optional<std::string> certificate_error(const MultiFlockGraph& g, const DukeCertificate& cert);

inline bool certificate_valid(const MultiFlockGraph& g, const DukeCertificate& cert) {
  return !certificate_error(g, cert).has_value();
}

class NotADukeError : public Error {
 public:
  NotADukeError(const std::string& what, ChickenId chicken, ChickenId out_of_reach)
      : Error(what), chicken(chicken), out_of_reach(out_of_reach) {}

  ChickenId chicken;
  // A witness chicken the claimed duke cannot reach within the bound.
  ChickenId out_of_reach;
};

// Materializes shortest peck chains (BFS parent links) proving that c is an
// m-Duke. Raises NotADukeError carrying an unreachable or too-far chicken if
// it is not.
DukeCertificate certify_duke(const MultiFlockGraph& g, ChickenId c, int m);

// Bi-flock lemma: any chicken d pecking a prominent chicken k of the other
// flock is a 3-Duke. Chains are built exactly as in the proof: a direct arc
// where d pecks the target, otherwise d -> k -> f -> target through the
// prominent chicken.
DukeCertificate lemma1_duke(const MultiFlockGraph& g, ChickenId d);

// Balanced bi-flock: each flock contains a 3-Duke. Returns one certificate
// per flock (flock 0 first), found by applying lemma 1 to the lowest-index
// pecker of the lowest-index prominent chicken of the opposite flock.
std::pair<DukeCertificate, DukeCertificate> corollary2_dukes(const MultiFlockGraph& g);

// Bi-flock: a prominent chicken of a non-dominated flock is a 3-Duke.
// Certifies the lowest-index prominent chicken of f.
DukeCertificate lemma3_duke(const MultiFlockGraph& g, FlockId f);

enum class ClassificationKind { OneDuke, ThreeTwoDukes, FourThreeDukes };

std::string_view to_string(ClassificationKind kind);

struct Classification {
  ClassificationKind kind = ClassificationKind::OneDuke;
  std::vector<ChickenId> witnesses;            // 1, 3 or 4 distinct chickens
  std::vector<DukeCertificate> certificates;   // parallel to witnesses
  // True when the three-2-Dukes outcome had to fall back to scanning the full
  // 2-Duke set because the constructive walk repeated a witness.
  bool used_fallback = false;
};

// Bi-flock classification: either a 1-Duke exists, or four 3-Dukes do.
Classification theorem4_classify(const MultiFlockGraph& g);

// Every multi-flock graph (>= 2 flocks) contains a 3-Duke. Follows the
// proof: either some flock is undominated and the graph collapses to a
// bi-flock instance (merging everything else into one virtual flock), or
// every flock is dominated and the chains run through the flock that
// dominates the most flocks. The certificate is valid in the original graph.
DukeCertificate theorem5_find_3duke(const MultiFlockGraph& g);

struct PeckedWitness {
  enum class Kind { PeckedBy3Duke, FlockMate2Duke };
  Kind kind = Kind::PeckedBy3Duke;
  ChickenId witness = 0;
  DukeCertificate certificate;
};

// Any pecked chicken is either pecked by a 3-Duke or shares its flock with a
// 2-Duke. The 3-Duke candidate is drawn from the sub-graph induced on c's
// peckers, preferring maximum overall out-degree (ties to the lowest index).
PeckedWitness theorem6_pecked_witness(const MultiFlockGraph& g, ChickenId c);

struct ThreeDukeChain {
  // Three distinct 3-Dukes with dukes[1] pecking dukes[0] and dukes[2]
  // pecking dukes[1].
  std::array<ChickenId, 3> dukes{};
  std::array<DukeCertificate, 3> certificates;
};

// With no 2-Duke anywhere, produces three distinct 3-Dukes chained by
// pecking, via theorem 5 and two applications of theorem 6.
ThreeDukeChain corollary7_three_3dukes(const MultiFlockGraph& g);

struct FourthDuke {
  ChickenId duke = 0;
  DukeCertificate certificate;
};

// With no 2-Duke and a pecking cycle d1 -> d2 -> d3 -> d1 of distinct
// 3-Dukes, finds a fourth 3-Duke by removing d3 and applying theorem 6 to d1
// in the reduced graph.
FourthDuke theorem8_fourth_3duke(const MultiFlockGraph& g, ChickenId d1, ChickenId d2,
                                 ChickenId d3);

// Eclipse lemma: given an m-Duke d, returns a non-eclipsed m-Duke in d's
// flock (d itself, or its maximum-out-degree eclipser).
ChickenId lemma8_non_eclipsed_duke(const MultiFlockGraph& g, ChickenId d, int m);

struct Lemma9Outcome {
  enum class Kind { PeckedByTwoDuke, ThreeTwoDukes, FourThreeDukes };
  Kind kind = Kind::PeckedByTwoDuke;
  // One of: 1, 1a, 1b, 2a-i, 2a-ii, 2b-i, 2b-ii, 3a, 3b, 3c-i, 3c-ii.
  std::string case_label;
  std::vector<ChickenId> witnesses;           // 1, 3 or 4 chickens
  std::vector<DukeCertificate> certificates;  // parallel to witnesses
};

// For a non-eclipsed 2-Duke d in a transmitter-free graph, runs the full case
// tree keyed on the number of peckers of d and returns the fired case label
// with certified witnesses. PeckedByTwoDuke carries the 2-Duke that pecks d.
Lemma9Outcome lemma9_outcome(const MultiFlockGraph& g, ChickenId d);

// Full classification: a 1-Duke, three 2-Dukes, or four 3-Dukes, derived
// constructively (transmitter check, then corollary 7 + theorem 8, then up to
// two rounds of lemma 9 on non-eclipsed 2-Dukes).
Classification theorem10_classify(const MultiFlockGraph& g);

}  // namespace flock
