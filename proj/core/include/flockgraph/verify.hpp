#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flockgraph/enumerate.hpp"

namespace flock {

// Exhaustive verification: every theorem id maps to a checker that sweeps all
// orientations of a size shape, applies the brute-force oracle to the
// theorem's conclusion, and revalidates the constructive witnesses where one
// of the constructive operations applies.
enum class TheoremId {
  Lemma1,
  Cor2,
  Lemma3,
  Thm4,
  Thm5,
  Thm6,
  Cor7,
  Thm8,
  Lemma8,
  Lemma9,
  Thm10,
  DukeKingBridge,
  DominationAntisym,
};

std::string_view to_string(TheoremId id);

// Accepts the ids used on the command line (LEMMA1, COR2, ..., THM10,
// DUKE_KING_BRIDGE, DOMINATION_ANTISYM); raises UnknownTheoremError otherwise.
TheoremId theorem_from_string(std::string_view name);

std::vector<std::string_view> all_theorem_names();

struct Counterexample {
  std::uint64_t orientation_index = 0;
  std::string graph;  // canonical flock text
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Thm10;
  std::vector<int> sizes;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return counterexamples.empty(); }
};

// Sweeps every orientation of the given sizes. Instances that fail the
// theorem's hypotheses are skipped but still counted. `workers` > 1 splits
// the orientation index space across threads; counterexamples always come
// back sorted by orientation index, so the report is deterministic.
VerificationReport verify(TheoremId id, std::span<const int> sizes, int workers = 1,
                          int edge_cap = kDefaultEdgeCap);

// Single-instance check used by the sweep; exposed for targeted tests.
// Returns true when the instance satisfies the theorem (or its hypotheses do
// not apply).
bool verify_instance(TheoremId id, const MultiFlockGraph& g);

}  // namespace flock
