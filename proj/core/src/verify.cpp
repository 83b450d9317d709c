#include "flockgraph/verify.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "flockgraph/constructive.hpp"
#include "flockgraph/dukes.hpp"
#include "flockgraph/text_io.hpp"

namespace flock {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 13> kTheoremNames{{
    {TheoremId::Lemma1, "LEMMA1"},
    {TheoremId::Cor2, "COR2"},
    {TheoremId::Lemma3, "LEMMA3"},
    {TheoremId::Thm4, "THM4"},
    {TheoremId::Thm5, "THM5"},
    {TheoremId::Thm6, "THM6"},
    {TheoremId::Cor7, "COR7"},
    {TheoremId::Thm8, "THM8"},
    {TheoremId::Lemma8, "LEMMA8"},
    {TheoremId::Lemma9, "LEMMA9"},
    {TheoremId::Thm10, "THM10"},
    {TheoremId::DukeKingBridge, "DUKE_KING_BRIDGE"},
    {TheoremId::DominationAntisym, "DOMINATION_ANTISYM"},
}};

bool contains(const std::vector<ChickenId>& sorted, ChickenId c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

bool distinct(const std::vector<ChickenId>& witnesses) {
  std::vector<ChickenId> sorted = witnesses;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// The classification's witnesses must certificate-validate at the claimed
// bound and belong to the matching oracle duke set.
bool classification_ok(const MultiFlockGraph& g, const Classification& c) {
  std::size_t expect = 0;
  int bound = 0;
  const std::vector<ChickenId>* oracle_set = nullptr;
  const std::vector<ChickenId> one = transmitters(g);
  const std::vector<ChickenId> two = m_dukes(g, 2);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  switch (c.kind) {
    case ClassificationKind::OneDuke:
      expect = 1;
      bound = 1;
      oracle_set = &one;
      break;
    case ClassificationKind::ThreeTwoDukes:
      expect = 3;
      bound = 2;
      oracle_set = &two;
      break;
    case ClassificationKind::FourThreeDukes:
      expect = 4;
      bound = 3;
      oracle_set = &three;
      break;
  }
  if (c.witnesses.size() != expect || c.certificates.size() != expect) return false;
  if (!distinct(c.witnesses)) return false;
  for (std::size_t k = 0; k < expect; ++k) {
    const DukeCertificate& cert = c.certificates[k];
    if (cert.duke != c.witnesses[k] || cert.bound != bound) return false;
    if (!certificate_valid(g, cert)) return false;
    if (!contains(*oracle_set, c.witnesses[k])) return false;
  }
  return true;
}

bool check_lemma1(const MultiFlockGraph& g) {
  if (g.flock_count() != 2) return true;
  const std::vector<ChickenId> three = m_dukes(g, 3);
  for (ChickenId d = 0; d < g.chicken_count(); ++d) {
    const FlockId other = 1 - g.flock_of(d);
    bool applies = false;
    for (ChickenId k : prominent_chickens(g, other)) {
      if (g.pecks(d, k)) applies = true;
    }
    if (!applies) continue;
    const DukeCertificate cert = lemma1_duke(g, d);
    if (cert.duke != d || cert.bound != 3) return false;
    if (!certificate_valid(g, cert)) return false;
    if (!contains(three, d)) return false;
  }
  return true;
}

bool check_cor2(const MultiFlockGraph& g) {
  if (g.flock_count() != 2) return true;
  const FlockRelation rel = flock_relation(g, 0, 1);
  if (rel.kind != FlockRelationKind::Balanced) return true;
  const auto [c0, c1] = corollary2_dukes(g);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  if (g.flock_of(c0.duke) != 0 || g.flock_of(c1.duke) != 1) return false;
  for (const DukeCertificate& cert : {c0, c1}) {
    if (cert.bound != 3 || !certificate_valid(g, cert)) return false;
    if (!contains(three, cert.duke)) return false;
  }
  // The oracle agrees each flock holds a 3-Duke.
  bool flock0 = false;
  bool flock1 = false;
  for (ChickenId d : three) {
    (g.flock_of(d) == 0 ? flock0 : flock1) = true;
  }
  return flock0 && flock1;
}

bool check_lemma3(const MultiFlockGraph& g) {
  if (g.flock_count() != 2) return true;
  const std::vector<ChickenId> three = m_dukes(g, 3);
  for (FlockId f = 0; f < 2; ++f) {
    const FlockRelation rel = flock_relation(g, f, 1 - f);
    if (rel.kind == FlockRelationKind::SecondDominatesFirst) continue;  // f dominated
    const DukeCertificate cert = lemma3_duke(g, f);
    if (g.flock_of(cert.duke) != f || !certificate_valid(g, cert)) return false;
    // The lemma says every prominent chicken of f is a 3-Duke.
    for (ChickenId k : prominent_chickens(g, f)) {
      if (!contains(three, k)) return false;
    }
  }
  return true;
}

bool check_thm4(const MultiFlockGraph& g) {
  if (g.flock_count() != 2) return true;
  const Classification c = theorem4_classify(g);
  const bool has_transmitter = !transmitters(g).empty();
  if (c.kind == ClassificationKind::OneDuke) {
    if (!has_transmitter) return false;
  } else if (c.kind == ClassificationKind::FourThreeDukes) {
    if (has_transmitter) return false;
    if (m_dukes(g, 3).size() < 4) return false;
  } else {
    return false;  // theorem 4 never yields three 2-Dukes
  }
  return classification_ok(g, c);
}

bool check_thm5(const MultiFlockGraph& g) {
  if (g.flock_count() < 2) return true;
  const DukeCertificate cert = theorem5_find_3duke(g);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  return !three.empty() && cert.bound == 3 && certificate_valid(g, cert) &&
         contains(three, cert.duke);
}

bool check_thm6(const MultiFlockGraph& g) {
  const std::vector<ChickenId> two = m_dukes(g, 2);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  for (ChickenId c = 0; c < g.chicken_count(); ++c) {
    bool pecked = false;
    for (ChickenId u = 0; u < g.chicken_count() && !pecked; ++u) {
      if (g.pecks(u, c)) pecked = true;
    }
    if (!pecked) continue;
    // Oracle-side conclusion, independent of the constructive witness.
    bool conclusion = false;
    for (ChickenId d : three) {
      if (g.pecks(d, c)) conclusion = true;
    }
    for (ChickenId b : two) {
      if (b != c && g.flock_of(b) == g.flock_of(c)) conclusion = true;
    }
    if (!conclusion) return false;
    const PeckedWitness w = theorem6_pecked_witness(g, c);
    if (!certificate_valid(g, w.certificate) || w.certificate.duke != w.witness) return false;
    if (w.kind == PeckedWitness::Kind::PeckedBy3Duke) {
      if (!g.pecks(w.witness, c) || w.certificate.bound != 3) return false;
      if (!contains(three, w.witness)) return false;
    } else {
      if (w.witness == c || g.flock_of(w.witness) != g.flock_of(c)) return false;
      if (w.certificate.bound != 2 || !contains(two, w.witness)) return false;
    }
  }
  return true;
}

bool check_cor7(const MultiFlockGraph& g) {
  if (!m_dukes(g, 2).empty()) return true;
  const ThreeDukeChain chain = corollary7_three_3dukes(g);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  if (three.size() < 3) return false;
  if (chain.dukes[0] == chain.dukes[1] || chain.dukes[1] == chain.dukes[2] ||
      chain.dukes[0] == chain.dukes[2]) {
    return false;
  }
  if (!g.pecks(chain.dukes[1], chain.dukes[0]) || !g.pecks(chain.dukes[2], chain.dukes[1])) {
    return false;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const DukeCertificate& cert = chain.certificates[k];
    if (cert.duke != chain.dukes[k] || cert.bound != 3) return false;
    if (!certificate_valid(g, cert) || !contains(three, cert.duke)) return false;
  }
  return true;
}

bool check_thm8(const MultiFlockGraph& g) {
  if (!m_dukes(g, 2).empty()) return true;
  const std::vector<ChickenId> three = m_dukes(g, 3);
  // First pecking cycle among 3-Dukes in lexicographic (d1, d2, d3) order.
  for (ChickenId d1 : three) {
    for (ChickenId d2 : three) {
      if (d2 == d1 || !g.pecks(d1, d2)) continue;
      for (ChickenId d3 : three) {
        if (d3 == d1 || d3 == d2 || !g.pecks(d2, d3) || !g.pecks(d3, d1)) continue;
        const FourthDuke fourth = theorem8_fourth_3duke(g, d1, d2, d3);
        return three.size() >= 4 && fourth.duke != d1 && fourth.duke != d2 &&
               fourth.duke != d3 && fourth.certificate.duke == fourth.duke &&
               certificate_valid(g, fourth.certificate) && contains(three, fourth.duke);
      }
    }
  }
  return true;  // no cyclic triple: hypotheses unsatisfied
}

bool check_lemma8(const MultiFlockGraph& g) {
  for (int m = 1; m <= 3; ++m) {
    for (ChickenId d : m_dukes(g, m)) {
      const ChickenId e = lemma8_non_eclipsed_duke(g, d, m);
      if (g.flock_of(e) != g.flock_of(d)) return false;
      if (!non_eclipsed(g, e) || !is_m_duke(g, e, m)) return false;
    }
  }
  return true;
}

bool check_lemma9(const MultiFlockGraph& g) {
  if (!transmitters(g).empty()) return true;
  static const std::array<std::string_view, 11> kLabels{
      "1", "1a", "1b", "2a-i", "2a-ii", "2b-i", "2b-ii", "3a", "3b", "3c-i", "3c-ii"};
  const std::vector<ChickenId> two = m_dukes(g, 2);
  const std::vector<ChickenId> three = m_dukes(g, 3);
  for (ChickenId d : two) {
    if (!non_eclipsed(g, d)) continue;
    const Lemma9Outcome out = lemma9_outcome(g, d);
    if (std::find(kLabels.begin(), kLabels.end(), out.case_label) == kLabels.end()) return false;
    if (out.witnesses.size() != out.certificates.size()) return false;
    if (!distinct(out.witnesses)) return false;
    int bound = 0;
    std::size_t expect = 0;
    const std::vector<ChickenId>* oracle_set = nullptr;
    switch (out.kind) {
      case Lemma9Outcome::Kind::PeckedByTwoDuke:
        bound = 2;
        expect = 1;
        oracle_set = &two;
        if (!g.pecks(out.witnesses.front(), d)) return false;
        break;
      case Lemma9Outcome::Kind::ThreeTwoDukes:
        bound = 2;
        expect = 3;
        oracle_set = &two;
        break;
      case Lemma9Outcome::Kind::FourThreeDukes:
        bound = 3;
        expect = 4;
        oracle_set = &three;
        break;
    }
    if (out.witnesses.size() != expect) return false;
    for (std::size_t k = 0; k < expect; ++k) {
      const DukeCertificate& cert = out.certificates[k];
      if (cert.duke != out.witnesses[k] || cert.bound != bound) return false;
      if (!certificate_valid(g, cert) || !contains(*oracle_set, cert.duke)) return false;
    }
  }
  return true;
}

bool check_thm10(const MultiFlockGraph& g) {
  if (g.flock_count() < 2) return true;
  (void)oracle_classification(g);  // raises TheoremViolationError on failure
  const Classification c = theorem10_classify(g);
  return classification_ok(g, c);
}

bool check_duke_king_bridge(const MultiFlockGraph& g) {
  if (!transmitters(g).empty()) return true;
  for (int m = 1; m <= 3; ++m) {
    const std::vector<ChickenId> dukes = m_dukes(g, m);
    const std::vector<ChickenId> kings = m_kings(g, m + 1);
    if (!std::includes(kings.begin(), kings.end(), dukes.begin(), dukes.end())) return false;
  }
  return true;
}

bool check_domination_antisym(const MultiFlockGraph& g) {
  for (FlockId i = 0; i < g.flock_count(); ++i) {
    for (FlockId j = i + 1; j < g.flock_count(); ++j) {
      // Brute-force both directions independently of flock_relation.
      bool i_dominates = false;
      bool j_dominates = false;
      for (ChickenId c = g.flock_begin(i); c < g.flock_end(i); ++c) {
        bool all = true;
        for (ChickenId t = g.flock_begin(j); t < g.flock_end(j); ++t) {
          if (!g.pecks(c, t)) all = false;
        }
        if (all) i_dominates = true;
      }
      for (ChickenId c = g.flock_begin(j); c < g.flock_end(j); ++c) {
        bool all = true;
        for (ChickenId t = g.flock_begin(i); t < g.flock_end(i); ++t) {
          if (!g.pecks(c, t)) all = false;
        }
        if (all) j_dominates = true;
      }
      if (i_dominates && j_dominates) return false;
      const FlockRelation rel = flock_relation(g, i, j);
      const bool consistent =
          (rel.kind == FlockRelationKind::FirstDominatesSecond && i_dominates && !j_dominates) ||
          (rel.kind == FlockRelationKind::SecondDominatesFirst && j_dominates && !i_dominates) ||
          (rel.kind == FlockRelationKind::Balanced && !i_dominates && !j_dominates);
      if (!consistent || (rel.kind == FlockRelationKind::Balanced) !=
                             rel.dominating_witnesses.empty()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "?";
}

TheoremId theorem_from_string(std::string_view name) {
  for (const auto& [key, candidate] : kTheoremNames) {
    if (candidate == name) return key;
  }
  throw UnknownTheoremError("unknown theorem id '" + std::string(name) + "'");
}

std::vector<std::string_view> all_theorem_names() {
  std::vector<std::string_view> names;
  for (const auto& [key, name] : kTheoremNames) names.push_back(name);
  return names;
}

bool verify_instance(TheoremId id, const MultiFlockGraph& g) {
  try {
    switch (id) {
      case TheoremId::Lemma1: return check_lemma1(g);
      case TheoremId::Cor2: return check_cor2(g);
      case TheoremId::Lemma3: return check_lemma3(g);
      case TheoremId::Thm4: return check_thm4(g);
      case TheoremId::Thm5: return check_thm5(g);
      case TheoremId::Thm6: return check_thm6(g);
      case TheoremId::Cor7: return check_cor7(g);
      case TheoremId::Thm8: return check_thm8(g);
      case TheoremId::Lemma8: return check_lemma8(g);
      case TheoremId::Lemma9: return check_lemma9(g);
      case TheoremId::Thm10: return check_thm10(g);
      case TheoremId::DukeKingBridge: return check_duke_king_bridge(g);
      case TheoremId::DominationAntisym: return check_domination_antisym(g);
    }
  } catch (const Error&) {
    // Any unexpected domain error inside a checker counts against the sweep.
    return false;
  }
  return false;
}

VerificationReport verify(TheoremId id, std::span<const int> sizes, int workers, int edge_cap) {
  const auto start = std::chrono::steady_clock::now();
  const OrientationRange range(std::vector<int>(sizes.begin(), sizes.end()), edge_cap);

  VerificationReport report;
  report.theorem = id;
  report.sizes.assign(sizes.begin(), sizes.end());
  report.instances_checked = range.size();

  workers = std::max(1, workers);
  const std::uint64_t total = range.size();
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

  std::vector<std::vector<Counterexample>> found(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / workers;
    for (std::uint64_t k = begin; k < end; ++k) {
      const MultiFlockGraph g = range.at(k);
      if (!verify_instance(id, g)) {
        found[static_cast<std::size_t>(w)].push_back(Counterexample{k, serialize(g)});
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }

  // Worker ranges are contiguous and ascending, so concatenation keeps the
  // counterexamples sorted by orientation index.
  for (auto& chunk : found) {
    for (auto& ce : chunk) report.counterexamples.push_back(std::move(ce));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace flock
