// Command-line front end: analyze, classify, verify, gen, dot.
//
// Exit codes: 0 on success (and when a sweep finds no counterexample), 1 on
// usage or parse errors, 2 when a counterexample, certificate failure or
// oracle disagreement is found. Timing goes to stderr so stdout stays
// byte-identical across runs.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flockgraph/constructive.hpp"
#include "flockgraph/dukes.hpp"
#include "flockgraph/enumerate.hpp"
#include "flockgraph/text_io.hpp"
#include "flockgraph/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw flock::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw flock::Error("cannot write '" + path + "'");
  out << text;
}

std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> sizes;
  std::stringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      sizes.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw flock::Error("bad size list '" + spec + "'");
    }
  }
  if (sizes.empty()) throw flock::Error("bad size list '" + spec + "'");
  return sizes;
}

std::string set_text(const std::vector<flock::ChickenId>& ids) {
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(ids[k]);
  }
  return out + "}";
}

int run_analyze(const std::string& path, int max_m) {
  const flock::MultiFlockGraph g = flock::parse_flock_text(read_file(path));
  std::cout << "graph: flocks";
  for (int s : g.sizes()) std::cout << ' ' << s;
  std::cout << " (" << g.chicken_count() << " chickens, " << g.arcs().size() << " arcs)\n";

  if (g.flock_count() > 1) {
    std::cout << "flock relations:\n";
    for (flock::FlockId i = 0; i < g.flock_count(); ++i) {
      for (flock::FlockId j = i + 1; j < g.flock_count(); ++j) {
        const flock::FlockRelation rel = flock::flock_relation(g, i, j);
        std::cout << "  " << i << " vs " << j << ": ";
        switch (rel.kind) {
          case flock::FlockRelationKind::Balanced:
            std::cout << "balanced\n";
            break;
          case flock::FlockRelationKind::FirstDominatesSecond:
            std::cout << "flock " << i << " dominates (witnesses "
                      << set_text(rel.dominating_witnesses) << ")\n";
            break;
          case flock::FlockRelationKind::SecondDominatesFirst:
            std::cout << "flock " << j << " dominates (witnesses "
                      << set_text(rel.dominating_witnesses) << ")\n";
            break;
        }
      }
    }
  }

  const flock::DukeProfile profile = flock::duke_profile(g, max_m);
  std::cout << "duke profile (max m = " << max_m << "):\n";
  std::cout << "  transmitters: " << set_text(profile.transmitters) << '\n';
  for (int m = 1; m <= max_m; ++m) {
    std::cout << "  " << m << "-dukes: " << set_text(profile.dukes(m)) << '\n';
  }
  for (int m = 1; m <= max_m; ++m) {
    std::cout << "  " << m << "-kings: " << set_text(profile.kings(m)) << '\n';
  }
  return kExitOk;
}

// Validates every certificate of a classification; broken ones are a defect
// worth the counterexample exit code.
bool certificates_ok(const flock::MultiFlockGraph& g, const flock::Classification& c) {
  for (const flock::DukeCertificate& cert : c.certificates) {
    if (auto defect = flock::certificate_error(g, cert)) {
      std::cerr << "certificate for chicken " << cert.duke << " invalid: " << *defect << '\n';
      return false;
    }
  }
  return true;
}

int run_classify(const std::string& path, const std::string& mode) {
  const flock::MultiFlockGraph g = flock::parse_flock_text(read_file(path));
  const bool want_constructive = mode == "constructive" || mode == "both";
  const bool want_oracle = mode == "oracle" || mode == "both";

  std::optional<flock::Classification> constructive;
  if (want_constructive) {
    constructive = flock::theorem10_classify(g);
    std::cout << "constructive: " << flock::to_string(constructive->kind)
              << " witnesses=" << set_text(constructive->witnesses);
    if (constructive->used_fallback) std::cout << " (fallback scan)";
    std::cout << '\n';
    if (!certificates_ok(g, *constructive)) return kExitCounterexample;
  }

  std::optional<flock::OracleClassification> oracle;
  if (want_oracle) {
    oracle = flock::oracle_classification(g);
    std::cout << "oracle: OneDuke=" << (oracle->has_one_duke ? "yes" : "no")
              << " ThreeTwoDukes=" << (oracle->has_three_two_dukes ? "yes" : "no")
              << " FourThreeDukes=" << (oracle->has_four_three_dukes ? "yes" : "no") << '\n';
    std::cout << "oracle sets: transmitters=" << set_text(oracle->one_duke_witnesses)
              << " 2-dukes=" << set_text(oracle->two_dukes)
              << " 3-dukes=" << set_text(oracle->three_dukes) << '\n';
  }

  if (constructive && oracle) {
    bool agree = false;
    switch (constructive->kind) {
      case flock::ClassificationKind::OneDuke: agree = oracle->has_one_duke; break;
      case flock::ClassificationKind::ThreeTwoDukes: agree = oracle->has_three_two_dukes; break;
      case flock::ClassificationKind::FourThreeDukes: agree = oracle->has_four_three_dukes; break;
    }
    if (!agree) {
      std::cerr << "constructive outcome is not satisfiable per the oracle\n";
      return kExitCounterexample;
    }
    std::cout << "agreement: ok\n";
  }
  return kExitOk;
}

int run_verify(const std::string& theorem, const std::string& sizes_spec, int parallel) {
  const flock::TheoremId id = flock::theorem_from_string(theorem);
  const std::vector<int> sizes = parse_sizes(sizes_spec);
  const flock::VerificationReport report = flock::verify(id, sizes, parallel);

  std::cout << flock::to_string(report.theorem) << " sizes=";
  for (std::size_t k = 0; k < report.sizes.size(); ++k) {
    if (k) std::cout << ',';
    std::cout << report.sizes[k];
  }
  std::cout << ": checked " << report.instances_checked << " instances, "
            << report.counterexamples.size() << " counterexamples\n";
  for (const flock::Counterexample& ce : report.counterexamples) {
    std::cout << "counterexample orientation=" << ce.orientation_index << ":\n" << ce.graph;
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", report.elapsed.count());
  std::cerr << "elapsed: " << elapsed << "s\n";
  return report.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

int run_gen(const std::string& sizes_spec, std::uint64_t seed, const std::string& out_path) {
  const std::vector<int> sizes = parse_sizes(sizes_spec);
  const flock::MultiFlockGraph g = flock::random_graph(sizes, seed);
  write_output(out_path, flock::serialize(g));
  return kExitOk;
}

int run_dot(const std::string& path, const std::string& out_path, bool annotate, int max_m) {
  const flock::MultiFlockGraph g = flock::parse_flock_text(read_file(path));
  if (annotate) {
    const flock::DukeProfile profile = flock::duke_profile(g, max_m);
    write_output(out_path, flock::to_dot(g, &profile));
  } else {
    write_output(out_path, flock::to_dot(g));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-flock chicken graphs: dukes, kings and exhaustive verification"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::string mode = "both";
  std::string theorem;
  std::string sizes_spec;
  std::uint64_t seed = 0;
  int max_m = flock::kDefaultMaxM;
  int parallel = 1;
  bool annotate = false;

  CLI::App* analyze = app.add_subcommand("analyze", "print the duke profile and flock relations");
  analyze->add_option("file", file, "graph in flock text format")->required();
  analyze->add_option("--max-m", max_m, "largest duke/king bound to report")
      ->check(CLI::PositiveNumber);

  CLI::App* classify = app.add_subcommand("classify", "run the classification theorem");
  classify->add_option("file", file, "graph in flock text format")->required();
  classify->add_option("--mode", mode, "oracle, constructive or both")
      ->check(CLI::IsMember({"oracle", "constructive", "both"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustively verify a theorem");
  verify_cmd->add_option("theorem", theorem, "theorem id (e.g. THM10, LEMMA9)")->required();
  verify_cmd->add_option("--sizes", sizes_spec, "flock sizes, comma separated")->required();
  verify_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("gen", "write a seeded random graph");
  gen->add_option("--sizes", sizes_spec, "flock sizes, comma separated")->required();
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("-o,--output", out_path, "output file (stdout when absent)");

  CLI::App* dot = app.add_subcommand("dot", "export the graph as DOT");
  dot->add_option("file", file, "graph in flock text format")->required();
  dot->add_option("-o,--output", out_path, "output file (stdout when absent)");
  dot->add_flag("--annotate", annotate, "label chickens with their least duke bound");
  dot->add_option("--max-m", max_m, "largest duke bound to annotate")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(file, max_m);
    if (app.got_subcommand(classify)) return run_classify(file, mode);
    if (app.got_subcommand(verify_cmd)) return run_verify(theorem, sizes_spec, parallel);
    if (app.got_subcommand(gen)) return run_gen(sizes_spec, seed, out_path);
    if (app.got_subcommand(dot)) return run_dot(file, out_path, annotate, max_m);
  } catch (const flock::TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << '\n' << flock::serialize(e.graph);
    return kExitCounterexample;
  } catch (const flock::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
