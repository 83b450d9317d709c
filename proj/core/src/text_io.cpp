#include "flockgraph/text_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace flock {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

}  // namespace

MultiFlockGraph parse_flock_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int header_line = 0;
  std::vector<int> sizes;
  std::vector<Arc> arcs;
  std::vector<int> flock_of;  // rebuilt incrementally for per-line checks
  std::vector<char> covered;
  int total = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    const std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "flocks") {
      if (header_line) throw ParseError(line_no, "duplicate 'flocks' header");
      if (toks.size() < 2) throw ParseError(line_no, "'flocks' needs at least one size");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const int s = parse_int(toks[k], line_no, "a flock size");
        if (s < 1) throw ParseError(line_no, "flock sizes must be positive, got " + toks[k]);
        sizes.push_back(s);
        for (int c = 0; c < s; ++c) flock_of.push_back(static_cast<int>(k) - 1);
        total += s;
      }
      covered.assign(static_cast<std::size_t>(total) * total, 0);
      header_line = line_no;
    } else if (toks[0] == "arc") {
      if (!header_line) throw ParseError(line_no, "'arc' before the 'flocks' header");
      if (toks.size() != 3) throw ParseError(line_no, "'arc' needs exactly two chicken ids");
      const int u = parse_int(toks[1], line_no, "a chicken id");
      const int v = parse_int(toks[2], line_no, "a chicken id");
      if (u < 0 || u >= total || v < 0 || v >= total) {
        throw ParseError(line_no, "chicken id out of range (graph has " + std::to_string(total) +
                                      " chickens)");
      }
      if (flock_of[static_cast<std::size_t>(u)] == flock_of[static_cast<std::size_t>(v)]) {
        throw ParseError(line_no, "arc joins two chickens of flock " +
                                      std::to_string(flock_of[static_cast<std::size_t>(u)]));
      }
      char& mark = covered[static_cast<std::size_t>(std::min(u, v)) * total + std::max(u, v)];
      if (mark) {
        throw ParseError(line_no, "pair {" + std::to_string(std::min(u, v)) + ", " +
                                      std::to_string(std::max(u, v)) +
                                      "} is oriented more than once");
      }
      mark = 1;
      arcs.push_back(Arc{u, v});
    } else {
      throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!header_line) throw ParseError(line_no, "missing 'flocks' header");

  // Per-line checks rule out everything except uncovered pairs, which are a
  // whole-document defect and report the end of input.
  try {
    return MultiFlockGraph::build(std::move(sizes), arcs);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string serialize(const MultiFlockGraph& g) {
  std::ostringstream out;
  out << "flocks";
  for (int s : g.sizes()) out << ' ' << s;
  out << '\n';
  for (const Arc& a : g.arcs()) {
    out << "arc " << a.from << ' ' << a.to << '\n';
  }
  return out.str();
}

std::string to_dot(const MultiFlockGraph& g, const DukeProfile* annotations) {
  std::ostringstream out;
  out << "digraph flockgraph {\n";
  out << "  node [shape=circle];\n";
  for (FlockId f = 0; f < g.flock_count(); ++f) {
    out << "  subgraph cluster_" << f << " {\n";
    out << "    style=filled;\n";
    out << "    fillcolor=\"#e6e6e6\";\n";
    out << "    label=\"flock " << f << "\";\n";
    for (ChickenId c = g.flock_begin(f); c < g.flock_end(f); ++c) {
      std::string label = std::to_string(c);
      if (annotations != nullptr) {
        label = "-";
        for (int m = 1; m <= annotations->max_m; ++m) {
          const auto& dukes = annotations->dukes(m);
          if (std::binary_search(dukes.begin(), dukes.end(), c)) {
            label = std::to_string(m);
            break;
          }
        }
      }
      out << "    c" << c << " [label=\"" << label << "\"];\n";
    }
    out << "  }\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  c" << a.from << " -> c" << a.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flock
