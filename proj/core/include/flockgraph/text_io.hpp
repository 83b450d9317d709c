#pragma once

#include <string>
#include <string_view>

#include "flockgraph/dukes.hpp"
#include "flockgraph/graph.hpp"

namespace flock {

// The flock text format: a "flocks s1 s2 ... sn" header, then one
// "arc u v" line per cross-flock pair (u pecks v). '#' starts a comment line;
// blank lines are ignored. Canonical output orders arcs ascending by
// (min(u,v), max(u,v)) so parse(serialize(g)) is the identity.

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}

  int line;
};

MultiFlockGraph parse_flock_text(std::string_view text);

std::string serialize(const MultiFlockGraph& g);

// DOT export: one shaded cluster per flock, one node per chicken, one edge
// per arc. With a profile, node labels show the least m for which the
// chicken is an m-Duke ("-" if none up to the profile's max).
std::string to_dot(const MultiFlockGraph& g, const DukeProfile* annotations = nullptr);

}  // namespace flock
