#pragma once

#include <iosfwd>
#include <string>

#include "nmc/graph.hpp"

namespace nmc {

enum class DirectedPolicy {
  kSymmetrize,  // directed input becomes undirected
  kReject,      // error unless every (u,v) has its reverse
};

/// Parses whitespace-separated "u v" lines; '#' lines and blank lines are
/// ignored (SNAP-compatible). Node tokens may be arbitrary strings; internal
/// ids are assigned in first-seen order. Throws ParseError on malformed lines
/// and Error when policy is kReject and the input is asymmetric.
Graph load_edge_list(std::istream& in, DirectedPolicy policy = DirectedPolicy::kSymmetrize);

Graph load_edge_list_file(const std::string& path,
                          DirectedPolicy policy = DirectedPolicy::kSymmetrize);

/// Canonical form: one "u v" line per edge with u < v (internal order),
/// original labels.
void serialize_edge_list(const Graph& g, std::ostream& out);

}  // namespace nmc
