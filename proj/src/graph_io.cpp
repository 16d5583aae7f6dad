#include "nmc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nmc/errors.hpp"

namespace nmc {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph load_edge_list(std::istream& in, DirectedPolicy policy) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> ordered;  // as-read pairs, for kReject
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b)) throw ParseError("expected two node tokens", line_number);
    if (tokens >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_number);
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) continue;
    edges.emplace_back(u, v);
    if (policy == DirectedPolicy::kReject) ordered.insert(pair_key(u, v));
  }

  if (policy == DirectedPolicy::kReject) {
    for (auto [u, v] : edges) {
      if (!ordered.contains(pair_key(v, u))) {
        throw Error("directed input rejected: edge " + labels[u] + " -> " + labels[v] +
                    " has no reverse");
      }
    }
  }

  Graph g = Graph::from_edges(static_cast<NodeId>(labels.size()), edges, std::move(labels));
  return g;
}

Graph load_edge_list_file(const std::string& path, DirectedPolicy policy) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in, policy);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.undirected_edges()) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

}  // namespace nmc
