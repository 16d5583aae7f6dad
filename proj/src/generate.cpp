#include "nmc/generate.hpp"

#include <stdexcept>

#include "nmc/random.hpp"

namespace nmc {

Graph make_clique(NodeId q) {
  if (q < 1) throw std::invalid_argument("clique size must be >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < q; ++u) {
    for (NodeId v = u + 1; v < q; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(q, edges);
}

Graph make_path(NodeId n) {
  if (n < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_ring(NodeId n) {
  if (n < 3) throw std::invalid_argument("ring needs at least 3 nodes");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_gnp(NodeId n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs at least 1 node");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp probability outside [0,1]");
  rng::Engine eng(rng::sub_seed(seed, "gnp"));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng::uniform01(eng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

PlantedPartition make_planted_partition(NodeId blocks, NodeId block_size, double p_in,
                                        double p_out, std::uint64_t seed) {
  if (blocks < 1 || block_size < 1) throw std::invalid_argument("blocks and size must be >= 1");
  if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0) {
    throw std::invalid_argument("probabilities outside [0,1]");
  }
  const NodeId n = blocks * block_size;
  PlantedPartition out;
  out.block.resize(n);
  for (NodeId v = 0; v < n; ++v) out.block[v] = v / block_size;

  rng::Engine eng(rng::sub_seed(seed, "planted"));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double p = out.block[u] == out.block[v] ? p_in : p_out;
      if (rng::uniform01(eng) < p) edges.emplace_back(u, v);
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

}  // namespace nmc
