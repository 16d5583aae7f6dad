#pragma once

#include <cstdint>
#include <vector>

#include "nmc/graph.hpp"

namespace nmc {

Graph make_clique(NodeId q);
Graph make_path(NodeId n);
Graph make_ring(NodeId n);

/// Erdős–Rényi G(n, p); identical graph for identical (n, p, seed).
Graph make_gnp(NodeId n, double p, std::uint64_t seed);

struct PlantedPartition {
  Graph graph;
  std::vector<NodeId> block;  // ground-truth block per node
};

/// `blocks` blocks of `block_size` nodes; edge probability p_in within a
/// block, p_out across blocks. Node v belongs to block v / block_size.
PlantedPartition make_planted_partition(NodeId blocks, NodeId block_size, double p_in,
                                        double p_out, std::uint64_t seed);

}  // namespace nmc
