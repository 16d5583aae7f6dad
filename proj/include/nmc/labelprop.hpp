#pragma once

#include <cstdint>
#include <vector>

#include "nmc/graph.hpp"

namespace nmc {

struct LabelPropagationResult {
  std::vector<std::uint32_t> labels;             // node -> compact community index
  std::vector<std::vector<NodeId>> communities;  // sorted member lists
  std::uint32_t rounds = 0;
  bool converged = false;  // every node's label is a mode of its neighborhood
};

/// Asynchronous label propagation: seeded random node order each round,
/// neighborhood-majority updates in place, ties broken by a seeded uniform
/// pick among the maximal labels. Stops at a fixed point or after max_rounds.
LabelPropagationResult label_propagation(const Graph& g, std::uint64_t seed,
                                         std::uint32_t max_rounds = 100);

}  // namespace nmc
