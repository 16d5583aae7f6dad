#pragma once

#include <cstdint>
#include <vector>

#include "nmc/graph.hpp"

namespace nmc {

struct PathLengthResult {
  double value = 0.0;       // mean hop count over reachable unordered pairs
  bool sampled = false;     // estimated from a source sample instead of all-pairs
  std::uint32_t sources = 0;
  bool disconnected = false;  // computed on the largest component only
  std::uint64_t pairs = 0;    // pair count behind the mean
};

/// Mean shortest-path length of the largest connected component. Exact BFS
/// from every node up to `exact_threshold` nodes, seeded uniform source
/// sampling above it. Throws std::invalid_argument when n < 2.
PathLengthResult average_path_length(const Graph& g, std::size_t exact_threshold = 10000,
                                     std::uint32_t sample_sources = 512,
                                     std::uint64_t seed = 1, int threads = 1);

/// t_v / C(deg v, 2); 0 when deg < 2.
double clustering_coefficient(const Graph& g, NodeId v);

struct AverageClustering {
  double value = 0.0;
  std::uint64_t counted = 0;   // nodes with degree >= 2
  std::uint64_t excluded = 0;  // degree < 2, left out of the mean
};

AverageClustering average_clustering(const Graph& g, int threads = 1);

/// Deterministic reference graph with g's node set and edge count, built per
/// connected component: a star backbone centered on the component's
/// highest-degree node (the n-1-edge graph with the smallest average
/// distance), then the remaining edge budget added greedily by triangle gain,
/// preferring g's own unused edges, ties by lexicographic endpoints.
Graph build_ocn_reference(const Graph& g);

struct ComplexityProfile {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double avg_path_length = 0.0;
  double avg_clustering = 0.0;
  double dcc = 0.0;                     // |E(G) ∩ E(G*)| / m
  std::uint64_t reference_overlap = 0;  // shared edges with G*
  bool sampled = false;
  bool disconnected = false;
};

/// Full detectability profile. Throws std::invalid_argument when the graph
/// has no edges or fewer than 2 nodes.
ComplexityProfile dcc(const Graph& g, std::size_t exact_threshold = 10000,
                      std::uint32_t sample_sources = 512, std::uint64_t seed = 1,
                      int threads = 1);

}  // namespace nmc
