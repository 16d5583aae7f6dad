#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nmc/metric.hpp"

namespace nmc {

struct ClusterConfig {
  enum class Init { kFarthestFirst, kRandom };

  std::uint32_t k = 2;
  Init init = Init::kFarthestFirst;
  std::uint64_t seed = 1;
  std::uint32_t max_iter = 100;
  double tol = 1e-12;  // |cost_t - cost_{t+1}| stop threshold
  int threads = 1;
};

struct RepairEvent {
  std::uint32_t iteration;
  std::uint32_t community;
  NodeId node;
};

/// Output of partition_k: a total assignment into k non-empty communities,
/// the unit-norm centers, and the cost trace of the iteration.
struct Partition {
  std::vector<std::uint32_t> assignment;        // node -> community
  std::vector<std::vector<NodeId>> communities; // sorted member lists
  std::vector<std::vector<double>> centers;     // k unit vectors of length n
  double cost = 0.0;
  std::uint32_t iterations = 0;
  std::uint64_t seed = 0;
  std::vector<double> cost_history;  // cost after each assign+recenter pass
  std::vector<RepairEvent> repairs;  // empty-community repairs, if any
};

/// Gonzalez farthest-first traversal. First center is a seeded uniform pick,
/// each next center maximizes distance to the nearest chosen one, ties to the
/// lowest node index. Throws std::invalid_argument when k is 0 or > n.
std::vector<NodeId> farthest_first(const MetricSpace& space, std::uint32_t k,
                                   std::uint64_t seed, int threads = 1);

/// Same traversal with the first center fixed (used by equivariance tests and
/// callers that manage their own seeding).
std::vector<NodeId> farthest_first_from(const MetricSpace& space, std::uint32_t k,
                                        NodeId first, int threads = 1);

/// Alternating assign / spherical-recenter iteration started from the given
/// center nodes. Refuses a MetricSpace that is neither certified nor
/// validated (UncertifiedMetricError).
Partition partition_from_centers(const MetricSpace& space, std::span<const NodeId> center_nodes,
                                 const ClusterConfig& cfg);

/// Farthest-first (or seeded-random) initialization followed by
/// partition_from_centers.
Partition partition_k(const MetricSpace& space, const ClusterConfig& cfg);

/// Σ_i Σ_{x∈C_i} (1 - cos(x̂, z_i)) recomputed from scratch; the quantity the
/// iteration monotonically decreases.
double partition_cost(const MetricSpace& space, std::span<const std::uint32_t> assignment,
                      const std::vector<std::vector<double>>& centers);

enum class SelectionCriterion { kModularity, kConductance };

struct KDiagnostics {
  std::uint32_t k = 0;
  std::optional<double> score;  // criterion value of the best restart
  double cost = 0.0;
  std::uint32_t iterations = 0;
  std::uint64_t seed = 0;  // seed of the winning restart
};

struct KSelection {
  std::uint32_t best_k = 0;
  Partition best;
  std::vector<KDiagnostics> per_k;
};

/// Runs partition_k for every k in [k_min, k_max] with `restarts` seeded
/// restarts each, scores the best partition per k with the criterion
/// (modularity: higher wins; conductance: lower volume-weighted mean wins)
/// and returns the winner; score ties go to the smallest k.
KSelection select_k(const MetricSpace& space, std::uint32_t k_min, std::uint32_t k_max,
                    SelectionCriterion criterion, std::uint32_t restarts, std::uint64_t seed,
                    std::uint32_t max_iter = 100, int threads = 1);

}  // namespace nmc
