#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmc/graph.hpp"

namespace nmc {

/// One boundary scan of a community: node count, internal edges, cut edges,
/// volume, and per-member internal/external degrees (aligned with `members`).
struct CommunityStats {
  std::uint64_t n_s = 0;
  std::uint64_t m_s = 0;    // internal edges
  std::uint64_t c_s = 0;    // boundary (cut) edges
  std::uint64_t vol_s = 0;  // Σ deg(v), = 2 m_s + c_s
  std::vector<NodeId> members;
  std::vector<NodeId> internal_degree;
  std::vector<NodeId> external_degree;
};

CommunityStats community_stats(const Graph& g, std::span<const NodeId> members);

/// Which degree population the FOMD median is taken over.
enum class MedianScope { kSubset, kGraph };

/// All thirteen per-community measures. Ratios that can lose their
/// denominator are optional; a disengaged value means "undefined", never a
/// crash. Integral or always-defined measures are plain fields.
struct ScoreCard {
  double internal_density = 0.0;  // 0 when n_s == 1
  std::int64_t edges_inside = 0;
  double average_degree = 0.0;
  double fomd = 0.0;
  double tpr = 0.0;  // 0 when n_s == 1
  double expansion = 0.0;
  std::optional<double> cut_ratio;     // undefined when n_s == n
  std::optional<double> conductance;   // undefined when min volume is 0
  std::optional<double> normalized_cut;
  double max_odf = 0.0;  // isolated members contribute 0
  double avg_odf = 0.0;
  double flake_odf = 0.0;
  std::optional<double> modularity_contribution;  // undefined when m == 0
};

/// Canonical measure names in the fixed CSV column order.
std::span<const std::string> measure_names();

double measure_value(const ScoreCard& card, const std::string& name, bool* defined);

/// Q = Σ_c [m_c/m - (vol_c/2m)²]. Throws UndefinedMeasureError when m = 0 and
/// std::invalid_argument when the communities are not a total partition of V.
double modularity(const Graph& g, const std::vector<std::vector<NodeId>>& communities);

/// φ(S) = c_s / min(vol S, vol S^c). Throws DegenerateSetError for S empty or
/// S = V, UndefinedMeasureError when the smaller volume is 0.
double conductance(const Graph& g, std::span<const NodeId> members);

ScoreCard score_community(const Graph& g, std::span<const NodeId> members,
                          MedianScope scope = MedianScope::kSubset);

struct PartitionScores {
  std::vector<ScoreCard> communities;
  std::optional<double> modularity;
  std::optional<double> mean_conductance;  // volume-weighted over defined communities
};

PartitionScores score_partition(const Graph& g, const std::vector<std::vector<NodeId>>& communities,
                                MedianScope scope = MedianScope::kSubset);

}  // namespace nmc
