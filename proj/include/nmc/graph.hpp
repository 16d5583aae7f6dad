#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nmc {

using NodeId = std::uint32_t;

inline constexpr std::int32_t kUnreachable = -1;

/// Immutable undirected simple graph in compressed-sparse-row form.
/// Invariants: adjacency symmetric, neighbor lists sorted ascending, no
/// self-loops or duplicate edges, sum of degrees equals 2m.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes arbitrary undirected edge input: adds both directions,
  /// drops self-loops and duplicates, sorts neighbor lists. `labels` is
  /// either empty (node ids are used as labels) or one label per node.
  static Graph from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
                          std::vector<std::string> labels = {});

  NodeId num_nodes() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  NodeId degree(NodeId v) const { return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(NodeId u, NodeId v) const;

  /// |N(u) ∩ N(v)|, by merging the two sorted neighbor lists.
  std::size_t common_neighbors(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find_label(const std::string& label) const;

  /// Every edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> undirected_edges() const;

 private:
  NodeId n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_to_id_;
};

/// Throws Error if a structural invariant does not hold. Used by tests and
/// after ingestion.
void validate(const Graph& g);

/// Exact hop counts from s; kUnreachable for nodes in other components.
std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId s);

struct Components {
  std::vector<NodeId> component;  // node -> component index, by discovery order
  std::vector<NodeId> sizes;
  NodeId count = 0;
};

Components connected_components(const Graph& g);

}  // namespace nmc
