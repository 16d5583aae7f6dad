#include "nmc/graph.hpp"

#include <algorithm>
#include <queue>

#include "nmc/errors.hpp"

namespace nmc {

Graph Graph::from_edges(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
  Graph g;
  g.n_ = n;
  if (labels.empty()) {
    labels.reserve(n);
    for (NodeId v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else if (labels.size() != n) {
    throw Error("label count does not match node count");
  }
  g.labels_ = std::move(labels);
  for (NodeId v = 0; v < n; ++v) {
    if (!g.label_to_id_.emplace(g.labels_[v], v).second) {
      throw Error("duplicate node label: " + g.labels_[v]);
    }
  }

  std::vector<std::size_t> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) continue;
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }

  // Sort and deduplicate each row, then compact the CSR arrays.
  std::vector<NodeId> compact;
  compact.reserve(g.adj_.size());
  std::vector<std::size_t> new_offsets(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(begin, end);
    auto last = std::unique(begin, end);
    compact.insert(compact.end(), begin, last);
    new_offsets[v + 1] = compact.size();
  }
  g.offsets_ = std::move(new_offsets);
  g.adj_ = std::move(compact);
  g.m_ = g.adj_.size() / 2;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::common_neighbors(NodeId u, NodeId v) const {
  auto a = neighbors(u);
  auto b = neighbors(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::optional<NodeId> Graph::find_label(const std::string& label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> Graph::undirected_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(m_);
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void validate(const Graph& g) {
  const NodeId n = g.num_nodes();
  std::size_t total_degree = 0;
  for (NodeId u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    total_degree += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) throw Error("neighbor out of range");
      if (nb[i] == u) throw Error("self-loop at node " + std::to_string(u));
      if (i > 0 && nb[i - 1] >= nb[i]) {
        throw Error("neighbor list of node " + std::to_string(u) + " not strictly ascending");
      }
      if (!g.has_edge(nb[i], u)) {
        throw Error("asymmetric adjacency between " + std::to_string(u) + " and " +
                    std::to_string(nb[i]));
      }
    }
  }
  if (total_degree != 2 * g.num_edges()) throw Error("degree sum does not equal 2m");
  for (NodeId v = 0; v < n; ++v) {
    auto found = g.find_label(g.label(v));
    if (!found || *found != v) throw Error("label map is not a bijection");
  }
}

std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId s) {
  if (s >= g.num_nodes()) throw Error("bfs source out of range");
  std::vector<std::int32_t> dist(g.num_nodes(), kUnreachable);
  std::queue<NodeId> queue;
  dist[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

Components connected_components(const Graph& g) {
  Components out;
  const NodeId n = g.num_nodes();
  out.component.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    const NodeId id = out.count++;
    NodeId size = 0;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      out.component[u] = id;
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

}  // namespace nmc
