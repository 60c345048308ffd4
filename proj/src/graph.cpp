#include "graphprompt/graph.hpp"

#include <algorithm>

#include "graphprompt/errors.hpp"

namespace graphprompt {

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::from_edges(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                        MatrixF features) {
  std::vector<std::vector<int>> adj(num_nodes);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes) {
      throw ContractError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") with " + std::to_string(num_nodes) +
                          " nodes");
    }
    if (u == v) continue;  // simple graphs only
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.num_nodes = num_nodes;
  g.csr_offsets.resize(num_nodes + 1, 0);
  for (int v = 0; v < num_nodes; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.csr_offsets[v + 1] = g.csr_offsets[v] + static_cast<int>(row.size());
  }
  g.csr_targets.reserve(g.csr_offsets[num_nodes]);
  for (int v = 0; v < num_nodes; ++v) {
    g.csr_targets.insert(g.csr_targets.end(), adj[v].begin(), adj[v].end());
  }
  g.features = std::move(features);
  return g;
}

void Graph::validate() const {
  if (static_cast<int>(csr_offsets.size()) != num_nodes + 1) {
    throw ContractError("csr_offsets size mismatch");
  }
  if (csr_offsets.front() != 0 ||
      csr_offsets.back() != static_cast<int>(csr_targets.size())) {
    throw ContractError("csr_offsets endpoints inconsistent with csr_targets");
  }
  for (int v = 0; v < num_nodes; ++v) {
    const auto nb = neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int u = nb[i];
      if (u < 0 || u >= num_nodes) throw ContractError("neighbor index out of range");
      if (u == v) throw ContractError("self-loop at node " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= u) {
        throw ContractError("csr row not strictly ascending at node " + std::to_string(v));
      }
      if (!has_edge(u, v)) {
        throw ContractError("adjacency not symmetric: (" + std::to_string(v) + ", " +
                            std::to_string(u) + ")");
      }
    }
  }
  if (features.rows() != num_nodes || features.cols() < 1) {
    throw ContractError("feature matrix must be num_nodes x d with d >= 1");
  }
  if (!node_labels.empty() && static_cast<int>(node_labels.size()) != num_nodes) {
    throw ContractError("node_labels size mismatch");
  }
}

}  // namespace graphprompt
