#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphprompt {

using MatrixF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Simple undirected graph in CSR form with dense node features.
//
// Invariants (enforced by from_edges and validate):
//   - adjacency symmetric, deduplicated, no self-loops
//   - csr_targets strictly ascending within each row
//   - features has num_nodes rows and at least one column
struct Graph {
  int num_nodes = 0;
  std::vector<int> csr_offsets;  // size num_nodes + 1
  std::vector<int> csr_targets;
  MatrixF features;
  std::vector<int> node_labels;  // empty when the dataset carries none
  int graph_label = -1;          // -1 when absent

  int degree(int v) const { return csr_offsets[v + 1] - csr_offsets[v]; }

  std::span<const int> neighbors(int v) const {
    return {csr_targets.data() + csr_offsets[v],
            csr_targets.data() + csr_offsets[v + 1]};
  }

  bool has_edge(int u, int v) const;

  int num_edges() const { return static_cast<int>(csr_targets.size()) / 2; }

  bool has_node_labels() const { return !node_labels.empty(); }

  // Builds a canonical graph from an arbitrary edge list: symmetrizes,
  // drops self-loops, deduplicates, sorts each row.
  static Graph from_edges(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                          MatrixF features);

  // Throws ContractError if any invariant is violated.
  void validate() const;
};

struct GraphCollection {
  std::vector<Graph> graphs;
  std::string name;
  int feature_dim = 0;
  int node_class_count = 0;   // 0 when node labels are absent
  int graph_class_count = 0;  // 0 when graph labels are absent

  int size() const { return static_cast<int>(graphs.size()); }
};

}  // namespace graphprompt
