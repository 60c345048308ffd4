#pragma once

#include <string>

#include "graphprompt/graph.hpp"

namespace graphprompt {

// Loads a dataset in the TU benchmark text format from `directory`:
//   <name>_A.txt               "i, j" per line, 1-indexed directed half-edges
//   <name>_graph_indicator.txt line n = graph id of node n
//   <name>_graph_labels.txt    one integer per graph
//   <name>_node_labels.txt     optional, one integer per node
//   <name>_node_attributes.txt optional, comma-separated decimals per node
//
// Node features are the attribute rows when present, else a one-hot of the
// node labels, else a constant 1.0 scalar. Self-loops are dropped, duplicate
// edges merged, and all class ids remapped to contiguous 0-based integers.
GraphCollection load_tu_dataset(const std::string& directory, const std::string& name);

// Writes a collection back out in the same format (features go to
// <name>_node_attributes.txt). Used by round-trip tests and data export.
void write_tu_dataset(const GraphCollection& collection, const std::string& directory,
                      const std::string& name);

struct DatasetStats {
  int num_graphs = 0;
  double avg_nodes = 0.0;
  double avg_edges = 0.0;
  int feature_dim = 0;
  int node_class_count = 0;
  int graph_class_count = 0;
};

DatasetStats dataset_stats(const GraphCollection& collection);

}  // namespace graphprompt
