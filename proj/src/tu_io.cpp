#include "graphprompt/tu_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "graphprompt/errors.hpp"

namespace graphprompt {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Trailing blank lines are common in published copies; ignore them.
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) {
    lines.pop_back();
  }
  return lines;
}

long parse_int(std::string_view s, const fs::path& file, size_t line_no) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) {
    throw FormatError(file.string() + ":" + std::to_string(line_no) + ": empty field");
  }
  s = s.substr(b, e - b + 1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError(file.string() + ":" + std::to_string(line_no) +
                      ": expected integer, got '" + std::string(s) + "'");
  }
  return value;
}

double parse_real(std::string_view s, const fs::path& file, size_t line_no) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) {
    throw FormatError(file.string() + ":" + std::to_string(line_no) + ": empty field");
  }
  s = s.substr(b, e - b + 1);
  char* end = nullptr;
  std::string buf(s);
  const double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) {
    throw FormatError(file.string() + ":" + std::to_string(line_no) +
                      ": expected decimal, got '" + buf + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(const std::string& line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.emplace_back(line.data() + start, line.size() - start);
      break;
    }
    out.emplace_back(line.data() + start, pos - start);
    start = pos + 1;
  }
  return out;
}

// Remaps arbitrary integer labels to contiguous 0-based ids (sorted order).
std::map<long, int> contiguous_map(const std::vector<long>& raw) {
  std::vector<long> uniq(raw);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::map<long, int> m;
  for (size_t i = 0; i < uniq.size(); ++i) m[uniq[i]] = static_cast<int>(i);
  return m;
}

}  // namespace

GraphCollection load_tu_dataset(const std::string& directory, const std::string& name) {
  const fs::path dir(directory);
  const fs::path a_path = dir / (name + "_A.txt");
  const fs::path ind_path = dir / (name + "_graph_indicator.txt");
  const fs::path glab_path = dir / (name + "_graph_labels.txt");
  const fs::path nlab_path = dir / (name + "_node_labels.txt");
  const fs::path attr_path = dir / (name + "_node_attributes.txt");

  for (const auto& p : {a_path, ind_path, glab_path}) {
    if (!fs::exists(p)) throw IngestError("missing mandatory dataset file " + p.string());
  }

  // Node -> graph assignment (1-indexed lines).
  const auto ind_lines = read_lines(ind_path);
  const int total_nodes = static_cast<int>(ind_lines.size());
  std::vector<long> raw_graph_of(total_nodes);
  for (int i = 0; i < total_nodes; ++i) {
    raw_graph_of[i] = parse_int(ind_lines[i], ind_path, i + 1);
  }
  const auto graph_map = contiguous_map(raw_graph_of);
  const int num_graphs = static_cast<int>(graph_map.size());
  std::vector<int> graph_of(total_nodes);
  std::vector<int> graph_size(num_graphs, 0);
  std::vector<int> local_id(total_nodes);
  for (int i = 0; i < total_nodes; ++i) {
    const int g = graph_map.at(raw_graph_of[i]);
    graph_of[i] = g;
    local_id[i] = graph_size[g]++;
  }

  // Graph labels.
  const auto glab_lines = read_lines(glab_path);
  if (static_cast<int>(glab_lines.size()) != num_graphs) {
    throw FormatError(glab_path.string() + ": expected " + std::to_string(num_graphs) +
                      " labels, found " + std::to_string(glab_lines.size()));
  }
  std::vector<long> raw_glabels(num_graphs);
  for (int i = 0; i < num_graphs; ++i) {
    raw_glabels[i] = parse_int(glab_lines[i], glab_path, i + 1);
  }
  const auto glabel_map = contiguous_map(raw_glabels);

  // Optional node labels.
  std::vector<int> node_labels;
  int node_class_count = 0;
  if (fs::exists(nlab_path)) {
    const auto lines = read_lines(nlab_path);
    if (static_cast<int>(lines.size()) != total_nodes) {
      throw FormatError(nlab_path.string() + ": expected " + std::to_string(total_nodes) +
                        " labels, found " + std::to_string(lines.size()));
    }
    std::vector<long> raw(total_nodes);
    for (int i = 0; i < total_nodes; ++i) raw[i] = parse_int(lines[i], nlab_path, i + 1);
    const auto m = contiguous_map(raw);
    node_class_count = static_cast<int>(m.size());
    node_labels.resize(total_nodes);
    for (int i = 0; i < total_nodes; ++i) node_labels[i] = m.at(raw[i]);
  }

  // Features: attributes > label one-hot > constant 1.
  MatrixF features;
  if (fs::exists(attr_path)) {
    const auto lines = read_lines(attr_path);
    if (static_cast<int>(lines.size()) != total_nodes) {
      throw FormatError(attr_path.string() + ": expected " + std::to_string(total_nodes) +
                        " rows, found " + std::to_string(lines.size()));
    }
    const int dim = static_cast<int>(split_commas(lines[0]).size());
    features.resize(total_nodes, dim);
    for (int i = 0; i < total_nodes; ++i) {
      const auto fields = split_commas(lines[i]);
      if (static_cast<int>(fields.size()) != dim) {
        throw FormatError(attr_path.string() + ":" + std::to_string(i + 1) +
                          ": expected " + std::to_string(dim) + " values, found " +
                          std::to_string(fields.size()));
      }
      for (int j = 0; j < dim; ++j) {
        features(i, j) = static_cast<float>(parse_real(fields[j], attr_path, i + 1));
      }
    }
  } else if (!node_labels.empty()) {
    features = MatrixF::Zero(total_nodes, node_class_count);
    for (int i = 0; i < total_nodes; ++i) features(i, node_labels[i]) = 1.0f;
  } else {
    features = MatrixF::Ones(total_nodes, 1);
  }

  // Edges, grouped per graph in local indices.
  std::vector<std::vector<std::pair<int, int>>> edges(num_graphs);
  const auto a_lines = read_lines(a_path);
  for (size_t ln = 0; ln < a_lines.size(); ++ln) {
    const auto fields = split_commas(a_lines[ln]);
    if (fields.size() != 2) {
      throw FormatError(a_path.string() + ":" + std::to_string(ln + 1) +
                        ": expected 'i, j'");
    }
    const long u1 = parse_int(fields[0], a_path, ln + 1);
    const long v1 = parse_int(fields[1], a_path, ln + 1);
    if (u1 < 1 || u1 > total_nodes || v1 < 1 || v1 > total_nodes) {
      throw FormatError(a_path.string() + ":" + std::to_string(ln + 1) +
                        ": edge references nonexistent node (" + std::to_string(u1) +
                        ", " + std::to_string(v1) + ") with " +
                        std::to_string(total_nodes) + " nodes");
    }
    const int u = static_cast<int>(u1 - 1);
    const int v = static_cast<int>(v1 - 1);
    if (graph_of[u] != graph_of[v]) {
      throw FormatError(a_path.string() + ":" + std::to_string(ln + 1) +
                        ": edge spans two graphs (node assigned to graph " +
                        std::to_string(graph_of[u] + 1) + " linked to graph " +
                        std::to_string(graph_of[v] + 1) + ")");
    }
    edges[graph_of[u]].emplace_back(local_id[u], local_id[v]);
  }

  // Assemble per-graph structures.
  GraphCollection coll;
  coll.name = name;
  coll.feature_dim = static_cast<int>(features.cols());
  coll.node_class_count = node_class_count;
  coll.graph_class_count = static_cast<int>(glabel_map.size());
  coll.graphs.resize(num_graphs);
  std::vector<int> filled(num_graphs, 0);
  std::vector<MatrixF> feats(num_graphs);
  std::vector<std::vector<int>> nl(num_graphs);
  for (int g = 0; g < num_graphs; ++g) {
    feats[g].resize(graph_size[g], features.cols());
    if (!node_labels.empty()) nl[g].resize(graph_size[g]);
  }
  for (int i = 0; i < total_nodes; ++i) {
    const int g = graph_of[i];
    feats[g].row(local_id[i]) = features.row(i);
    if (!node_labels.empty()) nl[g][local_id[i]] = node_labels[i];
    ++filled[g];
  }
  for (int g = 0; g < num_graphs; ++g) {
    coll.graphs[g] = Graph::from_edges(graph_size[g], edges[g], std::move(feats[g]));
    coll.graphs[g].node_labels = std::move(nl[g]);
    coll.graphs[g].graph_label = glabel_map.at(raw_glabels[g]);
  }
  return coll;
}

void write_tu_dataset(const GraphCollection& collection, const std::string& directory,
                      const std::string& name) {
  const fs::path dir(directory);
  fs::create_directories(dir);
  std::ofstream a(dir / (name + "_A.txt"));
  std::ofstream ind(dir / (name + "_graph_indicator.txt"));
  std::ofstream glab(dir / (name + "_graph_labels.txt"));
  std::ofstream attr(dir / (name + "_node_attributes.txt"));
  const bool have_node_labels =
      !collection.graphs.empty() && collection.graphs[0].has_node_labels();
  std::ofstream nlab;
  if (have_node_labels) nlab.open(dir / (name + "_node_labels.txt"));

  int base = 0;
  for (int g = 0; g < collection.size(); ++g) {
    const Graph& graph = collection.graphs[g];
    glab << graph.graph_label << "\n";
    for (int v = 0; v < graph.num_nodes; ++v) {
      ind << (g + 1) << "\n";
      for (int u : graph.neighbors(v)) {
        a << (base + v + 1) << ", " << (base + u + 1) << "\n";
      }
      for (int j = 0; j < graph.features.cols(); ++j) {
        if (j) attr << ", ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(graph.features(v, j)));
        attr << buf;
      }
      attr << "\n";
      if (have_node_labels) nlab << graph.node_labels[v] << "\n";
    }
    base += graph.num_nodes;
  }
}

DatasetStats dataset_stats(const GraphCollection& collection) {
  DatasetStats s;
  s.num_graphs = collection.size();
  long nodes = 0, edges = 0;
  for (const Graph& g : collection.graphs) {
    nodes += g.num_nodes;
    edges += g.num_edges();
  }
  if (s.num_graphs > 0) {
    s.avg_nodes = static_cast<double>(nodes) / s.num_graphs;
    s.avg_edges = static_cast<double>(edges) / s.num_graphs;
  }
  s.feature_dim = collection.feature_dim;
  s.node_class_count = collection.node_class_count;
  s.graph_class_count = collection.graph_class_count;
  return s;
}

}  // namespace graphprompt
