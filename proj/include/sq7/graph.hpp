#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sq7 {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Labels are optional; when present every vertex has one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }

  int add_vertex(std::string label = {});
  /// Ignores duplicates. Throws std::invalid_argument on loops or bad indices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  /// Edges (u,v) with u<v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(const std::vector<int>& vertices) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const;
  void set_label(int v, std::string label);
  std::optional<int> find_label(const std::string& label) const;
  /// Label if present, otherwise the decimal index.
  std::string name(int v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

/// u ~ v in the result iff 1 <= dist_G(u,v) <= 2. Labels are kept.
Graph square(const Graph& g);

/// -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);
bool is_subcubic(const Graph& g);
bool is_cubic(const Graph& g);

/// True iff g contains a cycle of length exactly 5 (not necessarily induced).
bool has_five_cycle(const Graph& g);

/// Length of a shortest cycle, or std::nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace sq7
