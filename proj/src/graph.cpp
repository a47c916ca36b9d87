#include "sq7/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sq7 {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_vertex(std::string label) {
  adj_.emplace_back();
  if (!labels_.empty() || !label.empty()) {
    labels_.resize(adj_.size() - 1);
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i].empty()) labels_[i] = std::to_string(i);
    labels_.push_back(label.empty() ? std::to_string(adj_.size() - 1) : std::move(label));
  }
  return order() - 1;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return;
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  auto& a = adj_[u];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= order())
      throw std::invalid_argument("induced: vertex out of range");
    pos[vertices[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : adj_[vertices[i]])
      if (pos[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), pos[w]);
    if (has_labels()) h.set_label(static_cast<int>(i), labels_[vertices[i]]);
  }
  return h;
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_.at(v);
}

void Graph::set_label(int v, std::string label) {
  if (labels_.empty()) {
    labels_.resize(adj_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] = std::to_string(i);
  }
  labels_.at(v) = std::move(label);
}

std::optional<int> Graph::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::string Graph::name(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

Graph square(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) h.add_edge(u, v);
      for (int w : g.neighbors(v))
        if (u < w) h.add_edge(u, w);
    }
  }
  if (g.has_labels())
    for (int v = 0; v < g.order(); ++v) h.set_label(v, g.label(v));
  return h;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_subcubic(const Graph& g) { return g.max_degree() <= 3; }

bool is_cubic(const Graph& g) {
  return g.order() > 0 && g.max_degree() == 3 && g.min_degree() == 3;
}

namespace {

// Extends a simple path from `start` using only vertices above `start`.
bool five_cycle_from(const Graph& g, int start, int cur, int depth,
                     std::vector<char>& on_path) {
  if (depth == 4) return g.has_edge(cur, start);
  for (int w : g.neighbors(cur)) {
    if (w <= start || on_path[w]) continue;
    on_path[w] = 1;
    bool found = five_cycle_from(g, start, w, depth + 1, on_path);
    on_path[w] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool has_five_cycle(const Graph& g) {
  std::vector<char> on_path(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    on_path[s] = 1;
    bool found = five_cycle_from(g, s, s, 0, on_path);
    on_path[s] = 0;
    if (found) return true;
  }
  return false;
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace sq7
