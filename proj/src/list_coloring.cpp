#include "sq7/list_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sq7 {

ListAssignment ListAssignment::from_sets(const std::vector<std::vector<int>>& sets) {
  ListAssignment L;
  for (const auto& s : sets) {
    ColorSet m = 0;
    for (int c : s) {
      if (c < 0 || c > 63) throw std::invalid_argument("colour outside 0..63");
      m |= ColorSet{1} << c;
    }
    L.lists.push_back(m);
  }
  return L;
}

std::vector<std::vector<int>> ListAssignment::to_sets() const {
  std::vector<std::vector<int>> out;
  for (ColorSet m : lists) {
    std::vector<int> s;
    for (int c = 0; c < 64; ++c)
      if (m >> c & 1) s.push_back(c);
    out.push_back(s);
  }
  return out;
}

int ListAssignment::size(int v) const { return std::popcount(lists.at(v)); }

std::string ListAssignment::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : to_sets()) {
    if (!first) os << ' ';
    first = false;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
  }
  return os.str();
}

namespace {

bool check_constraint(const ListConstraint& k, const ColorSet* lists) {
  if (k.kind == ListConstraint::Kind::ListsDiffer) return lists[k.vertices[0]] != lists[k.vertices[1]];
  ColorSet u = 0;
  for (int v : k.vertices) u |= lists[v];
  return std::popcount(u) >= k.bound;
}

}  // namespace

bool satisfies(const ListAssignment& L, const std::vector<ListConstraint>& constraints) {
  for (const auto& k : constraints)
    if (!check_constraint(k, L.lists.data())) return false;
  return true;
}

bool is_proper_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order() || static_cast<int>(L.lists.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (c[v] < 0 || c[v] > 63 || !(L.lists[v] >> c[v] & 1)) return false;
    for (int w : g.neighbors(v))
      if (c[w] == c[v]) return false;
  }
  return true;
}

ListColorer::ListColorer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
  if (n_ > 64) throw std::invalid_argument("ListColorer supports at most 64 vertices");
  for (int v = 0; v < n_; ++v)
    for (int w : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << w;
}

bool ListColorer::search(ColorSet* dom, std::uint64_t open, int* out) const {
  if (open == 0) return true;
  int best = -1, best_size = 65;
  for (std::uint64_t m = open; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int s = std::popcount(dom[v]);
    if (s < best_size) {
      best = v;
      best_size = s;
      if (s <= 1) break;
    }
  }
  if (best_size == 0) return false;
  const std::uint64_t rest = open & ~(std::uint64_t{1} << best);
  const std::uint64_t nbrs = adj_[best] & rest;
  ColorSet saved[64];
  for (ColorSet cs = dom[best]; cs; cs &= cs - 1) {
    const int c = std::countr_zero(cs);
    const ColorSet bit = ColorSet{1} << c;
    bool dead = false;
    for (std::uint64_t m = nbrs; m; m &= m - 1) {
      int w = std::countr_zero(m);
      saved[w] = dom[w];
      dom[w] &= ~bit;
      if (dom[w] == 0) dead = true;
    }
    if (!dead && search(dom, rest, out)) {
      if (out) out[best] = c;
      return true;
    }
    for (std::uint64_t m = nbrs; m; m &= m - 1) {
      int w = std::countr_zero(m);
      dom[w] = saved[w];
    }
  }
  return false;
}

bool ListColorer::colorable(const ColorSet* lists, int* out) const {
  ColorSet dom[64];
  std::uint64_t open = 0;
  for (int v = 0; v < n_; ++v) {
    dom[v] = lists[v];
    if (dom[v] == 0) return false;
    open |= std::uint64_t{1} << v;
  }
  return search(dom, open, out);
}

std::optional<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& L) {
  if (static_cast<int>(L.lists.size()) != g.order()) throw std::invalid_argument("list count mismatch");
  if (g.order() == 0) return Coloring{};
  ListColorer solver(g);
  Coloring c(g.order(), -1);
  if (!solver.colorable(L.lists.data(), c.data())) return std::nullopt;
  return c;
}

std::optional<Coloring> greedy_color(const Graph& g, const std::vector<int>& order, const ListAssignment& L) {
  Coloring c(g.order(), -1);
  for (int v : order) {
    ColorSet avail = L.lists.at(v);
    for (int w : g.neighbors(v))
      if (c[w] >= 0) avail &= ~(ColorSet{1} << c[w]);
    if (avail == 0) return std::nullopt;
    c[v] = std::countr_zero(avail);
  }
  return c;
}

SdrResult hall_sdr(const std::vector<std::vector<int>>& sets) {
  std::map<int, int> index;
  for (const auto& s : sets)
    for (int x : s) index.emplace(x, 0);
  std::vector<int> elems;
  for (auto& [x, i] : index) {
    i = static_cast<int>(elems.size());
    elems.push_back(x);
  }
  const int k = static_cast<int>(sets.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int x : sets[i]) adj[i].push_back(index[x]);
  std::vector<int> match_elem(elems.size(), -1), match_set(k, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int s) -> bool {
    for (int e : adj[s]) {
      if (visited[e]) continue;
      visited[e] = 1;
      if (match_elem[e] < 0 || augment(match_elem[e])) {
        match_elem[e] = s;
        match_set[s] = e;
        return true;
      }
    }
    return false;
  };
  SdrResult r;
  for (int s = 0; s < k; ++s) {
    visited.assign(elems.size(), 0);
    if (augment(s)) continue;
    // Sets reachable from s by alternating paths have too few neighbours.
    std::vector<char> in_s(k, 0), seen_e(elems.size(), 0);
    std::vector<int> stack = {s};
    in_s[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : adj[x]) {
        if (seen_e[e]) continue;
        seen_e[e] = 1;
        int y = match_elem[e];
        if (y >= 0 && !in_s[y]) {
          in_s[y] = 1;
          stack.push_back(y);
        }
      }
    }
    for (int i = 0; i < k; ++i)
      if (in_s[i]) r.violating.push_back(i);
    return r;
  }
  r.found = true;
  for (int s = 0; s < k; ++s) r.representatives.push_back(elems[match_set[s]]);
  return r;
}

namespace {

struct Enumerator {
  const std::vector<int>& sizes;
  const std::function<bool(const ListAssignment&)>& visit;
  std::vector<std::vector<const ListConstraint*>> due;  // constraints checked after vertex i
  ListAssignment L;
  bool stop = false;

  Enumerator(const std::vector<int>& s, const std::vector<ListConstraint>& cons,
             const std::function<bool(const ListAssignment&)>& v)
      : sizes(s), visit(v), due(s.size()) {
    for (const auto& k : cons) {
      int last = *std::max_element(k.vertices.begin(), k.vertices.end());
      if (last < 0 || last >= static_cast<int>(s.size()))
        throw std::invalid_argument("constraint references a missing vertex");
      due[last].push_back(&k);
    }
    L.lists.assign(s.size(), 0);
  }

  void rec(std::size_t i, int m) {
    if (stop) return;
    if (i == sizes.size()) {
      if (!visit(L)) stop = true;
      return;
    }
    const int s = sizes[i];
    for (int j = std::min(s, m); j >= 0 && !stop; --j) {
      const int fresh = s - j;
      if (m + fresh > 63) continue;
      ColorSet fresh_bits = 0;
      for (int c = m + 1; c <= m + fresh; ++c) fresh_bits |= ColorSet{1} << c;
      // Subsets of {1..m} of size j, via Gosper's hack on bits 0..m-1.
      if (j == 0) {
        place(i, fresh_bits, m + fresh);
        continue;
      }
      std::uint64_t x = (std::uint64_t{1} << j) - 1;
      const std::uint64_t limit = std::uint64_t{1} << m;
      while (x < limit && !stop) {
        place(i, (x << 1) | fresh_bits, m + fresh);
        std::uint64_t u = x & (~x + 1);
        std::uint64_t v = x + u;
        if (v == 0) break;
        x = v + (((v ^ x) / u) >> 2);
      }
    }
  }

  void place(std::size_t i, ColorSet list, int m) {
    L.lists[i] = list;
    for (const ListConstraint* k : due[i])
      if (!check_constraint(*k, L.lists.data())) return;
    rec(i + 1, m);
  }
};

}  // namespace

std::vector<CanonicalPrefix> canonical_prefixes(const std::vector<int>& sizes,
                                                const std::vector<ListConstraint>& constraints, int depth,
                                                int named) {
  depth = std::clamp(depth, 0, static_cast<int>(sizes.size()));
  std::vector<int> head(sizes.begin(), sizes.begin() + depth);
  std::vector<ListConstraint> inside;
  for (const auto& k : constraints)
    if (*std::max_element(k.vertices.begin(), k.vertices.end()) < depth) inside.push_back(k);
  std::vector<CanonicalPrefix> out;
  enumerate_canonical_lists(head, inside, [&](const ListAssignment& L) {
    CanonicalPrefix p;
    p.partial.lists.assign(sizes.size(), 0);
    ColorSet all = 0;
    for (int i = 0; i < depth; ++i) {
      p.partial.lists[i] = L.lists[i];
      all |= L.lists[i];
    }
    p.depth = depth;
    p.max_color = std::max(named, all ? 63 - std::countl_zero(all) : 0);
    out.push_back(std::move(p));
    return true;
  }, named);
  return out;
}

void enumerate_canonical_extensions(const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                                    const CanonicalPrefix& prefix,
                                    const std::function<bool(const ListAssignment&)>& visit) {
  std::vector<ListConstraint> rest;
  for (const auto& k : constraints)
    if (*std::max_element(k.vertices.begin(), k.vertices.end()) >= prefix.depth) rest.push_back(k);
  Enumerator e(sizes, rest, visit);
  for (int i = 0; i < prefix.depth; ++i) e.L.lists[i] = prefix.partial.lists[i];
  e.rec(prefix.depth, prefix.max_color);
}

void enumerate_canonical_lists(const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                               const std::function<bool(const ListAssignment&)>& visit, int named) {
  for (int s : sizes)
    if (s < 0) throw std::invalid_argument("negative list size");
  Enumerator e(sizes, constraints, visit);
  e.rec(0, named);
}

std::uint64_t count_canonical_lists(const std::vector<int>& sizes,
                                    const std::vector<ListConstraint>& constraints, int named) {
  std::uint64_t count = 0;
  enumerate_canonical_lists(sizes, constraints, [&](const ListAssignment&) {
    ++count;
    return true;
  }, named);
  return count;
}

double estimate_canonical_count(const std::vector<int>& sizes, int named) {
  std::map<int, double> ways = {{named, 1.0}};
  for (int s : sizes) {
    std::map<int, double> next;
    for (auto [m, w] : ways)
      for (int j = 0; j <= std::min(s, m); ++j) {
        double binom = 1;
        for (int k = 0; k < j; ++k) binom = binom * (m - k) / (k + 1);
        next[m + s - j] += w * binom;
      }
    ways.swap(next);
  }
  double total = 0;
  for (auto [m, w] : ways) total += w;
  return total;
}

}  // namespace sq7
