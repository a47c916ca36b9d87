#include "sq7/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "sq7/errors.hpp"

namespace sq7 {

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return "holds";
    case Verdict::Status::Counterexample: return "counterexample";
    case Verdict::Status::SampledPass: return "sampled-pass";
  }
  return "?";
}

namespace {

void check_inputs(const Graph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.order()) throw std::invalid_argument("size vector does not match graph order");
  if (g.order() > 64) throw std::invalid_argument("at most 64 vertices");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("list sizes must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int prefix_depth(const std::vector<int>& sizes) {
  // Enough tasks to balance threads; the first list is always {1..s_0}.
  return std::min<int>(static_cast<int>(sizes.size()), 3);
}

Verdict direct_exhaustive(const Graph& g, const std::vector<int>& sizes,
                          const std::vector<ListConstraint>& constraints) {
  const ListColorer solver(g);
  const auto prefixes = canonical_prefixes(sizes, constraints, prefix_depth(sizes));
  const long ntasks = static_cast<long>(prefixes.size());
  std::vector<std::uint64_t> counts(ntasks, 0);
  std::vector<std::optional<ListAssignment>> failures(ntasks);
  std::atomic<long> first_fail{std::numeric_limits<long>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < ntasks; ++t) {
    if (t > first_fail.load(std::memory_order_relaxed)) continue;
    std::uint64_t n = 0;
    enumerate_canonical_extensions(sizes, constraints, prefixes[t], [&](const ListAssignment& L) {
      ++n;
      if (solver.colorable(L.lists.data())) return true;
      failures[t] = L;
      return false;
    });
    counts[t] = n;
    if (failures[t]) {
      long cur = first_fail.load();
      while (t < cur && !first_fail.compare_exchange_weak(cur, t)) {
      }
    }
  }

  Verdict v;
  v.method = "exhaustive";
  const long fail = first_fail.load();
  for (long t = 0; t < ntasks && t <= fail; ++t) v.checked += counts[t];
  if (fail != std::numeric_limits<long>::max()) {
    v.status = Verdict::Status::Counterexample;
    v.witness = failures[fail];
  }
  return v;
}

Verdict sampled(const Graph& g, const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                const ChoosabilityOptions& opts) {
  const ListColorer solver(g);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int palette = std::min(total, opts.palette_cap);
  if (palette > 63) throw std::invalid_argument("palette exceeds 63 colours");
  for (int s : sizes)
    if (s > palette) throw std::invalid_argument("list size exceeds sampling palette");
  std::vector<int> colors(palette);
  std::iota(colors.begin(), colors.end(), 1);

  constexpr int kMaxRedraws = 10'000;
  auto draw = [&](std::uint64_t trial, std::uint64_t& rejected) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(trial)));
    ListAssignment L;
    L.lists.assign(sizes.size(), 0);
    std::vector<int> pick;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
      for (std::size_t v = 0; v < sizes.size(); ++v) {
        pick.clear();
        std::sample(colors.begin(), colors.end(), std::back_inserter(pick), sizes[v], rng);
        ColorSet m = 0;
        for (int c : pick) m |= ColorSet{1} << c;
        L.lists[v] = m;
      }
      if (satisfies(L, constraints)) return L;
      ++rejected;
    }
    throw std::runtime_error("constraints are unsatisfiable on the sampling palette");
  };

  const long trials = static_cast<long>(opts.trials);
  std::atomic<long> first_fail{std::numeric_limits<long>::max()};
  std::uint64_t rejected = 0;

#pragma omp parallel for schedule(static) reduction(+ : rejected)
  for (long t = 0; t < trials; ++t) {
    if (t > first_fail.load(std::memory_order_relaxed)) continue;
    std::uint64_t local = 0;
    ListAssignment L = draw(static_cast<std::uint64_t>(t), local);
    rejected += local;
    if (!solver.colorable(L.lists.data())) {
      long cur = first_fail.load();
      while (t < cur && !first_fail.compare_exchange_weak(cur, t)) {
      }
    }
  }

  Verdict v;
  v.method = "sampled";
  SampleStats st;
  st.seed = opts.seed;
  st.palette = palette;
  const long fail = first_fail.load();
  if (fail == std::numeric_limits<long>::max()) {
    v.status = Verdict::Status::SampledPass;
    st.trials = opts.trials;
    st.rejected_draws = rejected;
  } else {
    // Replay serially up to the failing trial so the statistics are deterministic.
    std::uint64_t rej = 0;
    for (long t = 0; t < fail; ++t) draw(static_cast<std::uint64_t>(t), rej);
    v.status = Verdict::Status::Counterexample;
    v.witness = draw(static_cast<std::uint64_t>(fail), rej);
    st.trials = static_cast<std::uint64_t>(fail) + 1;
    st.rejected_draws = rej;
    st.uncolorable = 1;
  }
  v.checked = st.trials;
  v.stats = st;
  return v;
}

struct Part {
  std::vector<int> vertices;  // in g
  std::vector<int> sizes;
  std::vector<ListConstraint> constraints;  // remapped to part positions
};

/// Components of g - sep, each sorted; constraints remapped into one part.
std::vector<Part> split(const Graph& g, const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                        const std::vector<int>& sep, Part& sep_part) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  for (int s : sep) comp[s] = -2;
  std::vector<Part> parts;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    Part p;
    std::vector<int> stack = {v};
    comp[v] = static_cast<int>(parts.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      p.vertices.push_back(x);
      for (int y : g.neighbors(x))
        if (comp[y] == -1) {
          comp[y] = comp[v];
          stack.push_back(y);
        }
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    parts.push_back(std::move(p));
  }
  sep_part.vertices = sep;
  auto place = [&](Part& p) {
    for (int v : p.vertices) p.sizes.push_back(sizes[v]);
  };
  place(sep_part);
  for (auto& p : parts) place(p);
  for (const auto& k : constraints) {
    const int home = comp[k.vertices.front()];
    for (int v : k.vertices)
      if (comp[v] != home) throw std::invalid_argument("constraint spans the separator");
    Part& p = home == -2 ? sep_part : parts[home];
    ListConstraint r = k;
    for (int& v : r.vertices)
      v = static_cast<int>(std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
    p.constraints.push_back(r);
  }
  return parts;
}

struct SideResult {
  std::vector<std::uint64_t> masks;          // distinct blocked-colouring masks
  std::vector<ListAssignment> examples;      // first assignment per mask
  std::uint64_t checked = 0;
};

/// For each canonical list assignment of `part` (colours 1..named fixed),
/// the set of separator colourings it cannot be extended from.
SideResult side_masks(const Graph& g, const Part& part, const std::vector<int>& sep,
                      const std::vector<std::vector<int>>& phis, int named) {
  const int k = static_cast<int>(part.vertices.size());
  const Graph h = g.induced(part.vertices);
  const ListColorer solver(h);
  // forbid[v][i]: colours removed from part vertex v under colouring i.
  std::vector<std::vector<ColorSet>> forbid(k, std::vector<ColorSet>(phis.size(), 0));
  for (int v = 0; v < k; ++v)
    for (std::size_t s = 0; s < sep.size(); ++s)
      if (g.has_edge(part.vertices[v], sep[s]))
        for (std::size_t i = 0; i < phis.size(); ++i) forbid[v][i] |= ColorSet{1} << phis[i][s];

  const auto prefixes = canonical_prefixes(part.sizes, part.constraints, prefix_depth(part.sizes), named);
  const long ntasks = static_cast<long>(prefixes.size());
  std::vector<SideResult> local(ntasks);

#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < ntasks; ++t) {
    SideResult& r = local[t];
    std::set<std::uint64_t> seen;
    ColorSet reduced[64];
    enumerate_canonical_extensions(part.sizes, part.constraints, prefixes[t], [&](const ListAssignment& L) {
      ++r.checked;
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < phis.size(); ++i) {
        for (int v = 0; v < k; ++v) reduced[v] = L.lists[v] & ~forbid[v][i];
        if (!solver.colorable(reduced)) mask |= std::uint64_t{1} << i;
      }
      if (seen.insert(mask).second) {
        r.masks.push_back(mask);
        r.examples.push_back(L);
      }
      return true;
    });
  }

  SideResult out;
  std::set<std::uint64_t> seen;
  for (auto& r : local) {
    out.checked += r.checked;
    for (std::size_t i = 0; i < r.masks.size(); ++i)
      if (seen.insert(r.masks[i]).second) {
        out.masks.push_back(r.masks[i]);
        out.examples.push_back(r.examples[i]);
      }
  }
  return out;
}

/// Index per side whose masks OR to `full`, or empty.
bool cover(const std::vector<SideResult>& sides, std::size_t i, std::uint64_t acc, std::uint64_t full,
           std::vector<std::size_t>& choice) {
  if (i == sides.size()) return acc == full;
  for (std::size_t j = 0; j < sides[i].masks.size(); ++j) {
    choice[i] = j;
    if (cover(sides, i + 1, acc | sides[i].masks[j], full, choice)) return true;
  }
  return false;
}

std::vector<std::uint64_t> maximal(const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : masks) {
    bool dominated = false;
    for (std::uint64_t o : masks)
      if (o != m && (o | m) == o) dominated = true;
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

Verdict check_choosability_serial(const Graph& g, const std::vector<int>& sizes,
                                  const std::vector<ListConstraint>& constraints) {
  check_inputs(g, sizes);
  const ListColorer solver(g);
  Verdict v;
  v.method = "exhaustive";
  enumerate_canonical_lists(sizes, constraints, [&](const ListAssignment& L) {
    ++v.checked;
    if (solver.colorable(L.lists.data())) return true;
    v.status = Verdict::Status::Counterexample;
    v.witness = L;
    return false;
  });
  return v;
}

Verdict check_choosability_separated(const Graph& g, const std::vector<int>& sizes,
                                     const std::vector<ListConstraint>& constraints,
                                     const std::vector<int>& separator) {
  check_inputs(g, sizes);
  Part sep;
  const std::vector<Part> parts = split(g, sizes, constraints, separator, sep);
  const Graph gs = g.induced(separator);

  Verdict v;
  v.method = "exhaustive-separator";
  v.separator = separator;
  std::optional<ListAssignment> witness;

  enumerate_canonical_lists(sep.sizes, sep.constraints, [&](const ListAssignment& LS) {
    // Proper colourings of the separator from LS.
    std::vector<std::vector<int>> phis;
    std::vector<int> cur(separator.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == separator.size()) {
        phis.push_back(cur);
        return;
      }
      for (ColorSet m = LS.lists[i]; m; m &= m - 1) {
        int c = std::countr_zero(m);
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j)
          if (cur[j] == c && gs.has_edge(static_cast<int>(i), static_cast<int>(j))) ok = false;
        if (!ok) continue;
        cur[i] = c;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    if (phis.size() > 64) throw SizeBound("separator admits more than 64 colourings");
    ColorSet used = 0;
    for (ColorSet m : LS.lists) used |= m;
    const int named = used ? 63 - std::countl_zero(used) : 0;

    std::vector<SideResult> sides;
    for (const Part& p : parts) {
      SideResult r = side_masks(g, p, separator, phis, named);
      v.checked += r.checked;
      sides.push_back(std::move(r));
    }
    const std::uint64_t full = phis.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << phis.size()) - 1;
    std::vector<SideResult> reduced = sides;
    for (auto& r : reduced) r.masks = maximal(r.masks);
    std::vector<std::size_t> choice(parts.size(), 0);
    if (!cover(reduced, 0, 0, full, choice)) return true;

    ListAssignment W;
    W.lists.assign(g.order(), 0);
    for (std::size_t i = 0; i < separator.size(); ++i) W.lists[separator[i]] = LS.lists[i];
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::uint64_t m = reduced[p].masks[choice[p]];
      const auto& all = sides[p].masks;
      const std::size_t at = std::find(all.begin(), all.end(), m) - all.begin();
      const ListAssignment& L = sides[p].examples[at];
      for (std::size_t i = 0; i < parts[p].vertices.size(); ++i) W.lists[parts[p].vertices[i]] = L.lists[i];
    }
    witness = W;
    return false;
  });

  if (witness) {
    v.status = Verdict::Status::Counterexample;
    v.witness = witness;
  }
  return v;
}

std::optional<std::vector<int>> find_small_separator(const Graph& g, const std::vector<int>& sizes) {
  const int n = g.order();
  std::optional<std::vector<int>> best;
  double best_cost = std::numeric_limits<double>::infinity();
  auto consider = [&](std::vector<int> sep) {
    Part sp;
    std::vector<Part> parts;
    try {
      parts = split(g, sizes, {}, sep, sp);
    } catch (const std::exception&) {
      return;
    }
    if (parts.size() < 2) return;
    const double outer = estimate_canonical_count(sp.sizes);
    int named = 0;
    for (int s : sp.sizes) named += s;
    double inner = 0;
    for (const auto& p : parts) inner += estimate_canonical_count(p.sizes, named);
    const double cost = outer * inner;
    if (cost < best_cost) {
      best_cost = cost;
      best = sep;
    }
  };
  for (int a = 0; a < n; ++a) consider({a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) consider({a, b});
  return best;
}

Verdict check_choosability(const Graph& g, const std::vector<int>& sizes,
                           const std::vector<ListConstraint>& constraints, const ChoosabilityOptions& opts) {
  check_inputs(g, sizes);
  if (opts.mode == CheckMode::Sampled) return sampled(g, sizes, constraints, opts);
  if (estimate_canonical_count(sizes) <= opts.exhaustive_limit) return direct_exhaustive(g, sizes, constraints);
  if (auto sep = find_small_separator(g, sizes)) {
    try {
      return check_choosability_separated(g, sizes, constraints, *sep);
    } catch (const std::invalid_argument&) {
    }
  }
  throw SizeBound("canonical enumeration exceeds the exhaustive limit and no small separator applies");
}

}  // namespace sq7
