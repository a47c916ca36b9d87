#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sq7/catalog.hpp"
#include "sq7/choosability.hpp"
#include "sq7/corpus.hpp"
#include "sq7/errors.hpp"
#include "sq7/formats.hpp"
#include "sq7/lemmas.hpp"
#include "sq7/list_coloring.hpp"

using namespace sq7;

namespace {

// Oracle: try every colour tuple from the lists.
bool brute_colorable(const Graph& g, const ListAssignment& L) {
  const int n = g.order();
  std::vector<std::vector<int>> sets = L.to_sets();
  std::vector<int> c(n);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) {
      for (auto [a, b] : g.edges())
        if (c[a] == c[b]) return false;
      return true;
    }
    for (int x : sets[v]) {
      c[v] = x;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Oracle: SDR by trying every injective choice.
bool brute_sdr(const std::vector<std::vector<int>>& sets) {
  std::set<int> used;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == sets.size()) return true;
    for (int x : sets[i]) {
      if (used.count(x)) continue;
      used.insert(x);
      if (rec(i + 1)) return true;
      used.erase(x);
    }
    return false;
  };
  return rec(0);
}

// Oracle: number of renaming classes of assignments with the given sizes
// over palette {1..s}, s = sum of sizes, by minimising over all renamings.
// Least image of an assignment under all renamings of colours 1..s.
std::vector<ColorSet> renaming_class(const std::vector<ColorSet>& cur, const std::vector<std::vector<int>>& perms) {
  std::vector<ColorSet> best;
  for (const auto& p : perms) {
    std::vector<ColorSet> img(cur.size(), 0);
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t c = 1; c <= p.size(); ++c)
        if (cur[i] >> c & 1) img[i] |= ColorSet{1} << p[c - 1];
    if (best.empty() || img < best) best = img;
  }
  return best;
}

std::vector<std::vector<int>> colour_perms(int s) {
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return perms;
}

// Every renaming class of assignments drawn from colours 1..sum(sizes).
std::set<std::vector<ColorSet>> brute_classes(const std::vector<int>& sizes) {
  const int s = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<std::vector<ColorSet>> choices(sizes.size());
  for (std::size_t v = 0; v < sizes.size(); ++v)
    for (ColorSet m = 0; m < (ColorSet{1} << s); ++m)
      if (std::popcount(m) == sizes[v]) choices[v].push_back(m << 1);
  const auto perms = colour_perms(s);
  std::set<std::vector<ColorSet>> classes;
  std::vector<ColorSet> cur(sizes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == sizes.size()) {
      classes.insert(renaming_class(cur, perms));
      return;
    }
    for (ColorSet m : choices[v]) {
      cur[v] = m;
      rec(v + 1);
    }
  };
  rec(0);
  return classes;
}

ListAssignment lists(std::vector<std::vector<int>> s) { return ListAssignment::from_sets(s); }

std::vector<Graph> atlas() {
  std::ifstream in(SQ7_TEST_DATA "/graphs_upto7.g6");
  REQUIRE(in.good());
  return read_graph6(in);
}

}  // namespace

TEST_CASE("solver examples") {
  CHECK_FALSE(solve_list_coloring(complete_graph(2), lists({{1}, {1}})).has_value());
  CHECK_FALSE(solve_list_coloring(complete_graph(3), lists({{1, 2}, {1, 2}, {1, 2}})).has_value());
  const Graph j1 = build_config("J1").coloring_graph();
  const ListAssignment L = lists({{1, 2, 3}, {1, 2, 3}, {1, 2}, {1, 3}, {1, 2, 3}, {1, 2, 3}});
  const auto c = solve_list_coloring(j1, L);
  REQUIRE(c.has_value());
  CHECK(is_proper_list_coloring(j1, L, *c));
}

TEST_CASE("greedy examples") {
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK(greedy_color(path, {0, 1, 2}, lists({{1}, {1, 2}, {1, 2}})) == Coloring{1, 2, 1});
  CHECK_FALSE(greedy_color(complete_graph(3), {2, 0, 1}, lists({{1, 2}, {1, 2}, {1, 2}})).has_value());
  CHECK(greedy_color(complete_graph(3), {0, 1, 2}, lists({{1}, {2}, {3}})) == Coloring{1, 2, 3});
}

TEST_CASE("hall examples") {
  const SdrResult a = hall_sdr({{1}, {2}, {3}});
  CHECK(a.found);
  CHECK(a.representatives == std::vector<int>{1, 2, 3});
  const SdrResult b = hall_sdr({{1, 2}, {1, 2}, {1, 2}});
  CHECK_FALSE(b.found);
  CHECK(b.violating == std::vector<int>{0, 1, 2});
  // Six 2- and 3-lists with L(v_j) and L(v_{j+3}) disjoint.
  const SdrResult c = hall_sdr({{1, 2, 3}, {4, 5, 6}, {1, 7}, {4, 5}, {1, 2, 3}, {2, 8, 9}});
  CHECK(c.found);
}

TEST_CASE("canonical enumeration examples") {
  std::vector<ListAssignment> seen;
  enumerate_canonical_lists({1, 1}, {}, [&](const ListAssignment& L) {
    seen.push_back(L);
    return true;
  });
  CHECK(seen == std::vector<ListAssignment>{lists({{1}, {1}}), lists({{1}, {2}})});
  CHECK(count_canonical_lists({2}, {}) == 1);
  CHECK(count_canonical_lists({1, 1, 1}, {}) == 5);
  CHECK(estimate_canonical_count({1, 1, 1}) == doctest::Approx(5));
}

TEST_CASE("choosability examples") {
  const Configuration j1 = build_config("J1");
  const Verdict v = check_choosability(j1.coloring_graph(), j1.list_sizes, j1.constraints);
  CHECK(v.status == Verdict::Status::Holds);
  const Verdict k4 = check_choosability(complete_graph(4), {3, 3, 3, 3}, {});
  CHECK(k4.status == Verdict::Status::Counterexample);
  REQUIRE(k4.witness.has_value());
  CHECK(*k4.witness == lists({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}));
  CHECK(check_choosability(Graph(1), {1}, {}).status == Verdict::Status::Holds);
}

TEST_CASE("property: solver agrees with brute force on all graphs up to 7 vertices") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> list(1, 15);  // nonempty subsets of {1..4}
  for (const Graph& g : atlas()) {
    for (int k = 0; k < 4; ++k) {
      ListAssignment L;
      for (int v = 0; v < g.order(); ++v) L.lists.push_back(static_cast<ColorSet>(list(rng)) << 1);
      const auto c = solve_list_coloring(g, L);
      CHECK(c.has_value() == brute_colorable(g, L));
      if (c) CHECK(is_proper_list_coloring(g, L, *c));
      std::vector<int> order(g.order());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      if (auto gc = greedy_color(g, order, L)) {
        CHECK(is_proper_list_coloring(g, L, *gc));
        CHECK(c.has_value());
      }
    }
  }
}

TEST_CASE("property: hall_sdr agrees with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int k = 1 + trial % 6;
    const int palette = 1 + static_cast<int>(rng() % 8);
    std::vector<std::vector<int>> sets(k);
    for (auto& s : sets)
      for (int c = 1; c <= palette; ++c)
        if (rng() % 3 == 0) s.push_back(c);
    const SdrResult r = hall_sdr(sets);
    CHECK(r.found == brute_sdr(sets));
    if (r.found) {
      std::set<int> distinct(r.representatives.begin(), r.representatives.end());
      CHECK(distinct.size() == sets.size());
      for (int i = 0; i < k; ++i)
        CHECK(std::count(sets[i].begin(), sets[i].end(), r.representatives[i]) == 1);
    } else {
      std::set<int> nbr;
      for (int i : r.violating) nbr.insert(sets[i].begin(), sets[i].end());
      CHECK(nbr.size() < r.violating.size());
    }
  }
}

TEST_CASE("property: canonical enumeration covers every renaming class") {
  const std::vector<std::vector<int>> cases = {{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 1, 1}, {3, 1},
                                               {1, 2, 1}, {2, 2, 1}, {3, 2}, {1, 1, 1, 1}, {2, 2, 2}, {3, 3},
                                               {1, 2, 3}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}, {4, 2}, {2, 1, 2, 1}};
  for (const auto& sizes : cases) {
    CAPTURE(sizes);
    const int s = std::accumulate(sizes.begin(), sizes.end(), 0);
    const auto perms = colour_perms(s);
    std::set<std::vector<ColorSet>> hit;
    std::set<std::vector<ColorSet>> seen;
    enumerate_canonical_lists(sizes, {}, [&](const ListAssignment& L) {
      CHECK(seen.insert(L.lists).second);
      hit.insert(renaming_class(L.lists, perms));
      return true;
    });
    const auto classes = brute_classes(sizes);
    CHECK(hit == classes);
    CHECK(count_canonical_lists(sizes, {}) >= classes.size());
    CHECK(estimate_canonical_count(sizes) == doctest::Approx(double(count_canonical_lists(sizes, {}))));
  }
}

TEST_CASE("canonical prefixes partition the enumeration in order") {
  const std::vector<int> sizes = {3, 2, 2, 3};
  const std::vector<ListConstraint> cons = {{ListConstraint::Kind::ListsDiffer, {1, 2}, 0}};
  std::vector<ListAssignment> whole, split;
  enumerate_canonical_lists(sizes, cons, [&](const ListAssignment& L) {
    whole.push_back(L);
    return true;
  });
  for (const auto& p : canonical_prefixes(sizes, cons, 2))
    enumerate_canonical_extensions(sizes, cons, p, [&](const ListAssignment& L) {
      split.push_back(L);
      return true;
    });
  CHECK(whole == split);
  for (const auto& L : whole) CHECK(L.lists[1] != L.lists[2]);
}

TEST_CASE("parallel, serial and separator checks agree") {
  std::mt19937_64 rng(17);
  int counterexamples = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Two random blobs joined through vertices 0 and 1.
    Graph g(7);
    g.add_edge(0, 1);
    for (int v = 2; v < 7; ++v) {
      const int side = v < 4 ? 0 : 1;
      if (rng() % 4 != 0) g.add_edge(v, side == 0 ? 0 : 1);
      if (rng() % 3 == 0) g.add_edge(v, side == 0 ? 1 : 0);
    }
    g.add_edge(2, 3);
    if (rng() % 2) g.add_edge(4, 5);
    g.add_edge(5, 6);
    std::vector<int> sizes(7);
    for (auto& s : sizes) s = 1 + static_cast<int>(rng() % 2);
    sizes[0] = sizes[1] = 3;
    const Verdict serial = check_choosability_serial(g, sizes, {});
    const Verdict parallel = check_choosability(g, sizes, {});
    const Verdict sep = check_choosability_separated(g, sizes, {}, {0, 1});
    CHECK(serial.status == parallel.status);
    CHECK(serial.status == sep.status);
    CHECK(parallel.method == "exhaustive");
    CHECK(serial.checked == parallel.checked);
    if (serial.witness) CHECK(*serial.witness == *parallel.witness);
    if (sep.witness) {
      ++counterexamples;
      CHECK_FALSE(solve_list_coloring(g, *sep.witness).has_value());
      for (int v = 0; v < 7; ++v) CHECK(sep.witness->size(v) == sizes[v]);
    }
  }
  CHECK(counterexamples > 0);
  CHECK(counterexamples < 40);
}

TEST_CASE("sampling is deterministic and finds planted failures") {
  ChoosabilityOptions o;
  o.mode = CheckMode::Sampled;
  o.trials = 20'000;
  // K3 with 2-lists fails exactly when all three lists coincide.
  const Verdict a = check_choosability(complete_graph(3), {2, 2, 2}, {}, o);
  const Verdict b = check_choosability(complete_graph(3), {2, 2, 2}, {}, o);
  REQUIRE(a.status == Verdict::Status::Counterexample);
  CHECK(a.stats->trials == b.stats->trials);
  CHECK(*a.witness == *b.witness);
  CHECK_FALSE(solve_list_coloring(complete_graph(3), *a.witness).has_value());
  const Verdict ok = check_choosability(cycle_graph(4), {2, 2, 2, 2}, {}, o);
  CHECK(ok.status == Verdict::Status::SampledPass);
  CHECK(ok.stats->trials == 20'000);
  CHECK(ok.stats->palette == 8);
}

TEST_CASE("lemma driver") {
  CHECK_THROWS_AS(verify_lemma("C3-C6"), DetectionOnly);
  CHECK_THROWS_AS(verify_lemma("6-face"), DetectionOnly);
  CHECK_THROWS_AS(verify_lemma("reducible-H9"), UnknownLemma);
  const LemmaReport r = verify_lemma("cycle-six");
  CHECK(r.ok);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0]["verdict"] == "holds");
  CHECK(r.records[1]["variant"] == "J1.cycle-six.reduction");
  CHECK(r.records[1]["verdict"] == "holds");
  const LemmaReport j7 = verify_lemma("lem-4cycle-pendent");
  CHECK(j7.ok);
  LemmaOptions few;
  few.trials = 2000;
  const LemmaReport h2 = verify_lemma("reducible-H2", few);
  CHECK(h2.ok);
  for (const auto& rec : h2.records) {
    CHECK(rec["verdict"] == "sampled-pass");
    CHECK(rec["trials"] == 2000);
    CHECK_FALSE(rec.contains("wall_ms"));
  }
}

TEST_CASE("dropping the differing-lists condition breaks cycle-six-original") {
  const Configuration c = build_config("J1.unconstrained");
  const Verdict v = check_choosability(c.coloring_graph(), c.list_sizes, c.constraints);
  REQUIRE(v.status == Verdict::Status::Counterexample);
  CHECK(v.witness->lists[2] == v.witness->lists[3]);
}
