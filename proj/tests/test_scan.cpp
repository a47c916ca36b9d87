#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sq7/chromatic.hpp"
#include "sq7/corpus.hpp"
#include "sq7/formats.hpp"
#include "sq7/scan.hpp"
#include "sq7/suite.hpp"

using namespace sq7;

namespace {

// Smallest k admitting a proper colouring, by trying all k^n maps.
int brute_chromatic(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : edges)
        if (col[u] == col[v]) {
          ok = false;
          break;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
}

std::vector<Graph> atlas() {
  std::ifstream in(SQ7_TEST_DATA "/graphs_upto7.g6");
  REQUIRE(in.good());
  return read_graph6(in);
}

Graph named(const std::string& name) {
  for (auto& e : builtin_graphs())
    if (e.name == name) return e.graph;
  FAIL("no builtin " << name);
  throw;
}

}  // namespace

TEST_CASE("chromatic numbers of named graphs") {
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(square(cycle_graph(5))) == 5);
  CHECK(chromatic_number(named("Q3")) == 2);
  CHECK(chromatic_number(square(named("Q3"))) == 4);
  CHECK(chromatic_number(named("Petersen")) == 3);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK_THROWS_AS(chromatic_number(Graph(31)), SizeBound);
}

TEST_CASE("property: chromatic number agrees with exhaustive colouring") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    const unsigned density = 1 + rng() % 4;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 5 < density) g.add_edge(u, v);
    const int chi = chromatic_number(g);
    CHECK(chi == brute_chromatic(g));
    const auto col = k_coloring(g, chi);
    REQUIRE(col.has_value());
    for (auto [u, v] : g.edges()) CHECK((*col)[u] != (*col)[v]);
    if (chi > 1) CHECK_FALSE(k_coloring(g, chi - 1).has_value());
  }
}

TEST_CASE("scan outcomes for named graphs") {
  const auto k4 = scan_graph(complete_graph(4), 0, "K4");
  CHECK(k4.kept);
  CHECK(k4.chi == 4);
  CHECK(k4.chi_square == 4);
  CHECK(k4.pass);
  const auto cube = scan_graph(named("Q3"), 1, "Q3");
  CHECK(cube.kept);
  CHECK(cube.chi == 2);
  CHECK(cube.chi_square == 4);
  const auto c5 = scan_graph(cycle_graph(5), 2, "C5");
  CHECK_FALSE(c5.kept);
  CHECK(c5.reason == "has-5-cycle");
  CHECK(scan_graph(named("Petersen"), 3, "P").reason == "not-planar");
  CHECK(scan_graph(complete_graph(5), 4, "K5").reason == "not-subcubic");
  CHECK(scan_graph(named("dodecahedron"), 5, "D").reason == "has-5-cycle");
}

TEST_CASE("scan records serialise with stable keys") {
  const auto r = scan_graph(named("Q3"), 7, "Q3");
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"index", "id", "outcome", "n", "m", "chi", "chi_square", "pass"});
  CHECK(j["outcome"] == "kept");
  CHECK(r.to_json(true).contains("wall_ms"));
  const auto rej = scan_graph(cycle_graph(5), 0, "C5").to_json();
  CHECK(rej["reason"] == "has-5-cycle");
  CHECK_FALSE(rej.contains("chi_square"));
}

TEST_CASE("atlas scan matches frozen filter counts") {
  // Counts and the chi(G^2) histogram come from networkx filters plus
  // exhaustive colouring of each square.
  const auto graphs = atlas();
  REQUIRE(graphs.size() == 1252u);
  std::vector<std::string> ids;
  for (const auto& g : graphs) ids.push_back(to_graph6(g));
  const auto records = scan_graphs(graphs, ids, {.jobs = 1});
  std::map<std::string, int> reasons;
  std::map<int, int> hist;
  for (const auto& r : records) {
    if (r.kept) {
      ++hist[r.chi_square];
      CHECK(r.pass);
      CHECK(r.chi_square >= r.chi);
      CHECK(r.chi_square <= 7);
    } else {
      ++reasons[r.reason];
    }
  }
  CHECK(reasons == std::map<std::string, int>{{"has-5-cycle", 60}, {"not-planar", 3}, {"not-subcubic", 999}});
  CHECK(hist == std::map<int, int>{{1, 7}, {2, 12}, {3, 41}, {4, 119}, {5, 11}});
}

TEST_CASE("scan output does not depend on thread count") {
  std::ostringstream corpus;
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    corpus << to_graph6(random_cubic_plane_graph(4 + static_cast<int>(seed % 12), seed).graph()) << '\n';
  for (const auto& e : builtin_graphs()) corpus << to_graph6(e.graph) << '\n';
  auto run = [&](int jobs) {
    std::istringstream in(corpus.str());
    std::string out;
    for (const auto& r : scan_corpus(in, {.jobs = jobs})) out += r.to_json().dump() + "\n";
    return out;
  };
  const std::string one = run(1);
  CHECK(one == run(4));
  CHECK(one == run(1));
}

TEST_CASE("malformed graph6 reports its line") {
  std::istringstream in("C~\nC^\n!!bad\n");
  try {
    scan_corpus(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("scan failure carries its record") {
  ScanRecord r;
  r.index = 4;
  r.id = "X";
  r.kept = true;
  r.chi_square = 8;
  const ScanFailure f(r);
  CHECK(f.record.chi_square == 8);
  CHECK(std::string(f.what()).find("chi(G^2) = 8") != std::string::npos);
}

TEST_CASE("scan and discharging suites report every built-in graph") {
  const SuiteResult scan = run_suite("scan");
  CHECK(scan.ok);
  REQUIRE(scan.records.size() == builtin_graphs().size());
  CHECK(scan.records[0]["suite"] == "scan");
  CHECK(scan.records[0]["id"] == "K4");
  CHECK(scan.records[0]["chi_square"] == 4);
  const SuiteResult dis = run_suite("discharging");
  CHECK(dis.ok);
  CHECK(dis.summary.find("all checks passed") != std::string::npos);
  CHECK(run_suite("scan").summary == scan.summary);
  CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
  CHECK(suite_names().back() == "all");
}
