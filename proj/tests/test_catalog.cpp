#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sq7/catalog.hpp"
#include "sq7/corpus.hpp"
#include "sq7/errors.hpp"
#include "sq7/planarity.hpp"

using namespace sq7;

namespace {

// Brute-force oracle: injective edge-preserving maps pattern -> host.
std::size_t count_embeddings(const Graph& pattern, const Graph& host) {
  std::vector<int> map(pattern.order(), -1);
  std::vector<char> used(host.order(), 0);
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == pattern.order()) {
      ++count;
      return;
    }
    for (int h = 0; h < host.order(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j : pattern.neighbors(i))
        if (j < i && !host.has_edge(map[j], h)) ok = false;
      if (!ok) continue;
      used[h] = 1;
      map[i] = h;
      rec(i + 1);
      used[h] = 0;
    }
  };
  rec(0);
  return count;
}

PlaneGraph embedded(const Graph& g) { return PlaneGraph(g, *planar_embedding(g)); }

}  // namespace

TEST_CASE("catalog names") {
  CHECK(base_names().size() == 21);
  const auto all = all_names();
  CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
  for (const auto& name : all) {
    CAPTURE(name);
    const Configuration c = build_config(name);
    CHECK(c.name == name);
    CHECK(c.list_sizes.size() == c.colored.size());
    for (int s : c.list_sizes) CHECK(s >= 1);
  }
  CHECK_THROWS_AS(build_config("H9"), UnknownConfiguration);
}

TEST_CASE("lemma table") {
  CHECK(lemma_mode("reducible-H3") == VerificationMode::CnCertificate);
  CHECK(lemma_mode("reducible-H6") == VerificationMode::CnCertificate);
  CHECK(lemma_mode("lem-two-4cycle") == VerificationMode::Exhaustive);
  CHECK(lemma_mode("reducible-H2") == VerificationMode::Sampled);
  CHECK(lemma_mode("C3-C6") == VerificationMode::DetectionOnly);
  CHECK(lemma_mode("6-face") == VerificationMode::DetectionOnly);
  CHECK_THROWS_AS(lemma_mode("no-such-lemma"), UnknownLemma);
  CHECK_THROWS_AS(lemma_variants("no-such-lemma"), UnknownLemma);
  CHECK(lemma_variants("reducible-H2").size() == 5);
  CHECK(lemma_variants("C3-C6").empty());
  for (const auto& id : lemma_ids())
    for (const auto& v : lemma_variants(id)) CHECK_NOTHROW(build_config(v));
}

TEST_CASE("certificate monomials fit the lists") {
  std::size_t certs = 0;
  for (const std::string id : {"reducible-H3", "reducible-H6"})
    for (const auto& name : lemma_variants(id)) {
      const Configuration c = build_config(name);
      if (!c.certificate) continue;
      ++certs;
      CAPTURE(name);
      const auto& t = c.certificate->exponents;
      REQUIRE(t.size() == c.list_sizes.size());
      int sum = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(t[i] < c.list_sizes[i]);
        sum += t[i];
      }
      CHECK(sum == static_cast<int>(c.coloring_graph().size()));
    }
  CHECK(certs == 13);
}

TEST_CASE("squares of H3 and H5 have 30 and 28 edges") {
  CHECK(build_config("H3").coloring_graph().size() == 30);
  CHECK(build_config("H5").coloring_graph().size() == 28);
}

TEST_CASE("figure list sizes agree with the degree audit") {
  for (const auto& name : all_names()) {
    const Configuration c = build_config(name);
    if (!c.auditable || !c.sizes_from_figure) continue;
    CAPTURE(name);
    CHECK(audit_sizes(c) == c.list_sizes);
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(complete_graph(4)).size() == 24);
  CHECK(automorphisms(cycle_graph(6)).size() == 12);
  CHECK(automorphisms(generalized_petersen(5, 2)).size() == 120);
  CHECK(automorphisms(build_config("H1").pattern).size() == 4);
}

TEST_CASE("subgraph occurrences agree with brute force divided by automorphisms") {
  const std::vector<Graph> hosts = {complete_graph(4), generalized_petersen(4, 1), generalized_petersen(3, 1),
                                    generalized_petersen(6, 1), generalized_petersen(5, 2)};
  for (const std::string name : {"F1", "H1", "J7", "J1", "F2"}) {
    const Graph p = build_config(name).pattern;
    const std::size_t aut = automorphisms(p).size();
    for (const auto& h : hosts) {
      CAPTURE(name);
      CHECK(find_subgraph_occurrences(h, p).size() * aut == count_embeddings(p, h));
    }
  }
}

TEST_CASE("face-based occurrences") {
  // K4: each of the 6 edges lies on two triangular faces.
  CHECK(find_occurrences(embedded(complete_graph(4)), build_config("F1")).size() == 6);
  // Cube: 12 pairs of adjacent square faces.
  CHECK(find_occurrences(embedded(generalized_petersen(4, 1)), build_config("H1")).size() == 12);
  // Hexagonal prism: 6 adjacent pairs of squares.
  CHECK(find_occurrences(embedded(generalized_petersen(6, 1)), build_config("H1")).size() == 6);
  // Triangular prism: the triangle-square adjacency F2 needs a pendant edge, absent here.
  CHECK(find_occurrences(embedded(generalized_petersen(3, 1)), build_config("F1")).empty());
  CHECK(find_occurrences(embedded(generalized_petersen(4, 1)), build_config("F1")).empty());
}

TEST_CASE("catalog export is deterministic and flags no audit mismatch") {
  const std::string a = export_catalog_text();
  CHECK(a == export_catalog_text());
  CHECK(a.find("name: J8") != std::string::npos);
  std::istringstream lines(a);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("audit:", 0) == 0) CHECK(line.find('*') == std::string::npos);
}
