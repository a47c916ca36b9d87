#include <random>
#include <sstream>

#include "doctest.h"
#include "sq7/corpus.hpp"
#include "sq7/errors.hpp"
#include "sq7/formats.hpp"
#include "sq7/planarity.hpp"
#include "sq7/plane_graph.hpp"

using namespace sq7;

namespace {

// Frozen from an independent implementation: graph6, planar, has a 5-cycle,
// girth (0 for forests), |E(G^2)|.
struct OracleGraph {
  const char* g6;
  bool planar;
  bool five_cycle;
  int girth;
  int square_edges;
};

const OracleGraph kOracle[] = {
{"FX~y?", false, true, 3, 19},
{"DAo", true, false, 0, 5},
{"H@tTaGd", true, true, 3, 29},
{"HGE@?b^", true, false, 3, 31},
{"HpeRC`|", false, true, 3, 33},
{"Dy{", true, true, 3, 10},
{"DQK", true, false, 0, 7},
{"HemxLJx", false, true, 3, 35},
{"HSChA?a", true, true, 3, 18},
{"EeC?", true, false, 3, 6},
{"HI~vi|F", false, true, 3, 36},
{"EZG_", true, false, 3, 15},
{"EwSW", true, false, 3, 11},
{"EpAO", true, false, 4, 9},
{"F?H_G", true, false, 0, 8},
{"HQ@OXIO", true, false, 3, 22},
{"DCG", true, false, 0, 2},
{"DpG", true, false, 0, 8},
{"HLj]yFy", false, true, 3, 36},
{"Fucmg", true, true, 3, 21},
{"GC}Ak_", true, true, 3, 24},
{"Elg?", true, false, 4, 10},
{"E?_O", true, false, 0, 2},
{"FF\\LG", true, true, 3, 21},
{"F]V}W", false, true, 3, 21},
{"HE?CC[M", true, true, 3, 20},
{"HXX\\mCd", false, true, 3, 36},
{"FaGtG", true, true, 3, 17},
{"GFYZ|_", false, true, 3, 28},
{"Dks", true, false, 3, 9},
{"FM}Ew", true, true, 3, 20},
{"GCdtAo", true, true, 3, 23},
{"D{[", true, true, 3, 10},
{"DOO", true, false, 0, 2},
{"F[Rjo", true, true, 3, 21},
{"GDvqEG", true, true, 3, 25},
{"Gh_CvG", true, true, 3, 24},
{"H@GJcAF", true, true, 3, 25},
{"Dk?", true, false, 0, 5},
{"F__qO", true, false, 4, 9}
};

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order(), inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  g.add_edge(1, 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.size() == 1);
}

TEST_CASE("squares") {
  CHECK(square(cycle_graph(5)) == complete_graph(5));
  const Graph q3 = generalized_petersen(4, 1);
  CHECK(square(q3).size() == 24);  // each vertex misses only its antipode
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(square(path).has_edge(0, 2));
}

TEST_CASE("five cycles and girth on named graphs") {
  CHECK(has_five_cycle(cycle_graph(5)));
  CHECK(has_five_cycle(generalized_petersen(5, 2)));
  CHECK(has_five_cycle(generalized_petersen(10, 2)));
  CHECK_FALSE(has_five_cycle(generalized_petersen(4, 1)));
  CHECK_FALSE(has_five_cycle(complete_graph(4)));
  CHECK(has_five_cycle(complete_graph(5)));
  CHECK(girth(generalized_petersen(5, 2)) == 5);
  CHECK(girth(generalized_petersen(4, 1)) == 4);
  CHECK_FALSE(girth(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
}

TEST_CASE("degree predicates") {
  CHECK(is_cubic(generalized_petersen(5, 2)));
  CHECK(is_subcubic(cycle_graph(7)));
  CHECK_FALSE(is_cubic(cycle_graph(7)));
  CHECK_FALSE(is_subcubic(complete_graph(5)));
  CHECK(is_connected(cycle_graph(4)));
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("graph6 matches frozen encodings") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(generalized_petersen(4, 1)) == "Gl`HGs");
  CHECK(to_graph6(generalized_petersen(5, 2)) == "IheA@GUAo");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(generalized_petersen(10, 2)) == "ShCGGC@_K?G?GAC@@?OGA?_G@?O@OO?gG");
  CHECK(to_graph6(Graph(1)) == "@");
  Graph p70(70);
  for (int i = 0; i + 1 < 70; ++i) p70.add_edge(i, i + 1);
  const std::string s = to_graph6(p70);
  CHECK(s.rfind("~?@EhCGGC@?G?_@?@??_", 0) == 0);
  CHECK(s.size() == 407);
  CHECK(parse_graph6(s) == p70);
}

TEST_CASE("graph6 errors carry line numbers") {
  std::istringstream in("C~\nDhc\nC\n");
  try {
    read_graph6(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  std::istringstream bad(">>graph6<<C~\n\nC!\n");
  try {
    read_graph6(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("frozen oracle: planarity, 5-cycles, girth, square size") {
  for (const auto& o : kOracle) {
    CAPTURE(o.g6);
    const Graph g = parse_graph6(o.g6);
    CHECK(is_planar(g) == o.planar);
    CHECK(has_five_cycle(g) == o.five_cycle);
    CHECK(girth(g).value_or(0) == o.girth);
    CHECK(static_cast<int>(square(g).size()) == o.square_edges);
    CHECK(to_graph6(g) == o.g6);
    const auto rot = planar_embedding(g);
    CHECK(rot.has_value() == o.planar);
    if (rot) CHECK(PlaneGraph(g, *rot).euler_holds());
  }
}

TEST_CASE("property: square adjacency is distance at most two") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(3 + trial % 9, 0.25, rng);
    const auto d = floyd(g);
    const Graph s = square(g);
    for (int u = 0; u < g.order(); ++u) {
      const auto bfs = bfs_distances(g, u);
      for (int v = 0; v < g.order(); ++v) {
        CHECK(s.has_edge(u, v) == (u != v && d[u][v] <= 2));
        CHECK(bfs[v] == (d[u][v] >= (1 << 20) ? -1 : d[u][v]));
      }
    }
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("faces of named embeddings") {
  for (const auto& [name, pg] : builtin_embedded()) {
    CAPTURE(name);
    CHECK(pg.euler_holds());
    int darts = 0;
    for (const auto& f : pg.faces()) darts += f.length();
    CHECK(darts == 2 * static_cast<int>(pg.graph().size()));
  }
  const Graph cube = generalized_petersen(4, 1);
  const PlaneGraph pg(cube, *planar_embedding(cube));
  CHECK(pg.faces().size() == 6);
  for (const auto& f : pg.faces()) CHECK(f.length() == 4);
  CHECK(bounds_face(pg, {0, 1, 2, 3}));
  CHECK(bounds_face(pg, {3, 2, 1, 0}));
  CHECK_FALSE(bounds_face(pg, {0, 1, 5, 6}));
}

TEST_CASE("rotation systems") {
  const Graph k4 = complete_graph(4);
  CHECK_THROWS_AS(PlaneGraph(k4, Rotation{{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), MalformedRotation);
  CHECK_THROWS_AS(PlaneGraph(k4, Rotation{{1, 2, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), MalformedRotation);
  // K4 on a torus-like rotation: every vertex uses the same cyclic order.
  const PlaneGraph bad(k4, Rotation{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  const PlaneGraph good(k4, *planar_embedding(k4));
  CHECK(good.euler_holds());
  CHECK(good.faces().size() == 4);
  CHECK(bad.faces().size() != 4);
  CHECK_FALSE(bad.euler_holds());
}

TEST_CASE("embedding with prescribed faces") {
  const Graph prism = generalized_petersen(3, 1);
  auto pg = embed_with_faces(prism, {{0, 1, 2}, {0, 1, 4, 3}});
  REQUIRE(pg.has_value());
  CHECK(bounds_face(*pg, {0, 1, 2}));
  CHECK(bounds_face(*pg, {0, 1, 4, 3}));
  // Two triangles cannot both bound faces of K4 minus nothing and a 4-cycle through all four vertices.
  CHECK(embed_with_faces(complete_graph(4), {{0, 1, 2}, {0, 1, 3}}).has_value());
  CHECK_FALSE(embed_with_faces(generalized_petersen(5, 2), {{0, 1, 2, 3, 4}}).has_value());
}

TEST_CASE("planar_code round trip") {
  std::vector<PlaneGraph> gs;
  for (const auto& [name, pg] : builtin_embedded()) gs.push_back(pg);
  std::stringstream buf;
  write_planar_code(buf, gs);
  const auto back = read_planar_code(buf);
  REQUIRE(back.size() == gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(back[i].graph() == gs[i].graph());
    CHECK(back[i].rotation() == gs[i].rotation());
  }
}

TEST_CASE("planar_code hand-built record") {
  // K4 with 1-based neighbour lists, each terminated by 0.
  const std::string bytes = std::string(">>planar_code<<") +
                            std::string("\x04\x02\x03\x04\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17);
  std::istringstream in(bytes);
  const auto gs = read_planar_code(in);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].graph() == complete_graph(4));
  CHECK(gs[0].euler_holds());
  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  try {
    read_planar_code(truncated);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }
  std::istringstream be(">>planar_code be<<");
  CHECK_THROWS_AS(read_planar_code(be), ParseError);
}

TEST_CASE("random cubic plane graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PlaneGraph pg = random_cubic_plane_graph(4 + static_cast<int>(seed % 12), seed);
    CHECK(is_cubic(pg.graph()));
    CHECK(is_connected(pg.graph()));
    CHECK(pg.euler_holds());
    CHECK(is_planar(pg.graph()));
  }
}
