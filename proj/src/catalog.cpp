#include "sq7/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sq7/errors.hpp"

namespace sq7 {

namespace {

using VM = VerificationMode;
using Kind = ListConstraint::Kind;

struct BaseDef {
  std::string name;
  std::string lemma;
  int n;
  std::vector<Edge> edges;                 // 1-based
  std::vector<std::vector<int>> faces;     // 1-based
  std::vector<int> sizes;                  // empty: audit
  VM mode;
  std::vector<ListConstraint> constraints; // 0-based colouring positions
  bool auditable = true;
  std::string note;
};

struct Extra {
  std::string label;
  bool to_color;
  std::vector<std::string> nbrs;
};

struct VariantDef {
  std::string name;
  std::string base;
  VM mode;
  std::vector<Edge> add_edges;  // 1-based
  std::vector<Extra> extras;
  std::vector<int> sizes;       // colouring order; empty: audit
  std::vector<int> skip;        // 1-based v-indices left uncoloured
  int restrict_n = 0;
  std::vector<int> t;
  long long expected = 0;
  std::string note;
  std::vector<ListConstraint> constraints;
  bool has_constraints = false;  // otherwise inherit from base
};

ListConstraint differ(int a, int b) { return {Kind::ListsDiffer, {a - 1, b - 1}, 0}; }
ListConstraint union_at_least(std::vector<int> vs, int bound) {
  for (int& v : vs) --v;
  return {Kind::UnionAtLeast, std::move(vs), bound};
}

const std::string kSimplify =
    "non-adjacency and no-common-neighbour facts of the simplifying cases are taken as given";

const std::vector<BaseDef>& base_defs() {
  static const std::vector<BaseDef> defs = {
      {"F1", "C3-C6", 4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 3}}, {{1, 2, 3}, {1, 3, 4}},
       {}, VM::DetectionOnly, {}, false, "two 3-cycles sharing an edge"},
      {"F2", "reducible-F2", 7,
       {{3, 2}, {2, 1}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {3, 4}},
       {{1, 2, 3}, {4, 5, 6, 7}}, {3, 3, 5, 5, 3, 2, 3}, VM::Sampled, {}, true,
       "3-face joined by an edge to a 4-face"},
      {"F3", "C3-C6", 7,
       {{1, 2}, {1, 3}, {3, 2}, {1, 7}, {7, 6}, {6, 5}, {5, 4}, {4, 2}},
       {{1, 2, 3}, {1, 7, 6, 5, 4, 2}}, {}, VM::DetectionOnly, {}, false,
       "3-cycle sharing an edge with a 6-cycle"},
      {"F4", "reducible-F4", 10,
       {{3, 2}, {2, 1}, {1, 3}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {4, 5}, {4, 3}, {1, 10}, {10, 9}, {9, 8}},
       {{1, 2, 3}, {5, 6, 7, 8}, {1, 3, 4, 5, 8, 9, 10}}, {5, 4, 5, 4, 5, 3, 3, 5, 3, 3},
       VM::DetectionOnly, {}, true,
       "3-face and 4-face on a common 7-face; list colouring is checked through W1 and W2"},
      {"T", "C3-C6", 6, {{3, 2}, {3, 1}, {3, 4}, {2, 1}, {4, 5}, {4, 6}, {5, 6}}, {}, {},
       VM::DetectionOnly, {}, false, "two 3-cycles at distance 1"},
      {"W1", "reducible-F4", 10,
       {{3, 2}, {2, 1}, {1, 3}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {4, 5}, {4, 3}, {1, 10}, {10, 9}, {9, 8}},
       {{1, 2, 3}, {5, 6, 7, 8}, {1, 3, 4, 5, 8, 9, 10}}, {5, 4, 5, 4, 5, 3, 3, 5, 3, 3},
       VM::Sampled, {}, true, "F is a 7-face"},
      {"W2", "reducible-F4", 11,
       {{3, 2}, {2, 1}, {1, 3}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {4, 5}, {4, 3}, {1, 11}, {11, 10}, {10, 9}, {9, 8}},
       {{1, 2, 3}, {5, 6, 7, 8}, {1, 3, 4, 5, 8, 9, 10, 11}}, {5, 4, 5, 4, 5, 3, 3, 5, 3, 2, 3},
       VM::Sampled, {}, true, "F is an 8-face"},
      {"H1", "reducible-H0", 6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}},
       {{1, 2, 5, 4}, {2, 3, 6, 5}}, {3, 5, 3, 3, 5, 3}, VM::Sampled, {}, true,
       "two adjacent 4-faces"},
      {"H2", "reducible-H2", 10,
       {{6, 2}, {2, 3}, {3, 9}, {9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 1}, {1, 2}, {3, 4}, {4, 10}, {10, 9}},
       {{2, 3, 9, 8, 7, 6}, {1, 2, 6, 5}, {3, 4, 10, 9}}, {3, 6, 6, 3, 3, 5, 3, 3, 5, 3},
       VM::Sampled, {}, true, "6-face with two 4-faces at distance 1; " + kSimplify},
      {"H3", "reducible-H3", 11,
       {{9, 6}, {6, 4}, {4, 7}, {7, 11}, {11, 10}, {10, 9}, {6, 5}, {5, 8}, {8, 9}, {4, 3}, {3, 2}, {2, 1}, {1, 5}},
       {{5, 6, 9, 8}, {6, 4, 7, 11, 10, 9}, {1, 2, 3, 4, 6, 5}}, {3, 2, 3, 5, 5, 7, 3, 4, 5, 3, 2},
       VM::CnCertificate, {}, true,
       "4-face adjacent to two adjacent 6-faces; the v3v11 case is the H2 Subcase 3.2 pattern and is not repeated; " +
           kSimplify},
      {"H4", "reducible-H4", 17,
       {{7, 8}, {8, 4}, {4, 3}, {3, 2}, {2, 6}, {6, 7}, {8, 9}, {9, 12}, {12, 11}, {11, 10}, {10, 7},
        {2, 1}, {1, 5}, {5, 6}, {11, 14}, {14, 13}, {13, 10}, {5, 15}, {15, 16}, {16, 17}, {17, 13}},
       {{2, 3, 4, 8, 7, 6}, {7, 8, 9, 12, 11, 10}, {1, 2, 6, 5}, {10, 11, 14, 13},
        {5, 6, 7, 10, 13, 17, 16, 15}},
       {4, 5, 3, 3, 5, 7, 7, 5, 3, 7, 5, 3, 5, 4, 3, 2, 3}, VM::Sampled, {}, true,
       "8-face with consecutive neighbours 4,6,6,4; " + kSimplify},
      {"H5", "reducible-H6", 11,
       {{2, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 6}, {6, 7}, {10, 11}, {11, 5}, {5, 4}},
       {{2, 7, 8, 9, 10, 4, 3}, {1, 2, 7, 6}, {4, 5, 11, 10}}, {3, 5, 4, 5, 3, 3, 5, 3, 3, 5, 3},
       VM::CnCertificate, {}, true, "7-face with two 4-faces separated by two edges; " + kSimplify},
      {"H6", "reducible-H7", 11,
       {{2, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 3}, {3, 2}, {2, 1}, {1, 5}, {5, 6}, {10, 11}, {11, 4}, {4, 3}},
       {{2, 6, 7, 8, 9, 10, 3}, {1, 2, 6, 5}, {3, 10, 11, 4}}, {3, 6, 6, 3, 3, 5, 3, 2, 3, 5, 3},
       VM::Sampled, {}, true, "7-face with two 4-faces separated by one edge; " + kSimplify},
      {"J1", "cycle-six-original", 6, {{5, 6}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 6}}, {},
       {3, 3, 2, 2, 3, 3}, VM::Exhaustive, {differ(3, 4)}, false, ""},
      {"J2", "cycle-six-original-second", 6, {{5, 6}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 6}}, {},
       {3, 2, 3, 2, 3, 3}, VM::Exhaustive, {differ(2, 4)}, false, ""},
      {"J3", "C4-share-two-edge", 8,
       {{5, 2}, {2, 3}, {3, 6}, {6, 7}, {7, 8}, {8, 5}, {5, 4}, {4, 1}, {1, 2}, {4, 3}}, {},
       {4, 6, 6, 6, 6, 3, 2, 3}, VM::Sampled, {}, true, ""},
      {"J4", "C4-share-two-edge", 9,
       {{2, 5}, {5, 9}, {9, 8}, {8, 7}, {7, 6}, {6, 3}, {3, 2}, {2, 1}, {1, 4}, {4, 5}, {4, 3}}, {},
       {4, 6, 6, 6, 6, 3, 2, 2, 3}, VM::Sampled, {}, true, ""},
      {"J5", "H2-type-two-reducible", 10,
       {{7, 2}, {2, 3}, {3, 4}, {4, 9}, {9, 8}, {8, 7}, {7, 6}, {6, 1}, {1, 2}, {4, 5}, {5, 10}, {10, 9}}, {},
       {3, 5, 4, 5, 3, 3, 5, 4, 5, 3}, VM::Sampled, {}, true, kSimplify},
      {"J6", "reducible-H4", 14,
       {{7, 8}, {8, 4}, {4, 3}, {3, 2}, {2, 6}, {6, 7}, {8, 9}, {9, 12}, {12, 11}, {11, 10}, {10, 7},
        {2, 1}, {1, 5}, {5, 6}, {11, 14}, {14, 13}, {13, 10}},
       {}, {}, VM::Sampled, {}, true, "H4 without v15, v16, v17; lists of the base pattern are audit-derived"},
      {"J7", "lem-4cycle-pendent", 5, {{4, 3}, {3, 1}, {1, 2}, {2, 4}, {4, 5}}, {}, {2, 3, 3, 3, 2},
       VM::Exhaustive, {union_at_least({2, 3, 4}, 4), union_at_least({1, 3}, 5)}, false, ""},
      {"J8", "lem-two-4cycle", 8,
       {{4, 3}, {3, 1}, {1, 2}, {2, 4}, {5, 8}, {8, 7}, {7, 6}, {6, 5}, {4, 5}}, {},
       {3, 3, 3, 5, 5, 3, 2, 3}, VM::Exhaustive, {}, false, ""},
  };
  return defs;
}

Extra colored_nb(std::vector<std::string> nbrs, std::string label = "w") {
  return {std::move(label), false, std::move(nbrs)};
}
Extra free_nb(std::vector<std::string> nbrs, std::string label = "w") {
  return {std::move(label), true, std::move(nbrs)};
}

const std::vector<VariantDef>& variant_defs() {
  static const std::vector<VariantDef> defs = [] {
    std::vector<VariantDef> d;
    auto add = [&](VariantDef v) { d.push_back(std::move(v)); };
    // reducible-F4
    add({"W1.sub1.2.1", "W1", VM::Sampled, {}, {colored_nb({"v2", "v7"})}, {5, 5, 5, 4, 5, 3, 4, 5, 3, 3}});
    add({"W1.sub1.2.2a", "W1", VM::Sampled, {}, {colored_nb({"v6", "v10"})}, {}});
    add({"W1.sub1.2.2b", "W1", VM::Sampled, {{6, 9}}, {}, {}});
    add({"W2.sub2.2.1", "W2", VM::Sampled, {}, {colored_nb({"v2", "v7"})}, {5, 5, 5, 4, 5, 3, 4, 5, 3, 2, 3}});
    add({"W2.sub2.2.2-ii", "W2", VM::Sampled, {}, {colored_nb({"v6", "v10"})}, {}});
    add({"W2.sub2.2.2-iii", "W2", VM::Sampled, {}, {colored_nb({"v6", "v11"})}, {}});
    add({"W2.sub2.2.2-iv", "W2", VM::Sampled, {}, {colored_nb({"v7", "v11"})}, {}});
    add({"W2.sub2.2.2-v", "W2", VM::Sampled, {{6, 9}}, {}, {}});
    // reducible-H0
    add({"H1.case2", "H1", VM::Sampled, {{3, 4}}, {}, {4, 5, 5, 5, 5}, {6}, 0, {}, 0,
         "v6 is coloured first; v1..v5 induce K5 in the square"});
    // reducible-H2
    add({"H2.case2", "H2", VM::Sampled, {{5, 10}}, {}, {4, 6, 6, 4, 6, 6, 3, 3, 6, 6}});
    add({"H2.case3.1", "H2", VM::Sampled, {}, {colored_nb({"v5", "v10"})}, {3, 6, 6, 3, 4, 5, 3, 3, 5, 4}});
    add({"H2.case3.2", "H2", VM::Sampled, {}, {colored_nb({"v4", "v5"})}, {3, 6, 6, 4, 4, 5, 3, 3, 5, 3}});
    add({"H2.case3.3", "H2", VM::Sampled, {}, {colored_nb({"v4", "v7"})}, {3, 6, 6, 4, 3, 5, 4, 3, 5, 3}});
    // reducible-H3
    add({"H3.case2", "H3", VM::Sampled, {{2, 10}}, {}, {4, 5, 4, 5, 5, 7, 3, 4, 6, 6, 3}, {}, 0, {}, 0,
         "no certificate is given for this case; checked by sampling"});
    add({"H3.case3.1.1", "H3", VM::CnCertificate, {}, {colored_nb({"v1", "v10", "v3"})},
         {5, 3, 5, 5, 5, 7, 3, 4, 5, 5, 2}, {}, 0, {3, 1, 3, 4, 4, 5, 2, 3, 4, 2, 1}, 3});
    add({"H3.case3.1.2", "H3", VM::CnCertificate, {},
         {colored_nb({"v1", "v10"}), colored_nb({"v2", "v11"}, "z")},
         {4, 3, 3, 5, 5, 7, 3, 4, 5, 4, 3}, {}, 0, {3, 2, 2, 4, 4, 5, 2, 3, 4, 2, 1}, 2});
    add({"H3.case3.1.3", "H3", VM::CnCertificate, {}, {colored_nb({"v1", "v10"})},
         {4, 2, 3, 5, 5, 7, 3, 4, 5, 4, 2}, {}, 0, {3, 1, 2, 4, 4, 5, 2, 3, 4, 2, 1}, 2});
    add({"H3.case3.2", "H3", VM::CnCertificate, {}, {colored_nb({"v2", "v10"})},
         {3, 3, 3, 5, 5, 7, 3, 4, 5, 4, 2}, {}, 0, {2, 1, 2, 4, 4, 5, 2, 3, 4, 3, 1}, -4});
    add({"H3.case3.3", "H3", VM::CnCertificate, {}, {colored_nb({"v3", "v10"})},
         {3, 2, 4, 5, 5, 7, 3, 4, 5, 4, 2}, {}, 0, {2, 1, 3, 4, 4, 5, 2, 3, 4, 2, 1}, 2});
    add({"H3.case3.4", "H3", VM::CnCertificate, {}, {colored_nb({"v7", "v8"})},
         {3, 2, 3, 5, 5, 7, 4, 5, 5, 3, 2}, {}, 0, {2, 1, 2, 4, 4, 5, 2, 4, 4, 2, 1}, -3});
    add({"H3.case3.5", "H3", VM::CnCertificate, {}, {colored_nb({"v2", "v11"})},
         {3, 3, 3, 5, 5, 7, 3, 4, 5, 3, 3}, {}, 0, {2, 2, 2, 4, 4, 5, 2, 3, 4, 2, 1}, 2});
    // H2-type-two-reducible
    add({"J5.case2a", "J5", VM::Sampled, {{1, 10}}, {}, {6, 6, 4, 5, 4, 4, 5, 4, 6, 6}});
    add({"J5.case2b", "J5", VM::Sampled, {}, {free_nb({"v1", "v5"}, "v11")},
         {5, 6, 4, 6, 5, 4, 5, 4, 5, 4, 4}});
    // reducible-H4, Case 1 on H4
    add({"H4.sub1.2.1a", "H4", VM::Sampled, {{3, 16}}, {}, {4, 6, 6, 4, 5, 7, 7, 5, 3, 7, 5, 3, 5, 4, 4, 5, 4}});
    add({"H4.sub1.2.1b", "H4", VM::Sampled, {{3, 17}}, {}, {4, 6, 6, 4, 5, 7, 7, 5, 3, 7, 5, 3, 6, 4, 3, 3, 6}});
    add({"H4.sub1.2.2a", "H4", VM::Sampled, {{4, 15}}, {}, {4, 5, 4, 6, 6, 7, 7, 6, 3, 7, 5, 3, 5, 4, 6, 3, 3}});
    add({"H4.sub1.2.2b", "H4", VM::Sampled, {{4, 16}}, {}, {4, 5, 4, 6, 5, 7, 7, 6, 3, 7, 5, 3, 5, 4, 4, 5, 4}});
    add({"H4.sub1.2.3", "H4", VM::Sampled, {}, {free_nb({"v3", "v15"})},
         {4, 6, 5, 4, 6, 7, 7, 5, 3, 7, 5, 3, 5, 4, 5, 3, 3, 4}});
    // reducible-H4, Cases 2 and 3 on J6
    add({"J6.case2a", "J6", VM::Sampled, {{1, 14}}, {colored_nb({"v3", "v12"})},
         {6, 6, 4, 3, 4, 6, 7, 5, 3, 6, 6, 4, 4, 6}});
    add({"J6.case2b", "J6", VM::Sampled, {{1, 14}}, {}, {6, 6, 3, 3, 4, 6, 7, 5, 3, 6, 6, 3, 4, 6}});
    add({"J6.case2c", "J6", VM::Sampled, {{1, 12}}, {}, {6, 6, 3, 3, 4, 6, 7, 5, 4, 6, 6, 6, 3, 3}});
    add({"J6.case2d", "J6", VM::Sampled, {{1, 9}}, {}, {6, 6, 3, 3, 4, 6, 7, 6, 6, 6, 5, 4, 3, 3}});
    add({"J6.case3.1a", "J6", VM::Sampled, {}, {colored_nb({"v1", "v14"})},
         {4, 5, 3, 3, 3, 6, 7, 5, 3, 6, 5, 3, 3, 4}});
    add({"J6.case3.1b", "J6", VM::Sampled, {}, {colored_nb({"v1", "v12"})},
         {4, 5, 3, 3, 3, 6, 7, 5, 3, 6, 5, 4, 3, 3}});
    add({"J6.case3.1c", "J6", VM::Sampled, {}, {colored_nb({"v1", "v9"})},
         {4, 5, 3, 3, 3, 6, 7, 5, 4, 6, 5, 3, 3, 3}});
    add({"J6.case3.2a", "J6", VM::Sampled, {}, {free_nb({"v3", "v12"})},
         {3, 6, 5, 4, 3, 6, 7, 5, 4, 6, 6, 5, 3, 3, 4}});
    add({"J6.case3.2b", "J6", VM::Sampled, {}, {free_nb({"v3", "v12"}), colored_nb({"v1", "v14"}, "z")},
         {4, 6, 5, 4, 3, 6, 7, 5, 4, 6, 6, 5, 3, 4, 4}});
    add({"J6.case3.2c", "J6", VM::Sampled, {}, {free_nb({"v3", "v13"})},
         {3, 6, 5, 4, 3, 6, 7, 5, 3, 7, 5, 3, 5, 4, 4}});
    add({"J6.case3.2d", "J6", VM::Sampled, {}, {free_nb({"v3", "v13"}), colored_nb({"v4", "v14"}, "z")},
         {3, 6, 5, 5, 3, 6, 7, 5, 3, 7, 5, 3, 5, 5, 4}});
    add({"J6.case3.3a", "J6", VM::Sampled, {}, {free_nb({"v4", "v13"})},
         {3, 5, 4, 5, 3, 6, 7, 6, 3, 7, 5, 3, 5, 4, 4}});
    add({"J6.case3.3b", "J6", VM::Sampled, {},
         {free_nb({"v4", "v5"}), free_nb({"w"}, "v16"), free_nb({"v16", "v13"}, "v17")},
         {4, 5, 4, 6, 6, 7, 7, 6, 3, 7, 5, 3, 5, 4, 6, 3, 3}});
    add({"J6.case3.3c", "J6", VM::Sampled, {},
         {free_nb({"v4", "v5"}), free_nb({"v9", "v13"}, "z"), free_nb({"w", "z"}, "v16")},
         {4, 5, 4, 6, 6, 7, 7, 7, 6, 7, 5, 4, 6, 4, 6, 6, 4}});
    // reducible-H6 on H5
    add({"H5.case2", "H5", VM::CnCertificate, {{5, 6}}, {}, {4, 5, 4, 6, 6, 6, 6, 3, 3, 5, 4}, {}, 0,
         {3, 4, 2, 4, 2, 4, 3, 2, 2, 4, 3}, -5});
    add({"H5.case3.1", "H5", VM::CnCertificate, {}, {colored_nb({"v6", "v11"})},
         {3, 5, 4, 5, 3, 4, 5, 3, 3, 5, 4}, {}, 0, {2, 4, 2, 4, 2, 2, 3, 2, 2, 3, 3}, 1});
    add({"H5.case3.2", "H5", VM::CnCertificate, {}, {colored_nb({"v5", "v6"})},
         {3, 5, 4, 5, 4, 4, 5, 3, 3, 5, 3}, {}, 0, {2, 4, 2, 4, 3, 2, 3, 2, 2, 3, 2}, -1});
    add({"H5.case3.3", "H5", VM::CnCertificate, {}, {colored_nb({"v5", "v8"})},
         {3, 5, 4, 5, 4, 3, 5, 4, 3, 5, 3}, {}, 0, {2, 4, 2, 4, 3, 2, 3, 2, 2, 3, 2}, -3});
    // reducible-H7 on H6
    add({"H6.case2", "H6", VM::Sampled, {{5, 11}}, {}, {4, 6, 6, 4, 6, 6, 3, 2, 3, 6, 6}});
    add({"H6.case3.1", "H6", VM::Sampled, {}, {colored_nb({"v5", "v11"})}, {3, 6, 6, 3, 4, 5, 3, 2, 3, 5, 4}});
    add({"H6.case3.1w", "H6", VM::Sampled, {}, {free_nb({"v5", "v11"})},
         {4, 6, 6, 4, 5, 6, 3, 2, 3, 6, 5, 4}, {}, 0, {}, 0, "w is coloured together with H6"});
    add({"H6.case3.2", "H6", VM::Sampled, {}, {colored_nb({"v4", "v5"})}, {3, 6, 6, 4, 4, 5, 3, 2, 3, 5, 3}});
    add({"H6.case3.2w", "H6", VM::Sampled, {}, {free_nb({"v4", "v5"})}, {}, {}, 0, {}, 0,
         "w is coloured together with H6"});
    add({"H6.case3.3", "H6", VM::Sampled, {}, {colored_nb({"v7", "v11"})}, {3, 6, 6, 3, 3, 5, 4, 2, 3, 5, 4}});
    add({"H6.case3.4", "H6", VM::Sampled, {}, {colored_nb({"v4", "v8"})}, {3, 6, 6, 4, 3, 5, 3, 3, 3, 5, 3}});
    // cycle-six and lem-4cycle-pendent
    {
      VariantDef v{"J1.cycle-six", "J1", VM::Exhaustive, {}, {}, {3, 3, 3, 2, 3, 3}};
      v.has_constraints = true;
      d.push_back(v);
      VariantDef free{"J1.unconstrained", "J1", VM::Exhaustive, {}, {}, {3, 3, 2, 2, 3, 3}};
      free.has_constraints = true;
      free.note = "exploratory: J1 without the L(v3) != L(v4) condition";
      d.push_back(free);
      VariantDef a{"J7.a", "J7", VM::Exhaustive, {}, {}, {3, 3, 3, 3, 2}};
      a.has_constraints = true;
      a.constraints = {union_at_least({2, 3, 4}, 4)};
      d.push_back(a);
      VariantDef b{"J7.b", "J7", VM::Exhaustive, {}, {}, {2, 3, 3, 3, 2}};
      b.has_constraints = true;
      b.constraints = {union_at_least({2, 3, 4}, 4), union_at_least({1, 3}, 5)};
      d.push_back(b);
    }
    return d;
  }();
  return defs;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& lemma_table() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> t = {
      {"reducible-F2", {"F2"}},
      {"reducible-F4",
       {"W1", "W1.sub1.2.1", "W1.sub1.2.2a", "W1.sub1.2.2b", "W2", "W2.sub2.2.1", "W2.sub2.2.2-ii",
        "W2.sub2.2.2-iii", "W2.sub2.2.2-iv", "W2.sub2.2.2-v"}},
      {"reducible-H0", {"H1", "H1.case2"}},
      {"C4-share-two-edge", {"J3", "J4"}},
      {"reducible-H2", {"H2", "H2.case2", "H2.case3.1", "H2.case3.2", "H2.case3.3"}},
      {"reducible-H3",
       {"H3", "H3.case3.1.1", "H3.case3.1.2", "H3.case3.1.3", "H3.case3.2", "H3.case3.3", "H3.case3.4",
        "H3.case3.5", "H3.case2"}},
      {"H2-type-two-reducible", {"J5", "J5.case2a", "J5.case2b"}},
      {"reducible-H4",
       {"H4", "H4.sub1.2.1a", "H4.sub1.2.1b", "H4.sub1.2.2a", "H4.sub1.2.2b", "H4.sub1.2.3", "J6.case2a",
        "J6.case2b", "J6.case2c", "J6.case2d", "J6.case3.1a", "J6.case3.1b", "J6.case3.1c", "J6.case3.2a",
        "J6.case3.2b", "J6.case3.2c", "J6.case3.2d", "J6.case3.3a", "J6.case3.3b", "J6.case3.3c"}},
      {"reducible-H6", {"H5", "H5.case2", "H5.case3.1", "H5.case3.2", "H5.case3.3"}},
      {"reducible-H7",
       {"H6", "H6.case2", "H6.case3.1", "H6.case3.1w", "H6.case3.2", "H6.case3.2w", "H6.case3.3",
        "H6.case3.4"}},
      {"cycle-six-original", {"J1"}},
      {"cycle-six-original-second", {"J2"}},
      {"cycle-six", {"J1.cycle-six"}},
      {"lem-4cycle-pendent", {"J7.a", "J7.b"}},
      {"lem-two-4cycle", {"J8"}},
      {"C3-C6", {}},
      {"6-face", {}},
  };
  return t;
}

const BaseDef* find_base(const std::string& name) {
  for (const auto& b : base_defs())
    if (b.name == name) return &b;
  return nullptr;
}

int vertex_by_label(const Graph& g, const std::string& label) {
  auto v = g.find_label(label);
  if (!v) throw std::logic_error("catalog: missing vertex " + label);
  return *v;
}

Configuration from_base(const BaseDef& b) {
  Configuration c;
  c.name = b.name;
  c.lemma = b.lemma;
  c.note = b.note;
  c.pattern = Graph(b.n);
  for (int i = 0; i < b.n; ++i) c.pattern.set_label(i, "v" + std::to_string(i + 1));
  for (auto [u, v] : b.edges) c.pattern.add_edge(u - 1, v - 1);
  for (int i = 0; i < b.n; ++i) c.colored.push_back(i);
  c.mode = b.mode;
  for (const auto& f : b.faces) {
    std::vector<int> cyc;
    for (int v : f) cyc.push_back(v - 1);
    c.face_cycles.push_back(cyc);
  }
  c.constraints = b.constraints;
  c.auditable = b.auditable;
  if (b.sizes.empty()) {
    c.sizes_from_figure = false;
    c.list_sizes = audit_sizes(c);
  } else {
    c.list_sizes = b.sizes;
  }
  return c;
}

Configuration from_variant(const VariantDef& v) {
  const BaseDef* b = find_base(v.base);
  Configuration base = from_base(*b);
  Configuration c;
  c.name = v.name;
  c.lemma = b->lemma;
  c.note = v.note;
  c.mode = v.mode;
  c.auditable = b->auditable;
  int n = v.restrict_n > 0 ? v.restrict_n : b->n;
  std::vector<int> keep(n);
  for (int i = 0; i < n; ++i) keep[i] = i;
  c.pattern = base.pattern.induced(keep);
  for (auto [x, y] : v.add_edges) c.pattern.add_edge(x - 1, y - 1);
  for (const auto& e : v.extras) c.pattern.add_vertex(e.label);
  for (const auto& e : v.extras) {
    int w = vertex_by_label(c.pattern, e.label);
    for (const auto& nb : e.nbrs) c.pattern.add_edge(w, vertex_by_label(c.pattern, nb));
  }
  for (int i = 0; i < n; ++i)
    if (std::find(v.skip.begin(), v.skip.end(), i + 1) == v.skip.end()) c.colored.push_back(i);
  for (const auto& e : v.extras)
    if (e.to_color) c.colored.push_back(vertex_by_label(c.pattern, e.label));
  c.constraints = v.has_constraints ? v.constraints : b->constraints;
  if (!v.t.empty()) c.certificate = CertificateSpec{v.t, v.expected};
  if (v.sizes.empty()) {
    c.sizes_from_figure = false;
    c.list_sizes = audit_sizes(c);
  } else {
    c.list_sizes = v.sizes;
  }
  if (c.list_sizes.size() != c.colored.size())
    throw std::logic_error("catalog: size vector length mismatch for " + v.name);
  return c;
}

}  // namespace

std::string to_string(VerificationMode m) {
  switch (m) {
    case VM::CnCertificate: return "cn-certificate";
    case VM::Exhaustive: return "exhaustive";
    case VM::Sampled: return "sampled";
    case VM::DetectionOnly: return "detection-only";
  }
  return "?";
}

std::string ListConstraint::describe(const std::vector<std::string>& names) const {
  std::ostringstream os;
  auto nm = [&](int i) { return i < static_cast<int>(names.size()) ? names[i] : std::to_string(i); };
  if (kind == Kind::ListsDiffer) {
    os << "L(" << nm(vertices.at(0)) << ")!=L(" << nm(vertices.at(1)) << ")";
  } else {
    os << "|";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "+" : "") << "L(" << nm(vertices[i]) << ")";
    os << "|>=" << bound;
  }
  return os.str();
}

Graph Configuration::coloring_graph() const { return square(pattern).induced(colored); }

std::vector<std::string> Configuration::colored_names() const {
  std::vector<std::string> out;
  for (int v : colored) out.push_back(pattern.name(v));
  return out;
}

const std::vector<std::string>& base_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& b : base_defs()) n.push_back(b.name);
    return n;
  }();
  return names;
}

std::vector<std::string> all_names() {
  std::vector<std::string> out = base_names();
  for (const auto& v : variant_defs()) out.push_back(v.name);
  return out;
}

Configuration build_config(const std::string& name) {
  if (const BaseDef* b = find_base(name)) {
    Configuration c = from_base(*b);
    if (name == "H3") c.certificate = CertificateSpec{{2, 1, 2, 4, 4, 5, 2, 3, 4, 2, 1}, 2};
    if (name == "H5") c.certificate = CertificateSpec{{2, 4, 2, 4, 2, 2, 3, 2, 2, 3, 2}, -2};
    if (name == "H4")
      c.note += "; Case 3 is covered by the ten subcases J6.case3.*";
    return c;
  }
  for (const auto& v : variant_defs())
    if (v.name == name) return from_variant(v);
  throw UnknownConfiguration(name);
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, _] : lemma_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerificationMode lemma_mode(const std::string& id) {
  if (id == "C3-C6" || id == "6-face") return VM::DetectionOnly;
  if (id == "reducible-H3" || id == "reducible-H6") return VM::CnCertificate;
  if (id == "cycle-six-original" || id == "cycle-six-original-second" || id == "cycle-six" ||
      id == "lem-4cycle-pendent" || id == "lem-two-4cycle")
    return VM::Exhaustive;
  for (const auto& [lid, _] : lemma_table())
    if (lid == id) return VM::Sampled;
  throw UnknownLemma(id);
}

std::vector<std::string> lemma_variants(const std::string& id) {
  for (const auto& [lid, vs] : lemma_table())
    if (lid == id) return vs;
  throw UnknownLemma(id);
}

std::vector<int> audit_sizes(const Configuration& cfg) {
  const Graph& p = cfg.pattern;
  std::vector<char> is_colored(p.order(), 0);
  for (int v : cfg.colored) is_colored[v] = 1;
  std::vector<int> deficit(p.order());
  for (int v = 0; v < p.order(); ++v) deficit[v] = std::max(0, 3 - p.degree(v));
  std::vector<int> out;
  for (int v : cfg.colored) {
    auto dist = bfs_distances(p, v);
    int s = 7 - 3 * deficit[v];
    for (int u = 0; u < p.order(); ++u)
      if (!is_colored[u] && dist[u] >= 1 && dist[u] <= 2) --s;
    for (int u : p.neighbors(v)) s -= deficit[u];
    out.push_back(s);
  }
  return out;
}

std::string export_catalog_text() {
  std::ostringstream os;
  for (const auto& name : all_names()) {
    Configuration c = build_config(name);
    os << "name: " << c.name << "\n";
    os << "lemma: " << c.lemma << "\n";
    os << "mode: " << to_string(c.mode) << "\n";
    os << "vertices:";
    for (int v = 0; v < c.pattern.order(); ++v) os << ' ' << c.pattern.name(v);
    os << "\nedges:";
    for (auto [u, v] : c.pattern.edges()) os << ' ' << c.pattern.name(u) << '-' << c.pattern.name(v);
    os << "\ncolored:";
    auto names = c.colored_names();
    for (std::size_t i = 0; i < names.size(); ++i) os << ' ' << names[i] << '=' << c.list_sizes[i];
    os << "\nsizes_from_figure: " << (c.sizes_from_figure ? "yes" : "no (audit)") << "\n";
    if (!c.constraints.empty()) {
      os << "constraints:";
      for (const auto& k : c.constraints) os << ' ' << k.describe(names);
      os << "\n";
    }
    if (!c.face_cycles.empty()) {
      os << "faces:";
      for (const auto& f : c.face_cycles) {
        os << " [";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << c.pattern.name(f[i]);
        os << "]";
      }
      os << "\n";
    }
    if (c.certificate) {
      os << "certificate:";
      for (int t : c.certificate->exponents) os << ' ' << t;
      os << " -> " << c.certificate->expected << "\n";
    }
    if (c.auditable) {
      auto a = audit_sizes(c);
      os << "audit:";
      for (std::size_t i = 0; i < a.size(); ++i)
        os << ' ' << (a[i] == c.list_sizes[i] ? "" : "*") << a[i];
      os << "\n";
    }
    if (!c.note.empty()) os << "note: " << c.note << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace sq7
