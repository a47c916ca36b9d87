#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sq7/catalog.hpp"
#include "sq7/graph.hpp"

namespace sq7 {

/// Bit c set means colour c is available; colours are 0..63.
using ColorSet = std::uint64_t;
using Coloring = std::vector<int>;

struct ListAssignment {
  std::vector<ColorSet> lists;

  static ListAssignment from_sets(const std::vector<std::vector<int>>& sets);
  std::vector<std::vector<int>> to_sets() const;
  int size(int v) const;
  /// "{1,2,3} {1,2} ..."
  std::string to_string() const;
  bool operator==(const ListAssignment&) const = default;
};

bool satisfies(const ListAssignment& L, const std::vector<ListConstraint>& constraints);
bool is_proper_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& c);

/// Complete backtracking with minimum-remaining-values ordering. n <= 64.
class ListColorer {
 public:
  explicit ListColorer(const Graph& g);
  int order() const { return n_; }
  /// lists has order() entries. Writes the colouring to `out` when non-null.
  bool colorable(const ColorSet* lists, int* out = nullptr) const;

 private:
  bool search(ColorSet* dom, std::uint64_t open, int* out) const;
  int n_;
  std::vector<std::uint64_t> adj_;
};

std::optional<Coloring> solve_list_coloring(const Graph& g, const ListAssignment& L);

/// Least available colour in `order`; nullopt at the first stuck vertex.
std::optional<Coloring> greedy_color(const Graph& g, const std::vector<int>& order, const ListAssignment& L);

struct SdrResult {
  bool found = false;
  std::vector<int> representatives;  // one per set when found
  std::vector<int> violating;        // set indices S with |N(S)| < |S| otherwise
};

SdrResult hall_sdr(const std::vector<std::vector<int>>& sets);

/// Visits at least one representative of every colour-renaming class of list
/// assignments with exactly the given sizes and satisfying `constraints`
/// (some classes are visited more than once). Colours
/// 1..named are fixed (never renamed); other colours start at named+1 and
/// each list, read in sorted order, exceeds the running maximum by at most 1.
/// Stops early when visit returns false.
void enumerate_canonical_lists(const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                               const std::function<bool(const ListAssignment&)>& visit, int named = 0);

std::uint64_t count_canonical_lists(const std::vector<int>& sizes,
                                    const std::vector<ListConstraint>& constraints, int named = 0);

/// A canonical assignment of the first `depth` vertices, for splitting work.
struct CanonicalPrefix {
  ListAssignment partial;  // entries past depth are 0
  int depth = 0;
  int max_color = 0;
};

/// Canonical prefixes in enumeration order; constraints wholly inside the
/// prefix are already enforced.
std::vector<CanonicalPrefix> canonical_prefixes(const std::vector<int>& sizes,
                                                const std::vector<ListConstraint>& constraints, int depth,
                                                int named = 0);

/// Visits the canonical completions of `prefix` in enumeration order.
void enumerate_canonical_extensions(const std::vector<int>& sizes, const std::vector<ListConstraint>& constraints,
                                    const CanonicalPrefix& prefix,
                                    const std::function<bool(const ListAssignment&)>& visit);

/// Constraint-free count by dynamic programming over the running maximum.
double estimate_canonical_count(const std::vector<int>& sizes, int named = 0);

}  // namespace sq7
