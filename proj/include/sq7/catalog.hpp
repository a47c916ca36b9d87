#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sq7/graph.hpp"
#include "sq7/plane_graph.hpp"

namespace sq7 {

enum class VerificationMode { CnCertificate, Exhaustive, Sampled, DetectionOnly };

std::string to_string(VerificationMode m);

/// Side condition on a list assignment. Vertex indices refer to positions in
/// Configuration::colored.
struct ListConstraint {
  enum class Kind { ListsDiffer, UnionAtLeast };
  Kind kind = Kind::ListsDiffer;
  std::vector<int> vertices;
  int bound = 0;  // UnionAtLeast only

  std::string describe(const std::vector<std::string>& names) const;
};

struct CertificateSpec {
  std::vector<int> exponents;  // indexed like Configuration::colored
  long long expected = 0;
};

struct Configuration {
  std::string name;
  std::string lemma;
  std::string note;
  /// Local graph. Vertices outside `colored` are already coloured neighbours
  /// (typically the common neighbours w, z of the case analysis).
  Graph pattern;
  /// Pattern vertices to colour; this order is the variable order.
  std::vector<int> colored;
  /// Parallel to `colored`.
  std::vector<int> list_sizes;
  bool sizes_from_figure = true;
  std::vector<ListConstraint> constraints;
  VerificationMode mode = VerificationMode::Sampled;
  /// Cycles (pattern vertex indices) that must bound faces. Empty: pure subgraph.
  std::vector<std::vector<int>> face_cycles;
  std::optional<CertificateSpec> certificate;
  /// False for abstract lemma graphs whose lists are not neighbourhood counts.
  bool auditable = true;

  /// square(pattern) induced on `colored`, relabelled in colouring order.
  Graph coloring_graph() const;
  std::vector<std::string> colored_names() const;
  bool face_based() const { return !face_cycles.empty(); }
};

/// The named base configurations (21 figure patterns).
const std::vector<std::string>& base_names();
/// Every buildable name: base names plus case variants.
std::vector<std::string> all_names();

/// Throws UnknownConfiguration.
Configuration build_config(const std::string& name);

/// Lemma identifiers in report order, including the detection-only ones.
const std::vector<std::string>& lemma_ids();
VerificationMode lemma_mode(const std::string& lemma_id);  // throws UnknownLemma
/// Variant names checked for a lemma, in report order. Throws UnknownLemma.
std::vector<std::string> lemma_variants(const std::string& lemma_id);

/// Recomputes list sizes from local degrees:
/// 7 - #(uncoloured pattern vertices within distance 2)
///   - 3*deficit(v) - sum of deficit(u) over pattern neighbours u,
/// where deficit(u) = 3 - deg_pattern(u).
std::vector<int> audit_sizes(const Configuration& cfg);

/// One record per configuration, deterministic order.
std::string export_catalog_text();

/// Injective map pattern vertex -> host vertex.
struct Occurrence {
  std::vector<int> mapping;
  bool operator==(const Occurrence&) const = default;
};

/// All occurrences of cfg.pattern in host, one per pattern-automorphism class.
/// Face-based configurations additionally require each mapped face cycle to
/// bound a face of host.
std::vector<Occurrence> find_occurrences(const PlaneGraph& host, const Configuration& cfg);

/// Pure-subgraph variant for unembedded hosts (face cycles ignored).
std::vector<Occurrence> find_subgraph_occurrences(const Graph& host, const Graph& pattern);

/// Automorphisms of g as permutations.
std::vector<std::vector<int>> automorphisms(const Graph& g);

}  // namespace sq7
