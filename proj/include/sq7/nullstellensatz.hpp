#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sq7/graph.hpp"
#include "sq7/poly.hpp"

namespace sq7 {

/// The factor x_first - x_second.
struct LinearFactor {
  int first;
  int second;
};

/// Factored graph polynomial: one factor per edge, edges in lexicographic
/// (min,max) order, each oriented from the earlier vertex of `order`.
struct GraphPolynomial {
  int nvars = 0;
  std::vector<LinearFactor> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  /// Every factor is x_a - x_b with a != b, so the product is homogeneous of degree().
  bool structurally_homogeneous() const;
  SparsePoly expand() const;
  /// Product of factor values at x; nonzero iff x is a proper colouring.
  Coeff evaluate(const std::vector<Coeff>& x) const;
};

/// `order` lists the vertices from first to last; empty means 0 < 1 < ... < n-1.
GraphPolynomial graph_polynomial(const Graph& g, const std::vector<int>& order = {});

/// Exact coefficient of prod x_i^{t_i}. Returns 0 when sum(t) != |E|.
/// Cap-pruned sparse expansion.
Coeff coefficient(const Graph& g, const std::vector<int>& order, const Exponents& t);
Coeff coefficient(const GraphPolynomial& p, const Exponents& t);

/// Dense mixed-radix table over [0,t_1]x...x[0,t_n], OpenMP-parallel per
/// factor. Cross-check kernel; throws SizeBound above kDenseCellLimit cells.
Coeff coefficient_dense(const GraphPolynomial& p, const Exponents& t);
/// Sparse expansion dropping terms with e_i > t_i. Serial.
Coeff coefficient_sparse(const GraphPolynomial& p, const Exponents& t);

inline constexpr std::size_t kDenseCellLimit = 8'000'000;

struct Certificate {
  std::string lemma;
  std::string config;
  Exponents monomial;
  Coeff coefficient = 0;
  std::vector<int> sizes;
  bool pass = false;
  std::optional<Coeff> expected;
  /// "exact", "sign-flip", "mismatch", or "none" when nothing is expected.
  std::string agreement = "none";
  double wall_ms = 0;

  /// Deterministic one-line record (no timing).
  std::string to_record() const;
};

/// Throws ExponentExceedsList if some t_v >= sizes_v.
Certificate cn_certificate(const Graph& g, const std::vector<int>& sizes, const Exponents& t);

/// Certificates stated for reducible-H3 (8) or reducible-H6 (5); others throw UnknownLemma.
std::vector<Certificate> certificate_suite(const std::string& lemma_id);

}  // namespace sq7
