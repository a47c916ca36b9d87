#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sq7/errors.hpp"

namespace sq7 {

using Coeff = std::int64_t;
using Exponents = std::vector<int>;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Exact multivariate polynomial with int64 coefficients. Every arithmetic
/// step is overflow-checked. No zero coefficients are stored.
class SparsePoly {
 public:
  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}
  static SparsePoly constant(int nvars, Coeff c);
  static SparsePoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, Coeff c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  bool operator==(const SparsePoly& o) const = default;

  /// Degree shared by all terms, or nullopt if not homogeneous (or zero).
  std::optional<int> homogeneous_degree() const;
  Coeff evaluate(const std::vector<Coeff>& point) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponents, Coeff> terms_;
};

std::string monomial_string(const Exponents& e);

}  // namespace sq7
