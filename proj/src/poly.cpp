#include "sq7/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sq7 {

SparsePoly SparsePoly::constant(int nvars, Coeff c) {
  SparsePoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  SparsePoly p(nvars);
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

Coeff SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Exponents& e, Coeff c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, checked_sub(0, c));
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  SparsePoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  return r;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

Coeff SparsePoly::evaluate(const std::vector<Coeff>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point length mismatch");
  Coeff total = 0;
  for (const auto& [e, c] : terms_) {
    Coeff t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t = checked_mul(t, x[i]);
    total = checked_add(total, t);
  }
  return total;
}

std::string monomial_string(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coeff c = it->second;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    Coeff a = c < 0 ? -c : c;
    bool unit = std::all_of(it->first.begin(), it->first.end(), [](int x) { return x == 0; });
    if (a != 1 || unit) os << a << (unit ? "" : "*");
    if (!unit) os << monomial_string(it->first);
    first = false;
  }
  return os.str();
}

}  // namespace sq7
