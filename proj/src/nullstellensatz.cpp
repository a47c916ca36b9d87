#include "sq7/nullstellensatz.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sq7/catalog.hpp"

namespace sq7 {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

bool GraphPolynomial::structurally_homogeneous() const {
  for (const auto& f : factors)
    if (f.first == f.second || f.first < 0 || f.second < 0 || f.first >= nvars || f.second >= nvars)
      return false;
  return true;
}

SparsePoly GraphPolynomial::expand() const {
  SparsePoly p = SparsePoly::constant(nvars, 1);
  for (const auto& f : factors)
    p = p * (SparsePoly::variable(nvars, f.first) - SparsePoly::variable(nvars, f.second));
  return p;
}

Coeff GraphPolynomial::evaluate(const std::vector<Coeff>& x) const {
  Coeff r = 1;
  for (const auto& f : factors) r = checked_mul(r, checked_sub(x.at(f.first), x.at(f.second)));
  return r;
}

GraphPolynomial graph_polynomial(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> rank(n);
  if (order.empty()) {
    std::iota(rank.begin(), rank.end(), 0);
  } else {
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (order[i] < 0 || order[i] >= n || seen[order[i]])
        throw std::invalid_argument("order is not a permutation");
      seen[order[i]] = 1;
      rank[order[i]] = i;
    }
  }
  GraphPolynomial p;
  p.nvars = n;
  for (auto [u, v] : g.edges()) {
    if (rank[u] < rank[v]) p.factors.push_back({u, v});
    else p.factors.push_back({v, u});
  }
  return p;
}

Coeff coefficient_dense(const GraphPolynomial& p, const Exponents& t) {
  const int n = p.nvars;
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("monomial length mismatch");
  if (std::accumulate(t.begin(), t.end(), 0L) != p.degree()) return 0;
  std::vector<std::int64_t> stride(n), radix(n);
  std::int64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    if (t[i] < 0) return 0;
    stride[i] = cells;
    radix[i] = t[i] + 1;
    cells *= radix[i];
    if (cells > static_cast<std::int64_t>(kDenseCellLimit)) throw SizeBound("dense coefficient table too large");
  }
  std::vector<Coeff> cur(cells, 0), next(cells, 0);
  cur[0] = 1;
  for (const auto& f : p.factors) {
    const std::int64_t sa = stride[f.first], ra = radix[f.first];
    const std::int64_t sb = stride[f.second], rb = radix[f.second];
    int overflow = 0;
#pragma omp parallel for schedule(static) reduction(| : overflow)
    for (std::int64_t idx = 0; idx < cells; ++idx) {
      Coeff v = 0;
      if ((idx / sa) % ra > 0) v = cur[idx - sa];
      if ((idx / sb) % rb > 0) overflow |= __builtin_sub_overflow(v, cur[idx - sb], &v);
      next[idx] = v;
    }
    if (overflow) throw OverflowError("coefficient exceeds 64-bit range");
    cur.swap(next);
  }
  return cur[cells - 1];
}

Coeff coefficient_sparse(const GraphPolynomial& p, const Exponents& t) {
  const int n = p.nvars;
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("monomial length mismatch");
  if (std::accumulate(t.begin(), t.end(), 0L) != p.degree()) return 0;
  for (int x : t)
    if (x < 0 || x > 255) return 0;
  using Key = std::vector<std::uint8_t>;
  std::unordered_map<Key, Coeff, VecHash> cur, next;
  cur.emplace(Key(n, 0), 1);
  for (const auto& f : p.factors) {
    next.clear();
    for (const auto& [e, c] : cur) {
      if (e[f.first] < t[f.first]) {
        Key k = e;
        ++k[f.first];
        Coeff& slot = next[k];
        slot = checked_add(slot, c);
      }
      if (e[f.second] < t[f.second]) {
        Key k = e;
        ++k[f.second];
        Coeff& slot = next[k];
        slot = checked_sub(slot, c);
      }
    }
    cur.swap(next);
  }
  Key target(t.begin(), t.end());
  auto it = cur.find(target);
  return it == cur.end() ? 0 : it->second;
}

Coeff coefficient(const GraphPolynomial& p, const Exponents& t) { return coefficient_sparse(p, t); }

Coeff coefficient(const Graph& g, const std::vector<int>& order, const Exponents& t) {
  return coefficient(graph_polynomial(g, order), t);
}

std::string Certificate::to_record() const {
  std::ostringstream os;
  os << "lemma=" << lemma << " config=" << config << " monomial=" << monomial_string(monomial)
     << " coefficient=" << coefficient;
  if (expected) os << " expected=" << *expected << " agreement=" << agreement;
  os << " verdict=" << (pass ? "pass" : "fail");
  return os.str();
}

Certificate cn_certificate(const Graph& g, const std::vector<int>& sizes, const Exponents& t) {
  if (static_cast<int>(sizes.size()) != g.order() || static_cast<int>(t.size()) != g.order())
    throw std::invalid_argument("sizes and monomial must be indexed by V(g)");
  for (int v = 0; v < g.order(); ++v)
    if (t[v] >= sizes[v]) throw ExponentExceedsList(v, t[v], sizes[v]);
  auto start = std::chrono::steady_clock::now();
  Certificate c;
  c.monomial = t;
  c.sizes = sizes;
  c.coefficient = coefficient(g, {}, t);
  c.pass = c.coefficient != 0;
  c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<Certificate> certificate_suite(const std::string& lemma_id) {
  if (lemma_id != "reducible-H3" && lemma_id != "reducible-H6") throw UnknownLemma(lemma_id);
  std::vector<Certificate> out;
  for (const auto& name : lemma_variants(lemma_id)) {
    Configuration cfg = build_config(name);
    if (!cfg.certificate) continue;
    Certificate c = cn_certificate(cfg.coloring_graph(), cfg.list_sizes, cfg.certificate->exponents);
    c.lemma = lemma_id;
    c.config = name;
    c.expected = cfg.certificate->expected;
    if (c.coefficient == *c.expected) c.agreement = "exact";
    else if (c.coefficient == -*c.expected) c.agreement = "sign-flip";
    else c.agreement = "mismatch";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sq7
