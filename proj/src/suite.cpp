#include "sq7/suite.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "sq7/catalog.hpp"
#include "sq7/corpus.hpp"
#include "sq7/discharging.hpp"
#include "sq7/errors.hpp"
#include "sq7/lemmas.hpp"
#include "sq7/nullstellensatz.hpp"
#include "sq7/scan.hpp"

namespace sq7 {

namespace {

using Json = nlohmann::ordered_json;

std::string charge_string(const Charge& c) {
  std::ostringstream os;
  os << c.numerator();
  if (c.denominator() != 1) os << '/' << c.denominator();
  return os.str();
}

struct Collector {
  SuiteResult& out;
  std::ostringstream table;

  void add(Json r, bool ok, const std::string& item) {
    out.records.push_back(std::move(r));
    if (!ok && out.ok) {
      out.ok = false;
      out.first_failure = item;
    }
  }
};

void certificates(Collector& c, const SuiteOptions& opts) {
  c.table << "certificates\n";
  for (const std::string lemma : {"reducible-H3", "reducible-H6"})
    for (const auto& cert : certificate_suite(lemma)) {
      Json r;
      r["suite"] = "certificates";
      r["lemma"] = cert.lemma;
      r["variant"] = cert.config;
      r["monomial"] = monomial_string(cert.monomial);
      r["coefficient"] = cert.coefficient;
      r["expected"] = *cert.expected;
      r["agreement"] = cert.agreement;
      r["verdict"] = cert.pass ? "pass" : "fail";
      if (opts.timing) r["wall_ms"] = cert.wall_ms;
      const bool ok = cert.pass && cert.agreement != "mismatch";
      c.table << "  " << std::left << std::setw(14) << cert.lemma << std::setw(12) << cert.config << std::right
              << std::setw(5) << cert.coefficient << std::setw(5) << *cert.expected << "  " << cert.agreement << '\n';
      c.add(std::move(r), ok, cert.lemma + "/" + cert.config);
    }
}

void lemmas(Collector& c, const SuiteOptions& opts) {
  c.table << "lemmas\n";
  LemmaOptions lo;
  lo.trials = opts.trials;
  lo.seed = opts.seed;
  lo.timing = opts.timing;
  for (const auto& id : lemma_ids()) {
    if (lemma_mode(id) == VerificationMode::DetectionOnly) {
      Json r;
      r["suite"] = "lemmas";
      r["lemma"] = id;
      r["mode"] = "detection-only";
      r["verdict"] = "not-verified";
      c.table << "  " << std::left << std::setw(28) << id << "detection-only\n";
      c.add(std::move(r), true, id);
      continue;
    }
    const LemmaReport rep = verify_lemma(id, lo);
    std::size_t variants = 0;
    for (Json r : rep.records) {
      ++variants;
      Json tagged;
      tagged["suite"] = "lemmas";
      for (auto& [k, v] : r.items()) tagged[k] = v;
      c.add(std::move(tagged), true, id);
    }
    if (!rep.ok && c.out.ok) {
      c.out.ok = false;
      c.out.first_failure = id + "/" + rep.first_failure;
    }
    c.table << "  " << std::left << std::setw(28) << id << std::setw(16) << to_string(rep.mode) << std::setw(4)
            << variants << (rep.ok ? "ok" : "FAILED at " + rep.first_failure) << '\n';
  }
}

void discharging(Collector& c, const SuiteOptions&) {
  c.table << "discharging minima\n";
  for (int d = 3; d <= 14; ++d) {
    const LocalCaseSummary s = local_case_minimum(d);
    Json r;
    r["suite"] = "discharging";
    r["d"] = d;
    if (s.closed_form) {
      r["method"] = "closed-form";
    } else {
      r["method"] = "enumeration";
      r["cases"] = s.cases;
    }
    r["minimum"] = s.minimum ? charge_string(*s.minimum) : "none";
    if (s.argmin) r["argmin"] = s.argmin->describe();
    const bool ok = !s.minimum || *s.minimum >= Charge(0);
    c.table << "  d=" << std::left << std::setw(4) << d << std::setw(8) << (s.minimum ? charge_string(*s.minimum) : "-")
            << (s.closed_form ? "closed form" : std::to_string(s.cases) + " cases") << '\n';
    c.add(std::move(r), ok, "d=" + std::to_string(d));
  }
  c.table << "discharging on built-in embeddings\n";
  for (const auto& [name, pg] : builtin_embedded()) {
    Json r;
    r["suite"] = "discharging";
    r["graph"] = name;
    const ChargeLedger init = initial_charges(pg);
    r["initial_total"] = charge_string(init.total());
    bool ok = init.total() == Charge(-12);
    const ChargeLedger after = apply_rules(pg, init);
    r["final_total"] = charge_string(after.total());
    ok = ok && after.total() == init.total();
    try {
      verify_graph_discharge(pg);
      r["outcome"] = "hypotheses-hold";
      ok = false;  // no graph satisfying every hypothesis should exist
    } catch (const HypothesisViolation& e) {
      r["outcome"] = "hypothesis-violation";
      r["hypothesis"] = e.hypothesis;
    }
    c.table << "  " << std::left << std::setw(14) << name << "total " << charge_string(init.total()) << "  "
            << r["outcome"].get<std::string>() << ' ' << (r.contains("hypothesis") ? r["hypothesis"].get<std::string>() : "")
            << '\n';
    c.add(std::move(r), ok, name);
  }
}

void scan(Collector& c, const SuiteOptions& opts) {
  std::vector<Graph> graphs;
  std::vector<std::string> ids;
  for (auto& [name, g] : builtin_graphs()) {
    graphs.push_back(g);
    ids.push_back(name);
  }
  ScanOptions so;
  so.jobs = opts.jobs;
  so.timing = opts.timing;
  c.table << "scan (built-in corpus)\n";
  for (const auto& rec : scan_graphs(graphs, ids, so)) {
    Json r;
    r["suite"] = "scan";
    const Json fields = rec.to_json(opts.timing);
    for (auto& [k, v] : fields.items()) r[k] = v;
    c.table << "  " << std::left << std::setw(14) << rec.id
            << (rec.kept ? "kept chi(G2)=" + std::to_string(rec.chi_square) : "rejected " + rec.reason) << '\n';
    c.add(std::move(r), !rec.kept || rec.pass, rec.id);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"certificates", "lemmas", "discharging", "scan", "all"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteResult out;
  Collector c{out, {}};
  bool known = false;
  if (name == "certificates" || name == "all") {
    certificates(c, opts);
    known = true;
  }
  if (name == "lemmas" || name == "all") {
    lemmas(c, opts);
    known = true;
  }
  if (name == "discharging" || name == "all") {
    discharging(c, opts);
    known = true;
  }
  if (name == "scan" || name == "all") {
    scan(c, opts);
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite: " + name);
  c.table << (out.ok ? "all checks passed\n" : "FAILED: " + out.first_failure + "\n");
  out.summary = c.table.str();
  return out;
}

}  // namespace sq7
