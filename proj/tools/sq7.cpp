// Command-line front end for the certificate, lemma, discharging and scan suites.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sq7/catalog.hpp"
#include "sq7/discharging.hpp"
#include "sq7/errors.hpp"
#include "sq7/formats.hpp"
#include "sq7/lemmas.hpp"
#include "sq7/nullstellensatz.hpp"
#include "sq7/scan.hpp"
#include "sq7/suite.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace sq7;

/// Accepts "x1^2*x3" (variables indexed from 1) or "2,0,1,...".
Exponents parse_monomial(const std::string& text, int nvars) {
  Exponents t(nvars, 0);
  if (text.find('x') == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= t.size()) throw std::invalid_argument("monomial has more entries than variables");
      t[i++] = std::stoi(item);
    }
    if (i != t.size()) throw std::invalid_argument("monomial has fewer entries than variables");
    return t;
  }
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.empty() || factor[0] != 'x') throw std::invalid_argument("bad monomial factor: " + factor);
    const auto caret = factor.find('^');
    const int var = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    const int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    if (var < 1 || var > nvars) throw std::invalid_argument("variable out of range: " + factor);
    t[var - 1] += exp;
  }
  return t;
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::runtime_error("cannot open " + path);
    os = file.get();
  }
  void line(const Json& j) { *os << j.dump() << '\n'; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-colouring verification toolkit for subcubic planar graphs"};
  app.require_subcommand(1);
  std::string out_path;
  bool timing = false;
  bool summary = false;
  app.add_option("--out", out_path, "Report file (default: standard output)");
  app.add_flag("--timing", timing, "Include wall-clock fields in records");
  app.add_flag("--summary", summary, "Print a human-readable table instead of records");

  std::string config_name, monomial;
  auto* coeff = app.add_subcommand("coeff", "Coefficient of a monomial in a configuration's graph polynomial");
  coeff->add_option("config", config_name)->required();
  coeff->add_option("monomial", monomial, "x1^2*x2 or a comma-separated exponent vector")->required();

  std::string lemma_id;
  auto* certify = app.add_subcommand("certify", "Coefficient certificates of a lemma");
  certify->add_option("lemma", lemma_id)->required();

  std::string mode;
  std::uint64_t trials = 100'000, seed = 0;
  auto* lemma = app.add_subcommand("lemma", "Verify a reducibility lemma over all its case variants");
  lemma->add_option("id", lemma_id)->required();
  lemma->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  lemma->add_option("--trials", trials);
  lemma->add_option("--seed", seed);

  int local_d = 0;
  std::string graph_path;
  auto* discharge = app.add_subcommand("discharge", "Local face cases or a whole embedded graph");
  auto* local_opt = discharge->add_option("--local", local_d, "Centre face length");
  auto* graph_opt = discharge->add_option("--graph", graph_path, "planar_code file");
  local_opt->excludes(graph_opt);

  std::string scan_path;
  int jobs = 0;
  auto* scan = app.add_subcommand("scan", "Scan a graph6 corpus for chi(G^2) <= 7");
  scan->add_option("file", scan_path, "graph6 file, or - for standard input")->required();
  scan->add_option("--jobs", jobs, "Worker threads (default: all processors)");

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run a named suite");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--trials", trials);
  suite->add_option("--seed", seed);
  suite->add_option("--jobs", jobs);

  auto* catalog = app.add_subcommand("catalog", "Print the configuration catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(out_path);
    if (*coeff) {
      const Configuration cfg = build_config(config_name);
      const Graph g = cfg.coloring_graph();
      const Exponents t = parse_monomial(monomial, g.order());
      Json r;
      r["config"] = cfg.name;
      r["monomial"] = monomial_string(t);
      r["degree"] = static_cast<long long>(g.size());
      r["coefficient"] = coefficient(g, {}, t);
      out.line(r);
      return 0;
    }
    if (*certify) {
      bool ok = true;
      for (const auto& c : certificate_suite(lemma_id)) {
        if (summary) *out.os << c.to_record() << '\n';
        else {
          Json r;
          r["lemma"] = c.lemma;
          r["variant"] = c.config;
          r["monomial"] = monomial_string(c.monomial);
          r["coefficient"] = c.coefficient;
          r["expected"] = *c.expected;
          r["agreement"] = c.agreement;
          r["verdict"] = c.pass ? "pass" : "fail";
          if (timing) r["wall_ms"] = c.wall_ms;
          out.line(r);
        }
        ok = ok && c.pass && c.agreement != "mismatch";
      }
      return ok ? 0 : 1;
    }
    if (*lemma) {
      LemmaOptions lo;
      if (mode == "exhaustive") lo.mode = CheckMode::Exhaustive;
      if (mode == "sampled") lo.mode = CheckMode::Sampled;
      lo.trials = trials;
      lo.seed = seed;
      lo.timing = timing;
      const LemmaReport rep = verify_lemma(lemma_id, lo);
      for (const auto& r : rep.records) {
        if (summary)
          *out.os << r["variant"].get<std::string>() << '\t' << r["mode"].get<std::string>() << '\t'
                  << r["verdict"].get<std::string>() << '\n';
        else out.line(r);
      }
      if (!rep.ok) std::cerr << "failed: " << rep.first_failure << '\n';
      return rep.ok ? 0 : 1;
    }
    if (*discharge) {
      if (*graph_opt) {
        std::ifstream in(graph_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + graph_path);
        int index = 0;
        for (const auto& pg : read_planar_code(in)) {
          Json r;
          r["index"] = index++;
          r["n"] = pg.graph().order();
          try {
            const DischargeReport rep = verify_graph_discharge(pg);
            r["outcome"] = "hypotheses-hold";
            r["nonnegative"] = rep.nonnegative;
            r["conclusion"] = rep.conclusion;
          } catch (const HypothesisViolation& e) {
            r["outcome"] = "hypothesis-violation";
            r["hypothesis"] = e.hypothesis;
            r["detail"] = e.detail;
          } catch (const Error& e) {
            r["outcome"] = "rejected";
            r["detail"] = e.what();
          }
          out.line(r);
        }
        return 0;
      }
      std::vector<int> ds;
      if (*local_opt) ds = {local_d};
      else
        for (int d = 3; d <= 12; ++d) ds.push_back(d);
      bool ok = true;
      for (int d : ds) {
        if (summary && d <= 12) {
          for (const auto& c : enumerate_local_cases(d)) *out.os << c.describe() << '\n';
          continue;
        }
        const LocalCaseSummary s = local_case_minimum(d);
        Json r;
        r["d"] = d;
        r["method"] = s.closed_form ? "closed-form" : "enumeration";
        if (!s.closed_form) r["cases"] = s.cases;
        if (s.minimum) {
          std::ostringstream m;
          m << s.minimum->numerator();
          if (s.minimum->denominator() != 1) m << '/' << s.minimum->denominator();
          r["minimum"] = m.str();
          ok = ok && *s.minimum >= Charge(0);
        } else {
          r["minimum"] = "none";
        }
        if (s.argmin) r["argmin"] = s.argmin->describe();
        out.line(r);
      }
      return ok ? 0 : 1;
    }
    if (*scan) {
      ScanOptions so;
      so.jobs = jobs;
      so.timing = timing;
      std::vector<ScanRecord> recs;
      if (scan_path == "-") recs = scan_corpus(std::cin, so);
      else {
        std::ifstream in(scan_path);
        if (!in) throw std::runtime_error("cannot open " + scan_path);
        recs = scan_corpus(in, so);
      }
      if (summary) *out.os << scan_summary(recs);
      else
        for (const auto& r : recs) out.line(r.to_json(timing));
      return 0;
    }
    if (*suite) {
      SuiteOptions so;
      so.trials = trials;
      so.seed = seed;
      so.timing = timing;
      so.jobs = jobs;
      const SuiteResult res = run_suite(suite_name, so);
      if (summary) *out.os << res.summary;
      else
        for (const auto& r : res.records) out.line(r);
      if (!res.ok) std::cerr << "failed: " << res.first_failure << '\n';
      return res.ok ? 0 : 1;
    }
    if (*catalog) {
      *out.os << export_catalog_text();
      return 0;
    }
  } catch (const ScanFailure& e) {
    std::cerr << "scan aborted: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
