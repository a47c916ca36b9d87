#include "sq7/scan.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "sq7/chromatic.hpp"
#include "sq7/formats.hpp"
#include "sq7/planarity.hpp"

namespace sq7 {

nlohmann::ordered_json ScanRecord::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["id"] = id;
  j["outcome"] = kept ? "kept" : "rejected";
  if (!kept) j["reason"] = reason;
  j["n"] = n;
  j["m"] = m;
  if (kept) {
    j["chi"] = chi;
    j["chi_square"] = chi_square;
    j["pass"] = pass;
  }
  if (timing) j["wall_ms"] = wall_ms;
  return j;
}

ScanRecord scan_graph(const Graph& g, std::size_t index, const std::string& id, const ScanOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanRecord r;
  r.index = index;
  r.id = id;
  r.n = g.order();
  r.m = g.size();
  if (!is_subcubic(g)) r.reason = "not-subcubic";
  else if (!is_planar(g)) r.reason = "not-planar";
  else if (has_five_cycle(g)) r.reason = "has-5-cycle";
  else {
    r.kept = true;
    r.chi = chromatic_number(g, opts.order_bound);
    r.chi_square = chromatic_number(square(g), opts.order_bound);
    r.pass = r.chi_square <= 7;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<ScanRecord> scan_graphs(const std::vector<Graph>& graphs, const std::vector<std::string>& ids,
                                    const ScanOptions& opts) {
  const long n = static_cast<long>(graphs.size());
  std::vector<ScanRecord> out(n);
  std::vector<std::string> errors(n);
  const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_num_procs();
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = scan_graph(graphs[i], static_cast<std::size_t>(i), ids[i], opts);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (long i = 0; i < n; ++i)
    if (!errors[i].empty()) throw Error("graph " + std::to_string(i) + ": " + errors[i]);
  for (const auto& r : out)
    if (r.kept && !r.pass) throw ScanFailure(r);
  return out;
}

std::vector<ScanRecord> scan_corpus(std::istream& in, const ScanOptions& opts) {
  std::vector<Graph> graphs;
  std::vector<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    graphs.push_back(parse_graph6(line, line_no));
    ids.push_back(line);
  }
  return scan_graphs(graphs, ids, opts);
}

std::string scan_summary(const std::vector<ScanRecord>& records) {
  std::ostringstream os;
  os << std::left << std::setw(7) << "index" << std::setw(24) << "id" << std::setw(10) << "outcome"
     << std::setw(14) << "reason" << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(5) << "chi"
     << std::setw(8) << "chi(G2)" << "pass\n";
  std::size_t kept = 0;
  for (const auto& r : records) {
    std::string id = r.id.size() > 22 ? r.id.substr(0, 19) + "..." : r.id;
    os << std::left << std::setw(7) << r.index << std::setw(24) << id << std::setw(10)
       << (r.kept ? "kept" : "rejected") << std::setw(14) << (r.kept ? "-" : r.reason) << std::setw(5) << r.n
       << std::setw(5) << r.m << std::setw(5) << (r.kept ? std::to_string(r.chi) : "-") << std::setw(8)
       << (r.kept ? std::to_string(r.chi_square) : "-") << (r.kept ? (r.pass ? "yes" : "NO") : "-") << '\n';
    kept += r.kept;
  }
  os << records.size() << " graphs, " << kept << " kept\n";
  return os.str();
}

}  // namespace sq7
