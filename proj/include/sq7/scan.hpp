#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sq7/errors.hpp"
#include "sq7/graph.hpp"

namespace sq7 {

struct ScanOptions {
  int jobs = 0;  // 0: number of processors
  bool timing = false;
  int order_bound = 30;
};

struct ScanRecord {
  std::size_t index = 0;
  std::string id;  // graph6 string or built-in name
  bool kept = false;
  std::string reason;  // "not-subcubic", "not-planar", "has-5-cycle"
  int n = 0;
  std::size_t m = 0;
  int chi = 0;         // chi(G), sanity only
  int chi_square = 0;  // chi(G^2)
  bool pass = false;
  double wall_ms = 0;

  nlohmann::ordered_json to_json(bool timing = false) const;
};

/// A kept graph whose square needs more than 7 colours.
struct ScanFailure : Error {
  explicit ScanFailure(const ScanRecord& r)
      : Error("graph " + std::to_string(r.index) + " (" + r.id + ") has chi(G^2) = " + std::to_string(r.chi_square)),
        record(r) {}
  ScanRecord record;
};

ScanRecord scan_graph(const Graph& g, std::size_t index, const std::string& id, const ScanOptions& opts = {});

/// Records in input order. Throws ScanFailure after all graphs are processed
/// if any kept graph fails; ParseError on malformed input.
std::vector<ScanRecord> scan_graphs(const std::vector<Graph>& graphs, const std::vector<std::string>& ids,
                                    const ScanOptions& opts = {});
std::vector<ScanRecord> scan_corpus(std::istream& graph6, const ScanOptions& opts = {});

/// Fixed-width table for --summary.
std::string scan_summary(const std::vector<ScanRecord>& records);

}  // namespace sq7
