#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sq7/plane_graph.hpp"

namespace sq7 {

using Charge = boost::rational<long long>;

enum class Rule { R1, R2, R3, R4 };
std::string to_string(Rule r);

struct Transfer {
  int source;  // face index
  int target;  // face index
  Charge amount;
  Rule rule;
};

struct ChargeLedger {
  std::vector<Charge> vertex_charges;
  std::vector<Charge> face_charges;
  std::vector<Transfer> transfers;

  Charge total() const;
};

/// omega(v) = 2d(v) - 6, omega(f) = d(f) - 6. Throws Disconnected.
ChargeLedger initial_charges(const PlaneGraph& pg);

/// Applies R1-R4 edge by edge in edge order. Throws NotCubic.
ChargeLedger apply_rules(const PlaneGraph& pg, const ChargeLedger& ledger);

/// Amount a 7+-face sends across an edge to a 4-face whose flanking faces have
/// the given lengths (R1-R3).
Charge four_face_amount(int flank1, int flank2);

/// Neighbour face classes around a centre face.
enum class FaceClass { Three = 3, Four = 4, Six = 6, SevenPlus = 7 };
std::string to_string(FaceClass c);

struct LocalFaceCase {
  int d = 0;
  /// Class of the face across each edge of the centre, in cyclic order.
  std::vector<FaceClass> neighbors;
  /// For each 4-face neighbour i, the classes at i-1 and i+1.
  std::vector<std::pair<FaceClass, FaceClass>> flanks() const;
  /// Transfers touching the centre: (neighbour position, signed amount, rule).
  struct Flow {
    int position;
    Charge amount;  // positive: received by the centre
    Rule rule;
  };
  std::vector<Flow> flows() const;
  Charge final_charge() const;
  /// "d=8 seq=(4,7,4,7,4,7,4,7) flanks=... transfers=... final=0"
  std::string describe() const;
};

/// True iff the sequence is allowed around a d-face by the local exclusions.
bool locally_admissible(int d, const std::vector<FaceClass>& neighbors);

struct LocalCaseSummary {
  int d = 0;
  std::size_t cases = 0;  // up to rotation and reflection
  std::optional<Charge> minimum;  // empty when no case is admissible
  std::optional<LocalFaceCase> argmin;
  bool closed_form = false;  // d >= 13
};

/// Admissible cases for 3 <= d <= 12, one per dihedral class, in
/// lexicographic order of their canonical sequences.
std::vector<LocalFaceCase> enumerate_local_cases(int d);

/// Minimum over enumerate_local_cases(d); closed form ceil(d/2) - 6 for d >= 13.
LocalCaseSummary local_case_minimum(int d);

struct DischargeReport {
  ChargeLedger initial;
  ChargeLedger final_ledger;
  bool nonnegative = false;
  std::string conclusion;
};

/// Checks the hypotheses (connected, cubic, planar, no 5-cycle, none of
/// F1-F4, H1-H6) and throws HypothesisViolation on the first one that fails.
/// Otherwise applies the rules and reports.
DischargeReport verify_graph_discharge(const PlaneGraph& pg);

/// The hypothesis configurations in checking order.
const std::vector<std::string>& forbidden_configurations();

}  // namespace sq7
