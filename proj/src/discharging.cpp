#include "sq7/discharging.hpp"

#include <algorithm>
#include <sstream>

#include "sq7/catalog.hpp"
#include "sq7/errors.hpp"

namespace sq7 {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "?";
}

std::string to_string(FaceClass c) { return c == FaceClass::SevenPlus ? "7+" : std::to_string(static_cast<int>(c)); }

namespace {

std::string charge_string(const Charge& c) {
  std::ostringstream os;
  os << c.numerator();
  if (c.denominator() != 1) os << '/' << c.denominator();
  return os.str();
}

Rule rule_for(const Charge& amount) {
  if (amount == Charge(1)) return Rule::R1;
  if (amount == Charge(3, 4)) return Rule::R2;
  return Rule::R3;
}

}  // namespace

Charge ChargeLedger::total() const {
  Charge t = 0;
  for (const auto& c : vertex_charges) t += c;
  for (const auto& c : face_charges) t += c;
  return t;
}

ChargeLedger initial_charges(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!is_connected(g)) throw Disconnected();
  ChargeLedger L;
  for (int v = 0; v < g.order(); ++v) L.vertex_charges.push_back(Charge(2 * g.degree(v) - 6));
  for (const auto& f : pg.faces()) L.face_charges.push_back(Charge(f.length() - 6));
  return L;
}

Charge four_face_amount(int flank1, int flank2) {
  auto six = [](int x) { return x == 6; };
  auto big = [](int x) { return x >= 7; };
  if (six(flank1) && six(flank2)) return Charge(1);
  if ((six(flank1) && big(flank2)) || (big(flank1) && six(flank2))) return Charge(3, 4);
  if (big(flank1) && big(flank2)) return Charge(1, 2);
  return Charge(0);
}

ChargeLedger apply_rules(const PlaneGraph& pg, const ChargeLedger& ledger) {
  const Graph& g = pg.graph();
  if (!is_cubic(g)) throw NotCubic();
  ChargeLedger out = ledger;
  const auto& faces = pg.faces();
  auto len = [&](int f) { return faces[f].length(); };
  for (auto [u, v] : g.edges()) {
    const int a = pg.face_of_dart(u, v);
    const int b = pg.face_of_dart(v, u);
    if (a == b) continue;
    for (auto [big, small] : {std::pair{a, b}, std::pair{b, a}}) {
      if (len(big) < 7) continue;
      if (len(small) == 4) {
        const int fu = pg.face_of_dart(u, pg.predecessor(u, v));
        const int fv = pg.face_of_dart(v, pg.predecessor(v, u));
        const Charge amount = four_face_amount(len(fu), len(fv));
        if (amount == Charge(0)) continue;
        out.transfers.push_back({big, small, amount, rule_for(amount)});
        out.face_charges[big] -= amount;
        out.face_charges[small] += amount;
      } else if (len(small) == 3) {
        out.transfers.push_back({big, small, Charge(1), Rule::R4});
        out.face_charges[big] -= 1;
        out.face_charges[small] += 1;
      }
    }
  }
  return out;
}

std::vector<std::pair<FaceClass, FaceClass>> LocalFaceCase::flanks() const {
  std::vector<std::pair<FaceClass, FaceClass>> out;
  const int n = static_cast<int>(neighbors.size());
  for (int i = 0; i < n; ++i)
    if (neighbors[i] == FaceClass::Four) out.emplace_back(neighbors[(i + n - 1) % n], neighbors[(i + 1) % n]);
  return out;
}

std::vector<LocalFaceCase::Flow> LocalFaceCase::flows() const {
  std::vector<Flow> out;
  const int n = static_cast<int>(neighbors.size());
  auto amount_at = [&](int i) {
    return four_face_amount(static_cast<int>(neighbors[(i + n - 1) % n]), static_cast<int>(neighbors[(i + 1) % n]));
  };
  for (int i = 0; i < n; ++i) {
    const FaceClass c = neighbors[i];
    if (d == 3 && c == FaceClass::SevenPlus) out.push_back({i, Charge(1), Rule::R4});
    if (d == 4 && c == FaceClass::SevenPlus) {
      Charge a = amount_at(i);
      if (a != Charge(0)) out.push_back({i, a, rule_for(a)});
    }
    if (d >= 7 && c == FaceClass::Three) out.push_back({i, Charge(-1), Rule::R4});
    if (d >= 7 && c == FaceClass::Four) {
      Charge a = amount_at(i);
      if (a != Charge(0)) out.push_back({i, -a, rule_for(a)});
    }
  }
  return out;
}

Charge LocalFaceCase::final_charge() const {
  Charge c(d - 6);
  for (const auto& f : flows()) c += f.amount;
  return c;
}

std::string LocalFaceCase::describe() const {
  std::ostringstream os;
  os << "d=" << d << " seq=(";
  for (std::size_t i = 0; i < neighbors.size(); ++i) os << (i ? "," : "") << to_string(neighbors[i]);
  os << ") flanks=[";
  bool first = true;
  for (auto [a, b] : flanks()) {
    os << (first ? "" : " ") << to_string(a) << '|' << to_string(b);
    first = false;
  }
  os << "] transfers=[";
  first = true;
  for (const auto& f : flows()) {
    os << (first ? "" : " ") << to_string(f.rule) << '@' << f.position << ':' << (f.amount > Charge(0) ? "+" : "")
       << charge_string(f.amount);
    first = false;
  }
  os << "] final=" << charge_string(final_charge());
  return os.str();
}

bool locally_admissible(int d, const std::vector<FaceClass>& a) {
  const int n = static_cast<int>(a.size());
  if (n != d || d < 3 || d == 5) return false;
  using C = FaceClass;
  auto at = [&](int i) { return a[((i % n) + n) % n]; };
  int threes = 0, fours = 0, sixes = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == C::Three) ++threes;
    if (a[i] == C::Four) ++fours;
    if (a[i] == C::Six) ++sixes;
  }
  // A 3-face sees only 7+-faces; a 4-face sees no 3- or 4-face.
  if (d <= 6 && threes) return false;
  if (d <= 4 && fours) return false;
  if (d == 3 && sixes) return false;
  for (int i = 0; i < n; ++i) {
    if (a[i] == C::Three && (at(i - 1) != C::SevenPlus || at(i + 1) != C::SevenPlus)) return false;
    if (a[i] == C::Four && (at(i - 1) == C::Three || at(i - 1) == C::Four || at(i + 1) == C::Three ||
                            at(i + 1) == C::Four))
      return false;
    // 6-face with two 4-faces at distance 1.
    if (a[i] == C::Six && at(i - 1) == C::Four && at(i + 1) == C::Four) return false;
  }
  // 3-cycles at distance at least 3.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i] == C::Three && a[j] == C::Three && std::min(j - i, n - (j - i)) < 4) return false;
  // 4-face adjacent to two adjacent 6-faces.
  if (d == 4)
    for (int i = 0; i < n; ++i)
      if (a[i] == C::Six && at(i + 1) == C::Six) return false;
  if (d == 7) {
    if (fours > 1) return false;
    if (threes && (threes != 1 || fours != 0)) return false;
  }
  if (d == 8) {
    for (int i = 0; i < n; ++i)
      if (a[i] == C::Four && at(i + 1) == C::Six && at(i + 2) == C::Six && at(i + 3) == C::Four) return false;
    if (threes && threes + fours > 2) return false;
  }
  if (d == 9 && threes && threes + fours > 3) return false;
  if (d == 10 && threes && threes + fours > 4) return false;
  if (d >= 11 && threes + fours > d / 2) return false;
  return true;
}

namespace {

bool is_dihedral_min(const std::vector<FaceClass>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<FaceClass> b(n);
  for (int r = 0; r < n; ++r)
    for (int dir : {1, -1}) {
      for (int i = 0; i < n; ++i) b[i] = a[((r + dir * i) % n + n) % n];
      if (b < a) return false;
    }
  return true;
}

void extend(int d, std::vector<FaceClass>& seq, std::vector<LocalFaceCase>& out) {
  static constexpr FaceClass kClasses[] = {FaceClass::Three, FaceClass::Four, FaceClass::Six, FaceClass::SevenPlus};
  const int i = static_cast<int>(seq.size());
  if (i == d) {
    if (locally_admissible(d, seq) && is_dihedral_min(seq)) out.push_back({d, seq});
    return;
  }
  for (FaceClass c : kClasses) {
    // Cheap prefix pruning on consecutive pairs.
    if (i > 0) {
      FaceClass p = seq[i - 1];
      bool three_pair = (p == FaceClass::Three && c != FaceClass::SevenPlus) ||
                        (c == FaceClass::Three && p != FaceClass::SevenPlus);
      bool four_pair = p == FaceClass::Four && c == FaceClass::Four;
      if (three_pair || four_pair) continue;
    }
    seq.push_back(c);
    extend(d, seq, out);
    seq.pop_back();
  }
}

}  // namespace

std::vector<LocalFaceCase> enumerate_local_cases(int d) {
  if (d < 3 || d > 12) throw std::invalid_argument("local enumeration covers 3 <= d <= 12");
  std::vector<LocalFaceCase> out;
  if (d == 5) return out;
  std::vector<FaceClass> seq;
  extend(d, seq, out);
  return out;
}

LocalCaseSummary local_case_minimum(int d) {
  LocalCaseSummary s;
  s.d = d;
  if (d >= 13) {
    s.closed_form = true;
    s.minimum = Charge((d + 1) / 2 - 6);
    return s;
  }
  const auto cases = enumerate_local_cases(d);
  s.cases = cases.size();
  for (const auto& c : cases) {
    Charge f = c.final_charge();
    if (!s.minimum || f < *s.minimum) {
      s.minimum = f;
      s.argmin = c;
    }
  }
  return s;
}

const std::vector<std::string>& forbidden_configurations() {
  static const std::vector<std::string> names = {"F1", "F2", "F3", "F4", "H1", "H2", "H3", "H4", "H5", "H6"};
  return names;
}

DischargeReport verify_graph_discharge(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!is_connected(g)) throw Disconnected();
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      throw HypothesisViolation("cubic", "vertex " + g.name(v) + " has degree " + std::to_string(g.degree(v)));
  if (!pg.euler_holds()) throw HypothesisViolation("planar", "rotation system is not a plane embedding");
  if (has_five_cycle(g)) throw HypothesisViolation("no-5-cycle", "");
  for (const auto& name : forbidden_configurations()) {
    const auto occ = find_occurrences(pg, build_config(name));
    if (occ.empty()) continue;
    std::ostringstream os;
    os << "at vertices";
    for (int v : occ.front().mapping) os << ' ' << g.name(v);
    throw HypothesisViolation(name, os.str());
  }
  DischargeReport r;
  r.initial = initial_charges(pg);
  r.final_ledger = apply_rules(pg, r.initial);
  r.nonnegative = true;
  for (const auto& c : r.final_ledger.vertex_charges)
    if (c < Charge(0)) r.nonnegative = false;
  for (const auto& c : r.final_ledger.face_charges)
    if (c < Charge(0)) r.nonnegative = false;
  r.conclusion = r.nonnegative ? "inconsistent: all final charges are nonnegative but the total is -12"
                               : "a final charge is negative";
  return r;
}

}  // namespace sq7
