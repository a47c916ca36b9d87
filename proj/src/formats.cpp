#include "sq7/formats.hpp"

#include <cstdint>
#include <iterator>

#include "sq7/errors.hpp"

namespace sq7 {

namespace {

const std::string kGraph6Header = ">>graph6<<";
const std::string kPlanarHeader = ">>planar_code";

}  // namespace

Graph parse_graph6(const std::string& raw, std::size_t line_no) {
  std::string s = raw;
  if (s.rfind(kGraph6Header, 0) == 0) s = s.substr(kGraph6Header.size());
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(line_no, "byte outside graph6 range");
  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= s.size()) throw ParseError(line_no, "truncated graph6 record");
    return static_cast<std::uint64_t>(s[pos++] - 63);
  };
  std::uint64_t n = take();
  if (n == 63) {
    int digits = 3;
    if (pos < s.size() && s[pos] == 126) {
      ++pos;
      digits = 6;
    }
    n = 0;
    for (int i = 0; i < digits; ++i) n = (n << 6) | take();
  }
  if (n > 100000) throw ParseError(line_no, "graph too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = pos + (bits + 5) / 6;
  if (s.size() != need)
    throw ParseError(line_no, "expected " + std::to_string(need) + " bytes, got " +
                                  std::to_string(s.size()));
  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == kGraph6Header) continue;
    out.push_back(parse_graph6(line, line_no));
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  std::string s;
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back(126);
    for (int i = 2; i >= 0; --i) s.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  } else {
    s.push_back(126);
    s.push_back(126);
    for (int i = 5; i >= 0; --i) s.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return s;
}

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  if (data.rfind(kPlanarHeader, 0) == 0) {
    auto end = data.find("<<", kPlanarHeader.size());
    if (end == std::string::npos) throw ParseError(0, "unterminated planar_code header");
    std::string mode = data.substr(kPlanarHeader.size(), end - kPlanarHeader.size());
    if (mode == " be") throw ParseError(0, "big-endian planar_code is not supported");
    pos = end + 2;
  }
  std::vector<PlaneGraph> out;
  std::size_t record = 0;
  auto byte = [&](std::size_t rec) -> unsigned {
    if (pos >= data.size()) throw ParseError(rec, "truncated planar_code record");
    return static_cast<unsigned char>(data[pos++]);
  };
  while (pos < data.size()) {
    ++record;
    unsigned n = byte(record);
    bool wide = false;
    if (n == 0) {
      wide = true;
      n = byte(record);
      n |= byte(record) << 8;
    }
    auto entry = [&]() -> unsigned {
      if (!wide) return byte(record);
      unsigned lo = byte(record);
      return lo | (byte(record) << 8);
    };
    Graph g(static_cast<int>(n));
    Rotation rot(n);
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned w = entry(); w != 0; w = entry()) {
        if (w > n) throw ParseError(record, "neighbour index out of range");
        if (w - 1 == v) throw ParseError(record, "loop in planar_code record");
        rot[v].push_back(static_cast<int>(w - 1));
      }
    }
    for (unsigned v = 0; v < n; ++v)
      for (int w : rot[v]) {
        bool back = false;
        for (int x : rot[w]) back = back || x == static_cast<int>(v);
        if (!back) throw ParseError(record, "asymmetric adjacency");
        if (static_cast<int>(v) < w) g.add_edge(static_cast<int>(v), w);
      }
    try {
      out.emplace_back(std::move(g), std::move(rot));
    } catch (const MalformedRotation& e) {
      throw ParseError(record, e.what());
    }
  }
  return out;
}

void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs) {
  bool wide = false;
  for (const auto& pg : graphs) wide = wide || pg.graph().order() > 255;
  out << (wide ? ">>planar_code le<<" : ">>planar_code<<");
  auto put = [&](unsigned x) {
    if (wide) {
      out.put(static_cast<char>(x & 0xff));
      out.put(static_cast<char>((x >> 8) & 0xff));
    } else {
      out.put(static_cast<char>(x));
    }
  };
  for (const auto& pg : graphs) {
    if (wide) out.put(0);
    put(static_cast<unsigned>(pg.graph().order()));
    for (const auto& r : pg.rotation()) {
      for (int w : r) put(static_cast<unsigned>(w + 1));
      put(0);
    }
  }
}

}  // namespace sq7
