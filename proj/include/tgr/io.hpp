#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "tgr/core.hpp"

namespace tgr {

// Instance text format:
//   # comment
//   tgraph <n> <tau> <s> <z> <ell> <strict:0|1>
//   <u> <v> <t>        (0-based vertex ids, 1-based times)

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline long long parse_int(const std::string& tok, int line_no) {
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line_no, "trailing characters in '" + tok + "'");
  return value;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, tau = 0, s = 0, z = 0, ell = 0, strict = 0;
  EdgeSet edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line)) continue;
    const auto toks = detail::split_ws(line);
    if (!have_header) {
      if (toks.size() != 7 || toks[0] != "tgraph")
        throw ParseError(line_no, "expected header 'tgraph <n> <tau> <s> <z> <ell> <strict>'");
      n = detail::parse_int(toks[1], line_no);
      tau = detail::parse_int(toks[2], line_no);
      s = detail::parse_int(toks[3], line_no);
      z = detail::parse_int(toks[4], line_no);
      ell = detail::parse_int(toks[5], line_no);
      strict = detail::parse_int(toks[6], line_no);
      if (n < 2) throw ParseError(line_no, "vertex count must be at least 2");
      if (tau < 1) throw ParseError(line_no, "horizon must be at least 1");
      if (s < 0 || s >= n) throw ParseError(line_no, "source id out of range");
      if (z < 0 || z >= n) throw ParseError(line_no, "target id out of range");
      if (s == z) throw ParseError(line_no, "source and target must differ");
      if (ell < 1 || ell > tau) throw ParseError(line_no, "deadline out of [1, tau]");
      if (strict != 0 && strict != 1) throw ParseError(line_no, "strict flag must be 0 or 1");
      have_header = true;
      continue;
    }
    if (toks.size() != 3) throw ParseError(line_no, "expected '<u> <v> <t>'");
    const long long u = detail::parse_int(toks[0], line_no);
    const long long v = detail::parse_int(toks[1], line_no);
    const long long t = detail::parse_int(toks[2], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "edge endpoint out of range");
    if (u == v) throw ParseError(line_no, "edge endpoints must differ");
    if (t < 1 || t > tau) throw ParseError(line_no, "edge time out of range");
    edges.push_back(make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                              static_cast<Timestamp>(t)));
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing tgraph header");
  return Instance(TemporalGraph(static_cast<int>(n), static_cast<Timestamp>(tau), std::move(edges)),
                  static_cast<VertexId>(s), static_cast<VertexId>(z), static_cast<int>(ell),
                  strict == 1);
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

/// Canonical serialization: header plus edges sorted by (u, v, t).
inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "tgraph " << inst.graph.vertex_count() << ' ' << inst.graph.horizon() << ' ' << inst.s
      << ' ' << inst.z << ' ' << inst.ell << ' ' << (inst.strict ? 1 : 0) << '\n';
  for (const auto& e : inst.graph.edges()) out << e.u << ' ' << e.v << ' ' << e.t << '\n';
  return out.str();
}

/// FNV-1a over the canonical serialization; stable across runs and platforms.
inline std::string instance_digest(const Instance& inst) {
  const std::string text = serialize_instance(inst);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

// Path decomposition text format: one bag per line, vertices space-separated,
// an empty line is an empty bag.  '#' lines are comments.

inline std::vector<VertexSet> parse_decomposition(std::istream& in) {
  std::vector<VertexSet> bags;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    VertexSet bag;
    for (const auto& tok : detail::split_ws(line)) {
      const long long v = detail::parse_int(tok, line_no);
      if (v < 0) throw ParseError(line_no, "negative vertex id");
      bag.push_back(static_cast<VertexId>(v));
    }
    sort_unique(bag);
    bags.push_back(std::move(bag));
  }
  return bags;
}

inline std::vector<VertexSet> parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  return parse_decomposition(in);
}

}  // namespace tgr
