#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkpred {

using NodeId = std::uint32_t;

struct TemporalEdge {
  NodeId u;
  NodeId v;
  double t;
};

// Ordered list of timestamped links. Repeated (u,v) pairs at distinct times
// are legal and preserved; they accumulate weight when the adjacency matrix
// is built.
struct TemporalEdgeList {
  std::vector<TemporalEdge> edges;
  NodeId node_count = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool parse_node_id(const std::string& tok, NodeId& out) {
  if (tok.empty()) return false;
  std::uint64_t acc = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    acc = acc * 10 + static_cast<std::uint64_t>(c - '0');
    if (acc > std::numeric_limits<NodeId>::max()) return false;
  }
  out = static_cast<NodeId>(acc);
  return true;
}

inline bool parse_time(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  for (char c : tok)  // base-10 only; keeps hex/inf/nan spellings out
    if (!(c >= '0' && c <= '9') && c != '.' && c != '+' && c != '-' && c != 'e' && c != 'E')
      return false;
  std::size_t used = 0;
  try {
    out = std::stod(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size() && std::isfinite(out);
}

}  // namespace detail

// Reads the plain-text edge format: one `u v t` record per line, fields
// whitespace-separated, `#` lines and blank lines ignored. Self-loop records
// are dropped and reported through `diagnostics` (one message per dropped
// record, with its line number); malformed lines and ids outside a declared
// node count abort the parse.
inline TemporalEdgeList ingest_edges(std::istream& in,
                                     std::optional<NodeId> node_count = std::nullopt,
                                     std::vector<std::string>* diagnostics = nullptr) {
  TemporalEdgeList out;
  std::string line;
  std::size_t line_no = 0;
  NodeId max_id = 0;
  bool saw_node = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string tok_u, tok_v, tok_t, extra;
    fields >> tok_u >> tok_v >> tok_t;
    if (tok_t.empty() || (fields >> extra))
      throw ParseError(line_no, "expected exactly three fields `u v t`");
    NodeId u, v;
    double t;
    if (!detail::parse_node_id(tok_u, u) || !detail::parse_node_id(tok_v, v))
      throw ParseError(line_no, "node ids must be base-10 non-negative integers");
    if (!detail::parse_time(tok_t, t))
      throw ParseError(line_no, "timestamp is not a finite number");
    if (node_count && (u >= *node_count || v >= *node_count))
      throw ParseError(line_no, "node id " + std::to_string(std::max(u, v)) +
                                    " outside declared node count " +
                                    std::to_string(*node_count));
    if (u == v) {
      if (diagnostics)
        diagnostics->push_back("line " + std::to_string(line_no) +
                               ": self-loop (" + tok_u + "," + tok_v + ") dropped");
      continue;
    }
    out.edges.push_back({u, v, t});
    max_id = std::max({max_id, u, v});
    saw_node = true;
  }
  out.node_count = node_count ? *node_count : (saw_node ? max_id + 1 : 0);
  return out;
}

// Rescales every timestamp to [0, 1] with the affine map over the list's
// global min/max. A degenerate range (all timestamps equal) maps to 0.
inline TemporalEdgeList normalize_times(const TemporalEdgeList& in) {
  if (in.edges.empty())
    throw std::invalid_argument("normalize_times: empty edge list");
  double t_min = in.edges.front().t;
  double t_max = t_min;
  for (const TemporalEdge& e : in.edges) {
    t_min = std::min(t_min, e.t);
    t_max = std::max(t_max, e.t);
  }
  TemporalEdgeList out;
  out.node_count = in.node_count;
  out.edges.reserve(in.edges.size());
  const double span = t_max - t_min;
  for (const TemporalEdge& e : in.edges) {
    double t = span > 0.0 ? (e.t - t_min) / span : 0.0;
    out.edges.push_back({e.u, e.v, t});
  }
  return out;
}

}  // namespace linkpred
