#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "linkpred/degree_stats.hpp"
#include "linkpred/edge_list.hpp"
#include "linkpred/generate.hpp"
#include "linkpred/optimize.hpp"
#include "linkpred/pairs.hpp"

// Plain-text file formats shared by the command-line tools. Every writer
// uses fixed field formatting so a rerun with identical inputs produces
// byte-identical files.
namespace linkpred::io {

// Timestamps print as integers when integral (the generator's native form),
// with a fixed 6-decimal fallback otherwise.
inline std::string format_time(double t) {
  char buf[48];
  if (t == std::floor(t) && std::fabs(t) < 1e15)
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(t));
  else
    std::snprintf(buf, sizeof(buf), "%.6f", t);
  return buf;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

inline TemporalEdgeList read_edge_file(const std::string& path,
                                       std::optional<NodeId> node_count = std::nullopt,
                                       std::vector<std::string>* diagnostics = nullptr) {
  std::ifstream in = open_input(path);
  return ingest_edges(in, node_count, diagnostics);
}

inline void write_edge_file(const std::string& path, const TemporalEdgeList& list) {
  std::ofstream out = open_output(path);
  for (const TemporalEdge& e : list.edges)
    out << e.u << ' ' << e.v << ' ' << format_time(e.t) << '\n';
}

// Pairs file: `u v` or `u v label` per line, `#` comments ignored. Labels
// must be present on every record or on none.
inline QueryPairSet read_pairs_file(const std::string& path) {
  std::ifstream in = open_input(path);
  QueryPairSet set;
  std::string line;
  std::size_t line_no = 0;
  bool labeled = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string tok_u, tok_v, tok_label, extra;
    fields >> tok_u >> tok_v >> tok_label;
    if (tok_v.empty() || (fields >> extra))
      throw ParseError(line_no, "expected `u v` or `u v label`");
    NodeId u, v;
    if (!detail::parse_node_id(tok_u, u) || !detail::parse_node_id(tok_v, v))
      throw ParseError(line_no, "node ids must be base-10 non-negative integers");
    if (u == v) throw ParseError(line_no, "pair endpoints must differ");
    const bool has_label = !tok_label.empty();
    if (set.pairs.empty())
      labeled = has_label;
    else if (labeled != has_label)
      throw ParseError(line_no, "mixed labeled and unlabeled records");
    if (has_label) {
      if (tok_label != "0" && tok_label != "1")
        throw ParseError(line_no, "label must be 0 or 1");
      set.labels.push_back(tok_label == "1" ? 1 : 0);
    }
    set.pairs.emplace_back(u, v);
  }
  return set;
}

inline void write_pairs_file(const std::string& path, const QueryPairSet& set,
                             const std::vector<std::string>& header_comments = {}) {
  std::ofstream out = open_output(path);
  for (const std::string& comment : header_comments) out << "# " << comment << '\n';
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    out << set.pairs[i].first << ' ' << set.pairs[i].second;
    if (set.has_labels()) out << ' ' << static_cast<int>(set.labels[i]);
    out << '\n';
  }
}

inline void write_split_file(const std::string& path, const BenchmarkSplit& split) {
  std::int64_t positives = 0;
  for (std::uint8_t l : split.eval_pairs.labels) positives += l;
  char meta[256];
  std::snprintf(meta, sizeof(meta),
                "split t1=%s t2=%s seed=%llu n_pairs=%zu positives=%lld "
                "uniform_positives=%lld topped_up=%lld",
                format_time(split.t1).c_str(), format_time(split.t2).c_str(),
                static_cast<unsigned long long>(split.seed), split.eval_pairs.pairs.size(),
                static_cast<long long>(positives),
                static_cast<long long>(split.uniform_positives),
                static_cast<long long>(split.topped_up));
  write_pairs_file(path, split.eval_pairs, {meta});
}

// Score file: `u v score` with scores at fixed 12 decimals, order mirroring
// the pair set it was computed from.
struct ScoreFile {
  QueryPairSet pairs;
  std::vector<double> scores;
};

inline void write_score_file(const std::string& path, const QueryPairSet& set,
                             const std::vector<double>& scores) {
  if (scores.size() != set.pairs.size())
    throw std::invalid_argument("score file: scores do not align with pairs");
  std::ofstream out = open_output(path);
  char buf[64];
  for (std::size_t i = 0; i < scores.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12f", scores[i]);
    out << set.pairs[i].first << ' ' << set.pairs[i].second << ' ' << buf << '\n';
  }
}

inline ScoreFile read_score_file(const std::string& path) {
  std::ifstream in = open_input(path);
  ScoreFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string tok_u, tok_v, tok_s, extra;
    fields >> tok_u >> tok_v >> tok_s;
    if (tok_s.empty() || (fields >> extra))
      throw ParseError(line_no, "expected `u v score`");
    NodeId u, v;
    double s;
    if (!detail::parse_node_id(tok_u, u) || !detail::parse_node_id(tok_v, v))
      throw ParseError(line_no, "node ids must be base-10 non-negative integers");
    if (!detail::parse_time(tok_s, s))
      throw ParseError(line_no, "score is not a finite number");
    file.pairs.pairs.emplace_back(u, v);
    file.scores.push_back(s);
  }
  return file;
}

inline void write_epsilon_trace(const std::string& path,
                                const std::vector<EpsilonTracePoint>& trace) {
  std::ofstream out = open_output(path);
  char buf[80];
  for (const EpsilonTracePoint& point : trace) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f", point.epsilon, point.auc);
    out << buf << '\n';
  }
}

inline void write_theta_trace(const std::string& path,
                              const std::vector<ThetaTracePoint>& trace) {
  std::ofstream out = open_output(path);
  char buf[160];
  for (const ThetaTracePoint& point : trace) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f %.6f %d %.6f", point.params.theta0,
                  point.params.theta1, point.params.theta2, point.params.theta3,
                  point.auc);
    out << buf << '\n';
  }
}

// Config file: flat `key = value` lines, `#` comments and blank lines
// ignored, optional single layer of quotes around the value. Keys mirror the
// long option names of the subcommand the file is passed to.
inline std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected `key = value`");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty config key");
    if (value.size() >= 2 &&
        ((value.front() == '"' && value.back() == '"') ||
         (value.front() == '\'' && value.back() == '\'')))
      value = value.substr(1, value.size() - 2);
    pairs.emplace_back(std::move(key), std::move(value));
  }
  return pairs;
}

// Histogram emitted as plot-ready `k_centre density` lines with the fit
// appended as a trailing comment.
inline void write_histogram_file(const std::string& path, const DegreeHistogram& hist,
                                 const PowerLawFit& fit) {
  std::ofstream out = open_output(path);
  char buf[96];
  for (const HistogramBin& bin : hist.bins) {
    std::snprintf(buf, sizeof(buf), "%.6f %.9g", bin_centre(bin, hist.binning),
                  bin.density);
    out << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "# gamma=%.6f kmin=%.6f r2=%.6f", fit.gamma,
                fit.k_min, fit.r_squared);
  out << buf << '\n';
}

}  // namespace linkpred::io
