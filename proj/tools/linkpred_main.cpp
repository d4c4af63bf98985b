// linkpred: temporal link-prediction toolkit.
//
// Subcommands wire the library into reproducible batch runs: generate
// synthetic preferential-attachment benchmarks, inspect degree structure,
// score candidate pairs, combine score files and evaluate AUC, and run the
// grid searches for the combination weight and the time-weight polynomial.
// Every command echoes its effective configuration and writes output with
// fixed formatting, so identical inputs give byte-identical results.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkpred/adjacency.hpp"
#include "linkpred/degree_stats.hpp"
#include "linkpred/evaluate.hpp"
#include "linkpred/generate.hpp"
#include "linkpred/io.hpp"
#include "linkpred/optimize.hpp"
#include "linkpred/scores.hpp"

namespace {

using namespace linkpred;

std::optional<TimeWeightParams> parse_theta_arg(const std::string& arg) {
  if (arg == "uniform") return std::nullopt;
  std::vector<double> parts;
  std::string token;
  std::istringstream stream(arg);
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--theta", "cannot parse '" + token + "' as a number");
    }
  }
  if (parts.size() != 4)
    throw CLI::ValidationError("--theta", "expected t0,t1,t2,t3 or 'uniform'");
  if (parts[3] != std::floor(parts[3]))
    throw CLI::ValidationError("--theta", "t3 must be an integer");
  try {
    return TimeWeightParams(parts[0], parts[1], parts[2], static_cast<int>(parts[3]));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--theta", e.what());
  }
}

std::vector<double> parse_double_list(const std::string& flag, const std::string& arg) {
  std::vector<double> values;
  std::string token;
  std::istringstream stream(arg);
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "cannot parse '" + token + "' as a number");
    }
  }
  if (values.empty()) throw CLI::ValidationError(flag, "empty value list");
  return values;
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& arg) {
  std::vector<int> values;
  for (double v : parse_double_list(flag, arg)) {
    if (v != std::floor(v)) throw CLI::ValidationError(flag, "values must be integers");
    values.push_back(static_cast<int>(v));
  }
  return values;
}

void echo_config(const CLI::App* sub) {
  std::cout << "# effective config [" << sub->get_name() << "]\n"
            << sub->config_to_str(true, false);
}

// Config-file merge: `--config FILE` supplies `key = value` defaults for the
// subcommand's long options; anything already present on the command line
// wins. The file's keys are injected as `--key=value` tokens right after the
// subcommand name, so CLI11 validates them like ordinary flags.
std::vector<std::string> merge_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() < 2 || args[1].empty() || args[1][0] == '-') return args;

  std::string config_path;
  std::set<std::string> given;
  for (std::size_t i = 2; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0) continue;
    const std::size_t eq = tok.find('=');
    const std::string name = tok.substr(2, eq == std::string::npos ? eq : eq - 2);
    given.insert(name);
    if (name == "config") {
      if (eq != std::string::npos)
        config_path = tok.substr(eq + 1);
      else if (i + 1 < args.size())
        config_path = args[i + 1];
    }
  }
  if (config_path.empty()) return args;

  std::vector<std::string> merged(args.begin(), args.begin() + 2);
  for (const auto& [key, value] : io::read_config_file(config_path)) {
    if (given.count(key) || key == "config") continue;  // command line wins
    if (value.empty()) continue;                        // empty means unset
    merged.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.end(), args.begin() + 2, args.end());
  return merged;
}

void print_diagnostics(const std::vector<std::string>& diagnostics) {
  for (const std::string& d : diagnostics) std::cerr << "warning: " << d << '\n';
}

TemporalEdgeList load_edges(const std::string& edge_path,
                            std::optional<NodeId> node_count = std::nullopt) {
  std::vector<std::string> diagnostics;
  TemporalEdgeList edges = io::read_edge_file(edge_path, node_count, &diagnostics);
  print_diagnostics(diagnostics);
  return edges;
}

void check_pairs_match(const QueryPairSet& a, const QueryPairSet& b,
                       const std::string& what) {
  if (a.pairs.size() != b.pairs.size())
    throw std::runtime_error(what + ": files differ in length");
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i] != b.pairs[i])
      throw std::runtime_error(what + ": pair mismatch at record " + std::to_string(i + 1));
}

// A snapshot edge file does not mention nodes that have no links yet, but
// query pairs may: those nodes exist with degree zero. Unless the node count
// was declared explicitly, widen the universe to cover every queried id.
void cover_pair_ids(TemporalEdgeList& edges, const QueryPairSet& pairs) {
  NodeId needed = edges.node_count;
  for (const auto& [u, v] : pairs.pairs) needed = std::max({needed, u + 1, v + 1});
  edges.node_count = needed;
}

std::optional<NodeId> declared_count(std::uint64_t flag_value) {
  if (flag_value == 0) return std::nullopt;
  if (flag_value >= (1ull << 32))
    throw std::runtime_error("--node-count exceeds the supported node range");
  return static_cast<NodeId>(flag_value);
}

int run(int argc, char** argv) {
  CLI::App app{"temporal link-prediction toolkit"};
  app.require_subcommand(1);

  // ---- generate ----------------------------------------------------------
  auto* gen = app.add_subcommand(
      "generate", "grow a preferential-attachment network and optional benchmark split");
  gen->option_defaults()->always_capture_default(true);
  std::string gen_config;
  gen->add_option("--config", gen_config, "key = value config file; flags override it")
      ->configurable(false);
  std::uint64_t gen_n = 1000;
  int gen_m = 3;
  double gen_b = 0.0;
  std::uint64_t gen_seed = 42;
  std::string gen_out;
  double gen_t1 = -1.0, gen_t2 = -1.0;
  std::int64_t gen_pairs = 0;
  double gen_pos_cap = 0.0;
  std::string gen_pairs_out;
  gen->add_option("--n", gen_n, "final node count");
  gen->add_option("--m", gen_m, "links per arriving node");
  gen->add_option("--b", gen_b, "attachment offset B in k + B");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "edge file to write")->required();
  gen->add_option("--t1", gen_t1, "training cutoff time for the split");
  gen->add_option("--t2", gen_t2, "label horizon time for the split");
  gen->add_option("--n-pairs", gen_pairs, "evaluation pairs to sample");
  gen->add_option("--pos-cap", gen_pos_cap, "positive fraction cap for the split top-up");
  gen->add_option("--pairs-out", gen_pairs_out, "split pairs file to write");
  std::string gen_train_out;
  gen->add_option("--train-out", gen_train_out,
                  "also write the training snapshot (edges with t <= t1)");
  gen->callback([&] {
    echo_config(gen);
    if (gen_n >= (1ull << 32))
      throw std::runtime_error("generate: --n exceeds the supported node range");
    GrowthParams params{static_cast<NodeId>(gen_n), gen_m, gen_b, gen_seed};
    TemporalEdgeList edges = generate_pa_network(params);
    io::write_edge_file(gen_out, edges);
    std::cout << "nodes " << edges.node_count << "\nedges " << edges.edges.size() << '\n';
    if (!gen_pairs_out.empty() || !gen_train_out.empty()) {
      if (gen_pairs <= 0)
        throw std::runtime_error("generate: split output needs --n-pairs, --t1 and --t2");
      BenchmarkSplit split =
          make_benchmark(edges, gen_t1, gen_t2, gen_pairs, gen_pos_cap, gen_seed);
      if (!gen_pairs_out.empty()) io::write_split_file(gen_pairs_out, split);
      if (!gen_train_out.empty()) io::write_edge_file(gen_train_out, split.train_edges);
      std::int64_t positives = 0;
      for (std::uint8_t l : split.eval_pairs.labels) positives += l;
      std::cout << "split_pairs " << split.eval_pairs.pairs.size() << "\nsplit_positives "
                << positives << '\n'
                << "train_edges " << split.train_edges.edges.size() << '\n';
    }
  });

  // ---- inspect -----------------------------------------------------------
  auto* ins = app.add_subcommand(
      "inspect", "degree statistics, pair categories and power-law tail fit");
  ins->option_defaults()->always_capture_default(true);
  std::string ins_config;
  ins->add_option("--config", ins_config, "key = value config file; flags override it")
      ->configurable(false);
  std::string ins_edges, ins_pairs, ins_hist_out, ins_binning = "log";
  double ins_kmin = 0.0;
  double ins_log_ratio = 1.5;
  bool ins_include_zero = false;
  std::uint64_t ins_node_count = 0;
  ins->add_option("--edges", ins_edges, "edge file to read")->required();
  ins->add_option("--pairs", ins_pairs, "pairs file to categorize");
  ins->add_option("--node-count", ins_node_count,
                  "declared node count (0 = infer from edges and pairs)");
  ins->add_option("--kmin", ins_kmin, "tail cutoff for the fit (0 = auto)");
  ins->add_option("--binning", ins_binning, "histogram binning: log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
  ins->add_option("--log-ratio", ins_log_ratio, "bin growth ratio for log binning");
  ins->add_flag("--include-zero", ins_include_zero, "include k = 0 nodes in the histogram");
  ins->add_option("--hist-out", ins_hist_out, "write histogram data to this file");
  ins->callback([&] {
    echo_config(ins);
    TemporalEdgeList edges = load_edges(ins_edges, declared_count(ins_node_count));
    QueryPairSet pairs;
    if (!ins_pairs.empty()) {
      pairs = io::read_pairs_file(ins_pairs);
      if (ins_node_count == 0) cover_pair_ids(edges, pairs);
    }
    SparseAdjacency adj = SparseAdjacency::build(edges);
    DegreeVector deg = adj.degrees();
    std::cout << "nodes " << edges.node_count << "\nedges " << edges.edges.size() << '\n';

    if (!ins_pairs.empty()) {
      CategoryCounts counts = classify_pairs(deg, pairs);
      std::cout << "pairs " << pairs.pairs.size() << '\n'
                << "(k=0,k=0): " << counts.both_zero << '\n'
                << "(k=0,k>0): " << counts.one_zero << '\n'
                << "(k>0,k>0): " << counts.both_positive << '\n';
    }

    const Binning binning =
        ins_binning == "linear" ? Binning::linear : Binning::logarithmic;
    try {
      DegreeHistogram hist =
          degree_histogram(deg, binning, ins_include_zero, ins_log_ratio);
      const double k_min = ins_kmin > 0.0 ? ins_kmin : default_k_min(deg);
      PowerLawFit fit = fit_power_law(hist, k_min);
      char buf[128];
      std::snprintf(buf, sizeof(buf), "gamma %.6f kmin %.6f r2 %.6f points %d",
                    fit.gamma, fit.k_min, fit.r_squared, fit.points_used);
      std::cout << buf << '\n';
      if (!ins_hist_out.empty()) io::write_histogram_file(ins_hist_out, hist, fit);
    } catch (const std::invalid_argument& e) {
      std::cout << "gamma unavailable: " << e.what() << '\n';
    }
  });

  // ---- score -------------------------------------------------------------
  auto* sc = app.add_subcommand("score", "score a pairs file against an edge file");
  sc->option_defaults()->always_capture_default(true);
  std::string sc_config;
  sc->add_option("--config", sc_config, "key = value config file; flags override it")
      ->configurable(false);
  std::string sc_edges, sc_pairs, sc_method = "pa", sc_theta = "uniform", sc_out;
  double sc_eps_pa = 0.0;
  std::uint64_t sc_node_count = 0;
  sc->add_option("--edges", sc_edges, "edge file to read")->required();
  sc->add_option("--pairs", sc_pairs, "pairs file to score")->required();
  sc->add_option("--node-count", sc_node_count,
                 "declared node count (0 = infer from edges and pairs)");
  sc->add_option("--method", sc_method, "scorer: pa, cn, aa, ra or l3");
  sc->add_option("--eps-pa", sc_eps_pa, "epsilon of the pa degree model");
  sc->add_option("--theta", sc_theta, "time weights t0,t1,t2,t3, or 'uniform'");
  sc->add_option("--out", sc_out, "score file to write")->required();
  sc->callback([&] {
    echo_config(sc);
    TemporalEdgeList edges = load_edges(sc_edges, declared_count(sc_node_count));
    QueryPairSet pairs = io::read_pairs_file(sc_pairs);
    if (sc_node_count == 0) cover_pair_ids(edges, pairs);
    SparseAdjacency adj = SparseAdjacency::build(edges, parse_theta_arg(sc_theta));
    DegreeVector deg = adj.degrees();
    ScoreVector scores = score_batch(parse_method(sc_method), adj, deg, pairs, sc_eps_pa);
    io::write_score_file(sc_out, pairs, scores.values);
    std::cout << "scored " << scores.values.size() << " pairs with " << scores.method
              << '\n';
  });

  // ---- combine-auc -------------------------------------------------------
  auto* cmb = app.add_subcommand(
      "combine-auc", "AUC of one score file, or of a normalized blend of two");
  cmb->option_defaults()->always_capture_default(true);
  std::string cmb_config;
  cmb->add_option("--config", cmb_config, "key = value config file; flags override it")
      ->configurable(false);
  std::string cmb_a, cmb_b, cmb_labels;
  double cmb_eps = -1.0;
  cmb->add_option("--scores", cmb_a, "score file (the eps side of the blend)")->required();
  cmb->add_option("--scores-b", cmb_b, "second score file (the 1-eps side)");
  cmb->add_option("--labels", cmb_labels, "labeled pairs file")->required();
  cmb->add_option("--eps", cmb_eps, "combination weight in [0,1]");
  cmb->callback([&] {
    echo_config(cmb);
    io::ScoreFile a = io::read_score_file(cmb_a);
    QueryPairSet labeled = io::read_pairs_file(cmb_labels);
    if (!labeled.has_labels()) throw std::runtime_error("combine-auc: labels file has no labels");
    check_pairs_match(a.pairs, labeled, "combine-auc");

    std::vector<double> scores;
    if (cmb_b.empty()) {
      scores = a.scores;
    } else {
      if (cmb_eps < 0.0 || cmb_eps > 1.0)
        throw std::runtime_error("combine-auc: --eps in [0,1] is required with two score files");
      io::ScoreFile b = io::read_score_file(cmb_b);
      check_pairs_match(b.pairs, labeled, "combine-auc");
      scores = combine_scores(normalize_scores(a.scores), normalize_scores(b.scores), cmb_eps);
    }
    EvaluationReport report;
    report.auc = auc(scores, labeled.labels);
    for (std::uint8_t l : labeled.labels) report.positives += l;
    report.negatives = static_cast<std::int64_t>(labeled.labels.size()) - report.positives;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "auc %.5f", report.auc);
    std::cout << buf << '\n'
              << "positives " << report.positives << '\n'
              << "negatives " << report.negatives << '\n';
  });

  // ---- optimize ----------------------------------------------------------
  auto* opt = app.add_subcommand(
      "optimize", "grid search for the combination weight or the time weights");
  opt->option_defaults()->always_capture_default(true);
  std::string opt_config;
  opt->add_option("--config", opt_config, "key = value config file; flags override it")
      ->configurable(false);
  std::string opt_edges, opt_pairs, opt_labels, opt_mode = "epsilon", opt_method = "pa";
  std::string opt_theta = "uniform", opt_trace_out;
  std::string opt_grid_t0 = "0,0.25,0.5,1", opt_grid_t1 = "0,0.15,0.3,0.45,0.6,0.75,0.9";
  std::string opt_grid_t2 = "1,2,3,4", opt_grid_t3 = "2,4,6,8";
  double opt_grid_step = 0.01;
  std::uint64_t opt_node_count = 0;
  opt->add_option("--edges", opt_edges, "edge file to read")->required();
  opt->add_option("--pairs", opt_pairs, "pairs file (labeled, or see --labels)")->required();
  opt->add_option("--labels", opt_labels, "separate labeled pairs file, aligned with --pairs");
  opt->add_option("--node-count", opt_node_count,
                  "declared node count (0 = infer from edges and pairs)");
  opt->add_option("--mode", opt_mode, "search mode: epsilon or theta");
  opt->add_option("--method", opt_method, "objective scorer for theta mode");
  opt->add_option("--grid-step", opt_grid_step, "epsilon grid step");
  opt->add_option("--theta", opt_theta,
                  "adjacency weighting for epsilon mode: t0,t1,t2,t3 or 'uniform'");
  opt->add_option("--grid-t0", opt_grid_t0, "theta0 grid values");
  opt->add_option("--grid-t1", opt_grid_t1, "theta1 grid values");
  opt->add_option("--grid-t2", opt_grid_t2, "theta2 grid values");
  opt->add_option("--grid-t3", opt_grid_t3, "theta3 grid values (even integers)");
  opt->add_option("--trace-out", opt_trace_out, "write the full evaluation trace here");
  opt->callback([&] {
    echo_config(opt);
    QueryPairSet pairs = io::read_pairs_file(opt_pairs);
    if (!opt_labels.empty()) {
      QueryPairSet labeled = io::read_pairs_file(opt_labels);
      check_pairs_match(pairs, labeled, "optimize");
      pairs.labels = labeled.labels;
    }
    if (!pairs.has_labels()) throw std::runtime_error("optimize: pairs file has no labels");
    TemporalEdgeList edges = load_edges(opt_edges, declared_count(opt_node_count));
    if (opt_node_count == 0) cover_pair_ids(edges, pairs);

    if (opt_mode == "epsilon") {
      SparseAdjacency adj = SparseAdjacency::build(edges, parse_theta_arg(opt_theta));
      DegreeVector deg = adj.degrees();
      ScoreVector s_aa = score_aa(adj, deg, pairs);
      ScoreVector s_pa = score_pa(deg, pairs);
      EpsilonSearchResult result =
          optimize_epsilon(s_aa.values, s_pa.values, pairs.labels, opt_grid_step);
      if (!opt_trace_out.empty()) io::write_epsilon_trace(opt_trace_out, result.trace);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "best_eps %.6f\nbest_auc %.6f", result.best_epsilon,
                    result.best_auc);
      std::cout << buf << '\n'
                << "evaluations " << result.trace.size() << '\n';
    } else if (opt_mode == "theta") {
      ThetaGrid grid;
      grid.theta0 = parse_double_list("--grid-t0", opt_grid_t0);
      grid.theta1 = parse_double_list("--grid-t1", opt_grid_t1);
      grid.theta2 = parse_double_list("--grid-t2", opt_grid_t2);
      grid.theta3 = parse_int_list("--grid-t3", opt_grid_t3);
      ThetaSearchResult result =
          optimize_theta(edges, pairs, parse_method(opt_method), grid);
      if (!opt_trace_out.empty()) io::write_theta_trace(opt_trace_out, result.trace);
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "best_theta %.6f,%.6f,%.6f,%d\nbest_auc %.6f", result.best.theta0,
                    result.best.theta1, result.best.theta2, result.best.theta3,
                    result.best_auc);
      std::cout << buf << '\n'
                << "evaluations " << result.evaluations << '\n';
    } else {
      throw std::runtime_error("optimize: --mode must be epsilon or theta");
    }
  });

  try {
    std::vector<std::string> args = merge_config_args(argc, argv);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    reversed.pop_back();  // program name; CLI11 takes reversed bare args
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
