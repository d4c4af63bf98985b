#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "linkpred/edge_list.hpp"
#include "linkpred/pairs.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

struct GrowthParams {
  NodeId n_final;
  int m;            // links added per arriving node
  double b_offset;  // B of the attachment kernel k + B
  std::uint64_t seed;

  void validate() const {
    if (m < 1) throw std::invalid_argument("growth params: m must be >= 1");
    if (n_final <= static_cast<NodeId>(m) + 1)
      throw std::invalid_argument("growth params: n_final must exceed m + 1");
    if (!(b_offset >= 0.0))
      throw std::invalid_argument("growth params: b_offset must be >= 0");
  }
};

// Draws existing nodes with probability proportional to degree + B. Degrees
// are tracked as an endpoint list (each edge appends both ends), so the pure
// degree-biased branch is a single uniform pick from that list; the constant
// B adds a uniform-over-nodes branch with the matching mixture weight.
class PreferentialSampler {
 public:
  void add_node() { ++nodes_; }

  void add_edge(NodeId u, NodeId v) {
    endpoints_.push_back(u);
    endpoints_.push_back(v);
  }

  NodeId node_count() const { return nodes_; }

  NodeId sample(Rng& rng, double b_offset) const {
    const double degree_mass = static_cast<double>(endpoints_.size());
    const double total = degree_mass + b_offset * static_cast<double>(nodes_);
    if (rng.next_double() * total < degree_mass)
      return endpoints_[rng.next_below(endpoints_.size())];
    return static_cast<NodeId>(rng.next_below(nodes_));
  }

  // m distinct targets, degree-biased, rejecting repeats.
  std::vector<NodeId> sample_distinct(Rng& rng, double b_offset, int m) const {
    std::vector<NodeId> picks;
    picks.reserve(static_cast<std::size_t>(m));
    while (picks.size() < static_cast<std::size_t>(m)) {
      NodeId candidate = sample(rng, b_offset);
      if (std::find(picks.begin(), picks.end(), candidate) == picks.end())
        picks.push_back(candidate);
    }
    return picks;
  }

 private:
  std::vector<NodeId> endpoints_;
  NodeId nodes_ = 0;
};

// Grows a preferential-attachment network: an (m+1)-clique seeded at t = 0,
// then one node per step t = 1, 2, ... linking to m distinct existing nodes
// drawn with probability proportional to degree + B. Every run with the same
// params is bit-identical.
inline TemporalEdgeList generate_pa_network(const GrowthParams& params) {
  params.validate();
  Rng rng(params.seed);
  PreferentialSampler sampler;
  TemporalEdgeList out;
  out.node_count = params.n_final;

  const NodeId clique = static_cast<NodeId>(params.m) + 1;
  for (NodeId i = 0; i < clique; ++i) sampler.add_node();
  for (NodeId i = 0; i < clique; ++i) {
    for (NodeId j = i + 1; j < clique; ++j) {
      out.edges.push_back({i, j, 0.0});
      sampler.add_edge(i, j);
    }
  }

  for (NodeId node = clique; node < params.n_final; ++node) {
    const double t = static_cast<double>(node - clique + 1);
    std::vector<NodeId> targets = sampler.sample_distinct(rng, params.b_offset, params.m);
    sampler.add_node();
    for (NodeId target : targets) {
      out.edges.push_back({node, target, t});
      sampler.add_edge(node, target);
    }
  }
  return out;
}

// Labeled evaluation split: a training snapshot at t1 plus sampled pairs
// unconnected at t1, labeled by whether they connect in (t1, t2].
struct BenchmarkSplit {
  TemporalEdgeList train_edges;  // edges with t <= t1, full node count kept
  QueryPairSet eval_pairs;
  double t1 = 0.0;
  double t2 = 0.0;
  std::uint64_t seed = 0;
  std::int64_t uniform_positives = 0;  // positives among the uniform draws
  std::int64_t topped_up = 0;          // negatives replaced by pool positives
};

namespace detail {

inline std::uint64_t pair_key(NodeId u, NodeId v) {
  const NodeId lo = std::min(u, v), hi = std::max(u, v);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace detail

// Samples n_pairs distinct unordered pairs uniformly from the pairs not
// connected at t1 (rejection against the snapshot). If the uniform draws
// carry fewer positives than positive_fraction_cap * n_pairs, later negatives
// are replaced by draws from the true positive pool up to that cap; the split
// records how many. A cap of 0 keeps the sample purely uniform.
inline BenchmarkSplit make_benchmark(const TemporalEdgeList& edges, double t1, double t2,
                                     std::int64_t n_pairs, double positive_fraction_cap,
                                     std::uint64_t seed) {
  if (!(t1 < t2)) throw std::invalid_argument("benchmark: t1 must precede t2");
  if (n_pairs < 1) throw std::invalid_argument("benchmark: n_pairs must be positive");
  if (!(positive_fraction_cap >= 0.0 && positive_fraction_cap <= 1.0))
    throw std::invalid_argument("benchmark: positive fraction cap must lie in [0, 1]");

  BenchmarkSplit split;
  split.t1 = t1;
  split.t2 = t2;
  split.seed = seed;
  split.train_edges.node_count = edges.node_count;

  std::unordered_set<std::uint64_t> connected;
  for (const TemporalEdge& e : edges.edges) {
    if (e.t <= t1) {
      split.train_edges.edges.push_back(e);
      connected.insert(detail::pair_key(e.u, e.v));
    }
  }

  // Future pool in first-appearance order; order matters for the top-up.
  std::vector<std::uint64_t> positive_pool;
  std::unordered_set<std::uint64_t> positive_set;
  for (const TemporalEdge& e : edges.edges) {
    if (e.t > t1 && e.t <= t2) {
      const std::uint64_t key = detail::pair_key(e.u, e.v);
      if (!connected.count(key) && positive_set.insert(key).second)
        positive_pool.push_back(key);
    }
  }

  const std::uint64_t n = edges.node_count;
  const std::int64_t universe =
      static_cast<std::int64_t>(n * (n - 1) / 2) - static_cast<std::int64_t>(connected.size());
  if (n_pairs > universe)
    throw std::invalid_argument("benchmark: n_pairs exceeds the unconnected pairs available");

  Rng rng(seed);
  std::vector<std::uint64_t> sampled;
  std::unordered_set<std::uint64_t> sampled_set;
  sampled.reserve(static_cast<std::size_t>(n_pairs));
  while (static_cast<std::int64_t>(sampled.size()) < n_pairs) {
    const NodeId u = static_cast<NodeId>(rng.next_below(n));
    const NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    const std::uint64_t key = detail::pair_key(u, v);
    if (connected.count(key) || !sampled_set.insert(key).second) continue;
    sampled.push_back(key);
  }

  for (std::uint64_t key : sampled)
    split.uniform_positives += positive_set.count(key) ? 1 : 0;

  // Stratified top-up: swap trailing uniform negatives for unseen pool
  // positives until the cap or the pool runs out. The pool is shuffled with
  // the split's generator so the extra positives are a seeded random draw.
  const std::int64_t target_positives =
      static_cast<std::int64_t>(positive_fraction_cap * static_cast<double>(n_pairs));
  if (split.uniform_positives < target_positives) {
    for (std::size_t i = positive_pool.size(); i > 1; --i)
      std::swap(positive_pool[i - 1], positive_pool[rng.next_below(i)]);
    std::vector<std::uint64_t> replacements;
    for (std::uint64_t key : positive_pool) {
      if (static_cast<std::int64_t>(replacements.size()) >=
          target_positives - split.uniform_positives)
        break;
      if (!sampled_set.count(key)) replacements.push_back(key);
    }
    std::size_t next = 0;
    for (std::size_t i = sampled.size(); i-- > 0 && next < replacements.size();) {
      if (!positive_set.count(sampled[i])) {
        sampled_set.erase(sampled[i]);
        sampled[i] = replacements[next];
        sampled_set.insert(replacements[next]);
        ++next;
      }
    }
    split.topped_up = static_cast<std::int64_t>(next);
  }

  split.eval_pairs.pairs.reserve(sampled.size());
  split.eval_pairs.labels.reserve(sampled.size());
  for (std::uint64_t key : sampled) {
    const NodeId u = static_cast<NodeId>(key >> 32);
    const NodeId v = static_cast<NodeId>(key & 0xffffffffu);
    split.eval_pairs.pairs.emplace_back(u, v);
    split.eval_pairs.labels.push_back(positive_set.count(key) ? 1 : 0);
  }
  return split;
}

}  // namespace linkpred
