#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkpred/adjacency.hpp"
#include "linkpred/pairs.hpp"

namespace linkpred {

// Scores aligned index-for-index with the QueryPairSet they were computed
// from, tagged with the producing method.
struct ScoreVector {
  std::vector<double> values;
  std::string method;
};

enum class ScoreMethod { pa, cn, aa, ra, l3 };

inline ScoreMethod parse_method(std::string_view name) {
  if (name == "pa") return ScoreMethod::pa;
  if (name == "cn") return ScoreMethod::cn;
  if (name == "aa") return ScoreMethod::aa;
  if (name == "ra") return ScoreMethod::ra;
  if (name == "l3") return ScoreMethod::l3;
  throw std::invalid_argument("unknown scoring method '" + std::string(name) +
                              "' (expected pa, cn, aa, ra or l3)");
}

inline const char* method_name(ScoreMethod m) {
  switch (m) {
    case ScoreMethod::pa: return "pa";
    case ScoreMethod::cn: return "cn";
    case ScoreMethod::aa: return "aa";
    case ScoreMethod::ra: return "ra";
    case ScoreMethod::l3: return "l3";
  }
  return "?";
}

// Preferential attachment: s = k_u + k_v + eps * sqrt(k_u * k_v). The degree
// sum scores pairs with zero-degree endpoints too, which pure path methods
// cannot; eps = 0 is the tuned default.
inline ScoreVector score_pa(const DegreeVector& deg, const QueryPairSet& set,
                            double epsilon_pa = 0.0) {
  set.check_ids_below(static_cast<NodeId>(deg.size()));
  ScoreVector out{{}, "pa"};
  out.values.reserve(set.pairs.size());
  for (const auto& [u, v] : set.pairs) {
    double s = deg[u] + deg[v];
    if (epsilon_pa != 0.0) s += epsilon_pa * std::sqrt(deg[u] * deg[v]);
    out.values.push_back(s);
  }
  return out;
}

// Common neighbours: s = (A^2)_uv.
inline ScoreVector score_cn(const SparseAdjacency& adj, const QueryPairSet& set) {
  set.check_ids_below(adj.node_count());
  ScoreVector out{{}, "cn"};
  out.values.reserve(set.pairs.size());
  for (const auto& [u, v] : set.pairs)
    out.values.push_back(adj.common_neighbor_weight(u, v));
  return out;
}

namespace detail {

// Sorted-row merge accumulating fw(A_iu * A_ju, k_u) over common neighbours
// u of (i, j). All common-neighbour scorers reduce to this.
template <class FW>
inline double merge_common(const SparseAdjacency& adj, const DegreeVector& deg,
                           NodeId i, NodeId j, FW fw) {
  auto ci = adj.neighbors(i);
  auto cj = adj.neighbors(j);
  auto wi = adj.weights(i);
  auto wj = adj.weights(j);
  double sum = 0.0;
  std::size_t a = 0, b = 0;
  while (a < ci.size() && b < cj.size()) {
    if (ci[a] < cj[b]) {
      ++a;
    } else if (ci[a] > cj[b]) {
      ++b;
    } else {
      sum += fw(wi[a] * wj[b], deg[ci[a]]);
      ++a;
      ++b;
    }
  }
  return sum;
}

}  // namespace detail

// Adamic-Adar with the path-weight numerator: s = sum_u A_iu*A_ju / ln(k_u).
// Common neighbours with weighted degree k_u <= 1 contribute nothing --
// unreachable with unit weights (a common neighbour has k >= 2) but possible
// under time weighting, where ln(k_u) would be zero or negative.
inline ScoreVector score_aa(const SparseAdjacency& adj, const DegreeVector& deg,
                            const QueryPairSet& set) {
  set.check_ids_below(adj.node_count());
  ScoreVector out{{}, "aa"};
  out.values.reserve(set.pairs.size());
  for (const auto& [u, v] : set.pairs)
    out.values.push_back(detail::merge_common(
        adj, deg, u, v,
        [](double w, double k) { return k > 1.0 ? w / std::log(k) : 0.0; }));
  return out;
}

// Resource allocation: s = sum_u A_iu*A_ju / k_u.
inline ScoreVector score_ra(const SparseAdjacency& adj, const DegreeVector& deg,
                            const QueryPairSet& set) {
  set.check_ids_below(adj.node_count());
  ScoreVector out{{}, "ra"};
  out.values.reserve(set.pairs.size());
  for (const auto& [u, v] : set.pairs)
    out.values.push_back(detail::merge_common(
        adj, deg, u, v,
        [](double w, double k) { return k > 0.0 ? w / k : 0.0; }));
  return out;
}

// Degree-normalized paths of length 3:
//
//   s = sum_{u,v not in {i,j}} A_iu * A_uv * A_vj / sqrt(k_u * k_v)
//
// computed by expanding row(i) one hop into a sparse accumulator and
// intersecting with row(j), never materializing A^2 or A^3.
class L3Scorer {
 public:
  explicit L3Scorer(const SparseAdjacency& adj, const DegreeVector& deg)
      : adj_(adj), deg_(deg), acc_(adj.node_count(), 0.0) {
    touched_.reserve(256);
  }

  double pair_score(NodeId i, NodeId j) {
    auto ci = adj_.neighbors(i);
    auto wi = adj_.weights(i);
    for (std::size_t a = 0; a < ci.size(); ++a) {
      NodeId u = ci[a];
      if (u == j) continue;
      double lead = wi[a] / std::sqrt(deg_[u]);
      auto cu = adj_.neighbors(u);
      auto wu = adj_.weights(u);
      for (std::size_t b = 0; b < cu.size(); ++b) {
        NodeId v = cu[b];
        if (v == i || v == j) continue;
        if (acc_[v] == 0.0) touched_.push_back(v);
        acc_[v] += lead * wu[b];
      }
    }
    auto cj = adj_.neighbors(j);
    auto wj = adj_.weights(j);
    double sum = 0.0;
    for (std::size_t b = 0; b < cj.size(); ++b) {
      NodeId v = cj[b];
      if (acc_[v] != 0.0) sum += acc_[v] * wj[b] / std::sqrt(deg_[v]);
    }
    for (NodeId v : touched_) acc_[v] = 0.0;
    touched_.clear();
    return sum;
  }

 private:
  const SparseAdjacency& adj_;
  const DegreeVector& deg_;
  std::vector<double> acc_;
  std::vector<NodeId> touched_;
};

inline ScoreVector score_l3(const SparseAdjacency& adj, const DegreeVector& deg,
                            const QueryPairSet& set) {
  set.check_ids_below(adj.node_count());
  L3Scorer scorer(adj, deg);
  ScoreVector out{{}, "l3"};
  out.values.reserve(set.pairs.size());
  for (const auto& [u, v] : set.pairs) out.values.push_back(scorer.pair_score(u, v));
  return out;
}

// Single entry point used by the CLI; epsilon_pa only applies to pa.
inline ScoreVector score_batch(ScoreMethod method, const SparseAdjacency& adj,
                               const DegreeVector& deg, const QueryPairSet& set,
                               double epsilon_pa = 0.0) {
  switch (method) {
    case ScoreMethod::pa: return score_pa(deg, set, epsilon_pa);
    case ScoreMethod::cn: return score_cn(adj, set);
    case ScoreMethod::aa: return score_aa(adj, deg, set);
    case ScoreMethod::ra: return score_ra(adj, deg, set);
    case ScoreMethod::l3: return score_l3(adj, deg, set);
  }
  throw std::invalid_argument("score_batch: unhandled method");
}

}  // namespace linkpred
