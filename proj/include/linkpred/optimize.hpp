#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "linkpred/adjacency.hpp"
#include "linkpred/evaluate.hpp"
#include "linkpred/scores.hpp"
#include "linkpred/time_weight.hpp"

namespace linkpred {

struct EpsilonTracePoint {
  double epsilon;
  double auc;
};

struct EpsilonSearchResult {
  double best_epsilon = 0.0;
  double best_auc = 0.0;
  std::vector<EpsilonTracePoint> trace;
};

// Grid search over the combination weight: evaluates AUC of
// eps * s_a + (1 - eps) * s_b for eps in {0, step, 2*step, ..., 1}, after
// min-max normalizing both inputs. Ties break toward smaller eps.
inline EpsilonSearchResult optimize_epsilon(const std::vector<double>& s_a,
                                            const std::vector<double>& s_b,
                                            const std::vector<std::uint8_t>& labels,
                                            double grid_step = 0.01) {
  if (!(grid_step > 0.0 && grid_step <= 0.5))
    throw std::invalid_argument("optimize_epsilon: grid step must lie in (0, 0.5]");
  const std::vector<double> na = normalize_scores(s_a);
  const std::vector<double> nb = normalize_scores(s_b);

  EpsilonSearchResult result;
  result.best_auc = -1.0;
  for (std::int64_t k = 0;; ++k) {
    double eps = static_cast<double>(k) * grid_step;
    const bool last = eps >= 1.0 - 1e-9;  // snap the top of the grid to 1
    if (last) eps = 1.0;
    const double value = auc(combine_scores(na, nb, eps), labels);
    result.trace.push_back({eps, value});
    if (value > result.best_auc) {
      result.best_auc = value;
      result.best_epsilon = eps;
    }
    if (last) break;
  }
  return result;
}

// One value list per parameter of the time-weight polynomial.
struct ThetaGrid {
  std::vector<double> theta0;
  std::vector<double> theta1;
  std::vector<double> theta2;
  std::vector<int> theta3;

  void check_non_empty() const {
    if (theta0.empty() || theta1.empty() || theta2.empty() || theta3.empty())
      throw std::invalid_argument("theta grid: every parameter needs at least one value");
  }
};

struct ThetaTracePoint {
  TimeWeightParams params;
  double auc;
};

struct ThetaSearchResult {
  TimeWeightParams best{0.0, 0.0, 0.0, 2};
  double best_auc = 0.0;
  std::vector<ThetaTracePoint> trace;
  std::int64_t evaluations = 0;
};

// Greedy coordinate descent over the theta grids, maximizing the AUC of the
// objective method on a labeled pair set. Each sweep scans one parameter's
// grid with the others held at their current values (theta0 first, then
// theta1, theta2, theta3); the best grid point is fixed before moving on,
// with ties broken toward the earlier grid entry. Passes repeat until no
// parameter moves or max_passes is reached. Every evaluation rebuilds the
// time-weighted adjacency, so the search is exact but deliberately brute.
inline ThetaSearchResult optimize_theta(const TemporalEdgeList& edges,
                                        const QueryPairSet& set,
                                        ScoreMethod objective,
                                        const ThetaGrid& grid,
                                        double epsilon_pa = 0.0,
                                        int max_passes = 10) {
  grid.check_non_empty();
  set.check_labels_aligned();
  if (!set.has_labels())
    throw std::invalid_argument("optimize_theta: pair set carries no labels");

  ThetaSearchResult result;
  std::size_t idx[4] = {0, 0, 0, 0};
  const std::size_t sizes[4] = {grid.theta0.size(), grid.theta1.size(),
                                grid.theta2.size(), grid.theta3.size()};

  auto params_at = [&](const std::size_t ix[4]) {
    return TimeWeightParams(grid.theta0[ix[0]], grid.theta1[ix[1]],
                            grid.theta2[ix[2]], grid.theta3[ix[3]]);
  };
  auto evaluate_point = [&](const TimeWeightParams& p) {
    SparseAdjacency adj = SparseAdjacency::build(edges, p);
    DegreeVector deg = adj.degrees();
    ScoreVector scores = score_batch(objective, adj, deg, set, epsilon_pa);
    const double value = auc(scores.values, set.labels);
    result.trace.push_back({p, value});
    ++result.evaluations;
    return value;
  };

  double current_auc = evaluate_point(params_at(idx));
  for (int pass = 0; pass < max_passes; ++pass) {
    bool moved = false;
    for (int dim = 0; dim < 4; ++dim) {
      std::size_t best_ix = 0;
      double best_auc = -1.0;
      for (std::size_t c = 0; c < sizes[dim]; ++c) {
        std::size_t probe[4] = {idx[0], idx[1], idx[2], idx[3]};
        probe[dim] = c;
        const double value = evaluate_point(params_at(probe));
        if (value > best_auc) {
          best_auc = value;
          best_ix = c;
        }
      }
      if (best_ix != idx[dim]) moved = true;
      idx[dim] = best_ix;
      current_auc = best_auc;
    }
    if (!moved) break;
  }
  result.best = params_at(idx);
  result.best_auc = current_auc;
  return result;
}

}  // namespace linkpred
