#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "linkpred/adjacency.hpp"
#include "linkpred/pairs.hpp"

namespace linkpred {

// Min-max normalization to [0, 1]. A constant vector maps to all zeros,
// which lets a degenerate score array drop cleanly out of a combination.
inline std::vector<double> normalize_scores(const std::vector<double>& s) {
  if (s.empty()) throw std::invalid_argument("normalize_scores: empty score vector");
  auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(s.size(), 0.0);
  if (hi > lo) {
    const double span = hi - lo;
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] - lo) / span;
  }
  return out;
}

// Linear blend eps * s_a + (1 - eps) * s_b of two already-normalized score
// arrays; eps = 1 keeps only s_a, eps = 0 only s_b.
inline std::vector<double> combine_scores(const std::vector<double>& s_a,
                                          const std::vector<double>& s_b,
                                          double epsilon) {
  if (s_a.size() != s_b.size())
    throw std::invalid_argument("combine_scores: score vectors differ in length");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("combine_scores: weight must lie in [0, 1]");
  std::vector<double> out(s_a.size());
  for (std::size_t i = 0; i < s_a.size(); ++i)
    out[i] = epsilon * s_a[i] + (1.0 - epsilon) * s_b[i];
  return out;
}

// AUC by the Mann-Whitney rank statistic: the probability that a random
// positive outranks a random negative, ties counted half. Computed in
// O(M log M) by sorting once and averaging ranks across tie groups; exact
// versus the quadratic pairwise count.
inline double auc(const std::vector<double>& scores,
                  const std::vector<std::uint8_t>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("auc: scores and labels differ in length");
  std::int64_t positives = 0;
  for (std::uint8_t l : labels) positives += l ? 1 : 0;
  const std::int64_t negatives = static_cast<std::int64_t>(labels.size()) - positives;
  if (positives == 0 || negatives == 0)
    throw std::invalid_argument("auc: needs at least one positive and one negative label");

  std::vector<std::uint32_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return a < b;
  });

  // Sum of average ranks over positives; tie groups share (first+last)/2.
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    std::int64_t group_positives = 0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      group_positives += labels[order[j]] ? 1 : 0;
      ++j;
    }
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    positive_rank_sum += avg_rank * static_cast<double>(group_positives);
    i = j;
  }
  const double u_stat = positive_rank_sum -
                        0.5 * static_cast<double>(positives) * static_cast<double>(positives + 1);
  return u_stat / (static_cast<double>(positives) * static_cast<double>(negatives));
}

// Query pairs bucketed by endpoint degrees, the split that shows why a
// degree-based score can rank pairs that path counts cannot reach.
struct CategoryCounts {
  std::int64_t both_zero = 0;      // (k = 0, k = 0)
  std::int64_t one_zero = 0;       // (k = 0, k > 0)
  std::int64_t both_positive = 0;  // (k > 0, k > 0)
};

inline CategoryCounts classify_pairs(const DegreeVector& deg, const QueryPairSet& set) {
  set.check_ids_below(static_cast<NodeId>(deg.size()));
  CategoryCounts counts;
  for (const auto& [u, v] : set.pairs) {
    const int zeros = (deg[u] == 0.0 ? 1 : 0) + (deg[v] == 0.0 ? 1 : 0);
    if (zeros == 2)
      ++counts.both_zero;
    else if (zeros == 1)
      ++counts.one_zero;
    else
      ++counts.both_positive;
  }
  return counts;
}

struct EvaluationReport {
  double auc = 0.0;
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  CategoryCounts categories;
};

inline EvaluationReport evaluate(const std::vector<double>& scores,
                                 const QueryPairSet& set, const DegreeVector& deg) {
  set.check_labels_aligned();
  if (!set.has_labels())
    throw std::invalid_argument("evaluate: pair set carries no labels");
  EvaluationReport report;
  report.auc = auc(scores, set.labels);
  for (std::uint8_t l : set.labels) report.positives += l ? 1 : 0;
  report.negatives = static_cast<std::int64_t>(set.labels.size()) - report.positives;
  report.categories = classify_pairs(deg, set);
  return report;
}

}  // namespace linkpred
