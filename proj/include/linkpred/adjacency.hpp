#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkpred/edge_list.hpp"
#include "linkpred/time_weight.hpp"

namespace linkpred {

// Weighted degrees k_i = sum_j A_ij, indexed by node id.
using DegreeVector = std::vector<double>;

// Symmetric weighted sparse adjacency matrix in CSR form. Entry (i,j) holds
// the sum of per-link weights over every occurrence of the pair in the edge
// list, so repeated links accumulate. The diagonal is empty and every stored
// weight is positive. Once built the structure is immutable and safe for
// concurrent readers.
class SparseAdjacency {
 public:
  // Uniform weighting when `weighting` is empty, otherwise each occurrence
  // contributes f_theta(t_norm) with timestamps normalized over this list's
  // global min/max. Zero-weight occurrences never create entries.
  static SparseAdjacency build(const TemporalEdgeList& list,
                               const std::optional<TimeWeightParams>& weighting = std::nullopt) {
    SparseAdjacency adj;
    adj.n_ = list.node_count;
    for (const TemporalEdge& e : list.edges)
      if (e.u >= adj.n_ || e.v >= adj.n_ || e.u == e.v)
        throw std::invalid_argument("adjacency: edge list violates node bounds");

    std::vector<double> edge_weights(list.edges.size(), 1.0);
    if (weighting && !list.edges.empty()) {
      TemporalEdgeList normalized = normalize_times(list);
      for (std::size_t e = 0; e < normalized.edges.size(); ++e)
        edge_weights[e] = time_weight(*weighting, normalized.edges[e].t);
    }

    // Raw CSR with one slot per edge endpoint, row slices in file order.
    std::vector<std::int64_t> counts(adj.n_ + 1, 0);
    std::size_t kept = 0;
    for (std::size_t e = 0; e < list.edges.size(); ++e) {
      if (edge_weights[e] == 0.0) continue;
      ++counts[list.edges[e].u + 1];
      ++counts[list.edges[e].v + 1];
      ++kept;
    }
    for (NodeId i = 0; i < adj.n_; ++i) counts[i + 1] += counts[i];

    std::vector<NodeId> raw_col(2 * kept);
    std::vector<double> raw_val(2 * kept);
    std::vector<std::int64_t> cursor(counts.begin(), counts.end() - 1);
    for (std::size_t e = 0; e < list.edges.size(); ++e) {
      if (edge_weights[e] == 0.0) continue;
      const TemporalEdge& edge = list.edges[e];
      raw_col[cursor[edge.u]] = edge.v;
      raw_val[cursor[edge.u]++] = edge_weights[e];
      raw_col[cursor[edge.v]] = edge.u;
      raw_val[cursor[edge.v]++] = edge_weights[e];
    }

    // Sort each row by column, then merge duplicates. The stable sort keeps
    // same-pair occurrences in file order, so the weight sums accumulate in
    // file order and both triangle halves add in the same sequence.
    adj.row_ptr_.assign(adj.n_ + 1, 0);
    adj.col_.reserve(2 * kept);
    adj.val_.reserve(2 * kept);
    std::vector<std::pair<NodeId, double>> row;
    for (NodeId i = 0; i < adj.n_; ++i) {
      row.clear();
      for (std::int64_t s = counts[i]; s < counts[i + 1]; ++s)
        row.emplace_back(raw_col[s], raw_val[s]);
      std::stable_sort(row.begin(), row.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t r = 0;
      while (r < row.size()) {
        NodeId col = row[r].first;
        double sum = 0.0;
        for (; r < row.size() && row[r].first == col; ++r) sum += row[r].second;
        adj.col_.push_back(col);
        adj.val_.push_back(sum);
      }
      adj.row_ptr_[i + 1] = static_cast<std::int64_t>(adj.col_.size());
    }
    return adj;
  }

  NodeId node_count() const { return n_; }

  // Number of stored directed entries (twice the number of node pairs).
  std::int64_t stored_entries() const { return static_cast<std::int64_t>(col_.size()); }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {col_.data() + row_ptr_[i], col_.data() + row_ptr_[i + 1]};
  }

  std::span<const double> weights(NodeId i) const {
    return {val_.data() + row_ptr_[i], val_.data() + row_ptr_[i + 1]};
  }

  // A_ij, or 0 when the pair is absent.
  double entry(NodeId i, NodeId j) const {
    auto cols = neighbors(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return weights(i)[static_cast<std::size_t>(it - cols.begin())];
  }

  DegreeVector degrees() const {
    DegreeVector k(n_, 0.0);
    for (NodeId i = 0; i < n_; ++i) {
      double sum = 0.0;
      for (double w : weights(i)) sum += w;
      k[i] = sum;
    }
    return k;
  }

  // (A^2)_ij = sum_u A_iu * A_uj, via a sorted merge of the two rows. With
  // unit weights this is the common-neighbour count.
  double common_neighbor_weight(NodeId i, NodeId j) const {
    auto ci = neighbors(i);
    auto cj = neighbors(j);
    auto wi = weights(i);
    auto wj = weights(j);
    double sum = 0.0;
    std::size_t a = 0, b = 0;
    while (a < ci.size() && b < cj.size()) {
      if (ci[a] < cj[b]) {
        ++a;
      } else if (ci[a] > cj[b]) {
        ++b;
      } else {
        sum += wi[a] * wj[b];
        ++a;
        ++b;
      }
    }
    return sum;
  }

 private:
  NodeId n_ = 0;
  std::vector<std::int64_t> row_ptr_{0};
  std::vector<NodeId> col_;
  std::vector<double> val_;
};

}  // namespace linkpred
