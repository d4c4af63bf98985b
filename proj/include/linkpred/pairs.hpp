#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkpred/edge_list.hpp"

namespace linkpred {

// Candidate node pairs to score, optionally carrying connected-later labels
// aligned index-for-index with the pairs. Pair order is significant and is
// preserved through every operation; scores and labels line up positionally.
struct QueryPairSet {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<std::uint8_t> labels;  // empty, or one 0/1 flag per pair

  bool has_labels() const { return !labels.empty(); }

  void check_labels_aligned() const {
    if (has_labels() && labels.size() != pairs.size())
      throw std::invalid_argument("pair set: labels do not align with pairs");
  }

  void check_ids_below(NodeId n) const {
    for (const auto& [u, v] : pairs)
      if (u >= n || v >= n)
        throw std::out_of_range("pair set: node id out of range for this graph");
  }
};

}  // namespace linkpred
