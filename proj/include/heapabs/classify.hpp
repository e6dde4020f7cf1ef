// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "heapabs/model.hpp"

namespace heapabs {

enum class NodeReason {
  kVarPointed,
  kBackEdgeEndpoint,
  kHorizontalEdgeEndpoint,
  kMultiIn,
  kMultiOut,
};

std::string_view to_string(NodeReason reason);

// Special iff at least one reason holds. Reasons are kept sorted and unique.
class NodeClass {
 public:
  NodeClass() = default;

  void add(NodeReason reason);
  bool special() const { return !reasons_.empty(); }
  bool ordinary() const { return reasons_.empty(); }
  bool has(NodeReason reason) const;
  const std::vector<NodeReason>& reasons() const { return reasons_; }

  friend bool operator==(const NodeClass&, const NodeClass&) = default;

 private:
  std::vector<NodeReason> reasons_;
};

using Classification = std::map<NodeId, NodeClass>;

Classification special_nodes_sll(const Component& c);
Classification special_nodes_tree(const Component& c);
Classification special_nodes_cycle(const Component& c);
Classification special_nodes_dag(const Component& c);

// Dispatches on the layout.
Classification classify(const Component& c);

std::set<NodeId> ordinary_nodes(const Component& c);

// Clauses: no edge between a and b in either direction, equal predecessor
// sets, equal successor sets. Node edges only.
bool reference_similar(const Component& c, const NodeId& a, const NodeId& b);
bool reference_similar_set(const Component& c, const Region& region);

struct SimilarityPartition {
  std::vector<Region> groups;

  friend bool operator==(const SimilarityPartition&,
                         const SimilarityPartition&) = default;
};

// Greedy partition of the ordinary nodes into reference-similar groups.
// Seeds and candidates are taken in NodeId order.
SimilarityPartition ref_similar_dag(const Component& c);

}  // namespace heapabs
