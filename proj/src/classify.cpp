// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/classify.hpp"

#include <algorithm>

namespace heapabs {

std::string_view to_string(NodeReason reason) {
  switch (reason) {
    case NodeReason::kVarPointed: return "VarPointed";
    case NodeReason::kBackEdgeEndpoint: return "BackEdgeEndpoint";
    case NodeReason::kHorizontalEdgeEndpoint: return "HorizontalEdgeEndpoint";
    case NodeReason::kMultiIn: return "MultiIn";
    case NodeReason::kMultiOut: return "MultiOut";
  }
  return "?";
}

void NodeClass::add(NodeReason reason) {
  auto it = std::lower_bound(reasons_.begin(), reasons_.end(), reason);
  if (it == reasons_.end() || *it != reason) reasons_.insert(it, reason);
}

bool NodeClass::has(NodeReason reason) const {
  return std::binary_search(reasons_.begin(), reasons_.end(), reason);
}

namespace {

void require_layout(const Component& c, Layout layout) {
  if (c.layout() != layout) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "expected a " + std::string(to_string(layout)) +
                    " component, got " + std::string(to_string(c.layout())));
  }
}

void require_node(const Component& c, const NodeId& n) {
  if (!c.has_node(n)) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kUnknownNode,
                "'" + n.str() + "' is not a node of the component");
  }
}

Classification with_var_pointed(const Component& c) {
  Classification out;
  for (const NodeId& n : c.nodes()) out[n];
  for (const Edge& e : c.edges()) {
    if (e.is_var() && c.has_node(e.dst())) {
      out[e.dst()].add(NodeReason::kVarPointed);
    }
  }
  return out;
}

bool similar_with(const Adjacency& adj, const NodeId& a, const NodeId& b) {
  const auto& succ_a = adj.succ(a);
  const auto& succ_b = adj.succ(b);
  if (succ_a.contains(b) || succ_b.contains(a)) return false;
  return adj.pred(a) == adj.pred(b) && succ_a == succ_b;
}

}  // namespace

Classification special_nodes_sll(const Component& c) {
  require_layout(c, Layout::SLL);
  Classification out = with_var_pointed(c);
  const auto depth = depth_map(c);
  for (const Edge& e : c.edges()) {
    if (!e.is_structural()) continue;
    if (depth.at(e.src()) > depth.at(e.dst())) {
      out[e.src()].add(NodeReason::kBackEdgeEndpoint);
      out[e.dst()].add(NodeReason::kBackEdgeEndpoint);
    }
  }
  return out;
}

Classification special_nodes_tree(const Component& c) {
  require_layout(c, Layout::T);
  Classification out = with_var_pointed(c);
  const auto depth = depth_map(c);
  for (const Edge& e : c.edges()) {
    if (!e.is_structural() || e.is_self()) continue;
    const std::size_t ds = depth.at(e.src());
    const std::size_t dd = depth.at(e.dst());
    if (ds < dd) continue;
    const NodeReason reason = ds > dd ? NodeReason::kBackEdgeEndpoint
                                      : NodeReason::kHorizontalEdgeEndpoint;
    out[e.src()].add(reason);
    out[e.dst()].add(reason);
  }
  return out;
}

Classification special_nodes_cycle(const Component& c) {
  require_layout(c, Layout::C);
  Classification out = with_var_pointed(c);
  for (const NodeId& n : c.nodes()) {
    const Region single{n};
    if (edges_in(c, single).size() > 1) out[n].add(NodeReason::kMultiIn);
    if (edges_out(c, single).size() > 1) out[n].add(NodeReason::kMultiOut);
  }
  return out;
}

Classification special_nodes_dag(const Component& c) {
  require_layout(c, Layout::DAG);
  return with_var_pointed(c);
}

Classification classify(const Component& c) {
  switch (c.layout()) {
    case Layout::SLL: return special_nodes_sll(c);
    case Layout::T: return special_nodes_tree(c);
    case Layout::C: return special_nodes_cycle(c);
    case Layout::DAG: return special_nodes_dag(c);
  }
  return {};
}

std::set<NodeId> ordinary_nodes(const Component& c) {
  std::set<NodeId> out;
  for (const auto& [node, cls] : classify(c)) {
    if (cls.ordinary()) out.insert(node);
  }
  return out;
}

bool reference_similar(const Component& c, const NodeId& a, const NodeId& b) {
  require_layout(c, Layout::DAG);
  require_node(c, a);
  require_node(c, b);
  if (a == b) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kSameNode,
                "reference similarity needs two distinct nodes");
  }
  return similar_with(Adjacency(c), a, b);
}

bool reference_similar_set(const Component& c, const Region& region) {
  require_layout(c, Layout::DAG);
  for (const NodeId& n : region) require_node(c, n);
  const Adjacency adj(c);
  for (auto i = region.begin(); i != region.end(); ++i) {
    for (auto j = std::next(i); j != region.end(); ++j) {
      if (!similar_with(adj, *i, *j)) return false;
    }
  }
  return true;
}

SimilarityPartition ref_similar_dag(const Component& c) {
  require_layout(c, Layout::DAG);
  const Adjacency adj(c);
  std::set<NodeId> remaining = ordinary_nodes(c);
  SimilarityPartition out;
  while (!remaining.empty()) {
    Region group{*remaining.begin()};
    for (const NodeId& b : remaining) {
      if (group.contains(b)) continue;
      bool fits = std::all_of(group.begin(), group.end(), [&](const NodeId& a) {
        return similar_with(adj, a, b);
      });
      if (fits) group.insert(b);
    }
    for (const NodeId& n : group) remaining.erase(n);
    out.groups.push_back(std::move(group));
  }
  return out;
}

}  // namespace heapabs
