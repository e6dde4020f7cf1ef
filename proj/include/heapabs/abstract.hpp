// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// Per-layout component abstraction. Every run classifies the input once,
// merges ordinary nodes only, keeps the ids of surviving nodes, and returns
// a witness mapping each input node to the survivor that absorbed it.

#pragma once

#include <cstddef>
#include <vector>

#include "heapabs/model.hpp"
#include "heapabs/witness.hpp"

namespace heapabs {

// One merge step. SLL and C steps remove one node, T steps remove the two
// children of the survivor; DAG logs each absorbed group member separately.
struct MergeEvent {
  NodeId survivor;
  std::vector<NodeId> removed;

  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

struct AbstractionResult {
  Component output;
  Witness witness;
  std::vector<MergeEvent> merge_log;
  // Number of ordinary nodes at entry.
  std::size_t candidates = 0;
  // Upper bound on merge_log.size() for this layout and input.
  std::size_t merge_bound = 0;
};

// Deletes `removed`, redirecting its edges to `survivor`. The edge
// (survivor, removed) is dropped; SLL, C and DAG only.
Component remove_node(const Component& c, const NodeId& survivor,
                      const NodeId& removed);

// Deletes both nodes with every edge incident to either; T only.
Component remove_nodes_tree(const Component& c, const NodeId& first,
                            const NodeId& second);

AbstractionResult abstract_sll(const Component& c);
AbstractionResult abstract_tree(const Component& c);
AbstractionResult abstract_cycle(const Component& c);
AbstractionResult abstract_dag(const Component& c);

// Dispatches on the layout.
AbstractionResult abstract_component(const Component& c);

// Checks the result contract minus the witness: the output is a valid
// component of the same layout, every special input node survives with its
// variable edges and maps to itself, and the merge bound holds.
std::vector<Violation> verify_structure(const Component& input,
                                        const AbstractionResult& result);

// verify_structure plus check_valid_abstraction on the witness.
std::vector<Violation> verify_result(const Component& input,
                                     const AbstractionResult& result);

struct HeapAbstraction {
  Heap heap;
  std::vector<AbstractionResult> results;

  std::vector<Witness> witnesses() const;
};

// Abstracts every component in order. Throws a ModelError located at the
// first invalid component.
HeapAbstraction heap_abstract(const Heap& h);

}  // namespace heapabs
