// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// Valid-abstraction certificates. A witness maps the component being
// abstracted (source) onto its abstraction (target): both maps are total on
// the source and onto the target, and every edge goes to the edge between
// the images of its endpoints.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "heapabs/model.hpp"

namespace heapabs {

using NodeMap = std::map<NodeId, NodeId>;

struct Witness {
  NodeMap node_map;
  std::map<Edge, Edge> edge_map;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// The edge forced by compatibility: endpoints mapped, var and label kept.
// Nodes missing from `node_map` are left unchanged.
Edge image_of(const Edge& e, const NodeMap& node_map);

// Witness whose edge map is forced by `node_map` over the source's edges.
Witness induced_witness(const Component& source, const NodeMap& node_map);

Witness identity_witness(const Component& c);

// Reports every failure; empty means `target` is a valid abstraction of
// `source` witnessed by `w`.
std::vector<Violation> check_valid_abstraction(const Component& source,
                                               const Component& target,
                                               const Witness& w);

// Witness for A -> C from witnesses for A -> B and B -> C. Throws
// DomainMismatch when an image of `first` is outside the domain of `second`.
Witness compose(const Witness& first, const Witness& second);

inline constexpr std::size_t kDefaultNodeBudget = 8;

// Exhaustive search over onto node maps. Throws BudgetExceeded when the
// source has more than `node_budget` nodes.
std::optional<Witness> find_witness_bruteforce(
    const Component& source, const Component& target,
    std::size_t node_budget = kDefaultNodeBudget);

// Equality up to renaming of nodes; layout and variable names must match.
bool isomorphic(const Component& a, const Component& b);

}  // namespace heapabs
