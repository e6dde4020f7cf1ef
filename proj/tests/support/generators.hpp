// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// Random valid components for property tests. Node ids are assigned
// through a random permutation, so their sort order carries no structure.

#pragma once

#include <cstddef>
#include <random>
#include <string>

#include "heapabs/model.hpp"
#include "heapabs/witness.hpp"

namespace heapabs::support {

using Rng = std::mt19937_64;

struct GenOptions {
  std::size_t max_nodes = 30;
  // Prepended to every node and variable id.
  std::string prefix;
};

Component random_sll(Rng& rng, const GenOptions& options);
Component random_tree(Rng& rng, const GenOptions& options);
Component random_cycle(Rng& rng, const GenOptions& options);
Component random_dag(Rng& rng, const GenOptions& options);
Component random_component(Layout layout, Rng& rng, const GenOptions& options);

// Components with disjoint ids and random layouts.
Heap random_heap(Rng& rng, std::size_t max_components, std::size_t max_nodes);

// Renames nodes through a random bijection. Returns the renaming too.
Component shuffle_ids(const Component& c, Rng& rng, NodeMap* renaming = nullptr);

Component rename_nodes(const Component& c, const NodeMap& renaming);

inline constexpr Layout kAllLayouts[] = {Layout::SLL, Layout::T, Layout::C, Layout::DAG};

}  // namespace heapabs::support
