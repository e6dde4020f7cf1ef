// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// JSON documents for heaps and witnesses, and DOT export.
//
// Heap:
//   {"components":[{"layout":"SLL|T|C|DAG","variables":[...],"nodes":[...],
//                   "var_edges":[[var,node],...],
//                   "node_edges":[[src,dst],...] or [[src,dst,"l"|"r"],...]}]}
// Witness:
//   {"node_map":{src:dst,...},"edge_map":[[<edge>,<edge>],...]}
//   <edge> is ["var",v,n], ["node",x,y] or ["tree",x,y,"l"|"r"].
// Witness list (one per heap component):
//   {"witnesses":[<witness>,...]}
//
// Serialization is canonical: fixed key order, sorted lists, two-space
// indentation, LF line endings and a trailing newline.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heapabs/model.hpp"
#include "heapabs/witness.hpp"

namespace heapabs {

// Throws Error with category kParse, kSchema or kModel. Locations are
// "line L, column C" for syntax errors and JSON pointers otherwise.
Heap parse_heap(std::string_view text);
std::string serialize_heap(const Heap& h);

Witness parse_witness(std::string_view text);
std::string serialize_witness(const Witness& w);

// Accepts a witness list document or, for convenience, a single witness.
std::vector<Witness> parse_witness_list(std::string_view text);
std::string serialize_witness_list(std::span<const Witness> witnesses);

struct DotOptions {
  std::string graph_name = "heap";
  // Caption each cluster with its index and layout.
  bool cluster_labels = true;
};

std::string export_dot(const Heap& h, const DotOptions& options = {});

}  // namespace heapabs
