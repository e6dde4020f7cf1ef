// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "heapabs/model.hpp"

namespace heapabs::support {

std::string fixture_path(std::string_view name);
std::string golden_path(std::string_view name);
std::string read_text(const std::string& path);

// First component of a fixture file.
Component fixture_component(std::string_view name);
Heap fixture_heap(std::string_view name);

inline constexpr std::string_view kFigureFixtures[] = {
    "fig1_sll.json", "fig2_tree.json", "fig3_cycle.json", "fig4_dag.json", "mixed.json"};

// Small components from edge strings: "v=>a" points variable v at a,
// "a->b" is a node edge, "a-l->b" and "a-r->b" are labeled edges. Nodes
// named in edges are declared automatically; `nodes` adds isolated ones.
Component make_component(Layout layout, std::initializer_list<std::string_view> edges,
                         std::initializer_list<std::string_view> nodes = {});

}  // namespace heapabs::support
