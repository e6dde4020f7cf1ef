// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

// Graph model shared by concrete and abstract heaps. A concrete component is
// just a component whose node ids happen to name addresses, so one type
// serves both sides.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "heapabs/error.hpp"

namespace heapabs {

enum class Layout { SLL, T, C, DAG };

std::string_view to_string(Layout layout);
std::optional<Layout> parse_layout(std::string_view text);

template <class Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;

 private:
  std::string value_;
};

using NodeId = Id<struct NodeIdTag>;
using VarId = Id<struct VarIdTag>;

// Nonempty, no whitespace, no commas.
bool is_valid_token(std::string_view text);

enum class Label { kNone, kLeft, kRight };

std::string_view to_string(Label label);

enum class EdgeKind { kVar, kNode, kLabeled };

// One pointer. Variable edges keep the variable name in the source slot.
class Edge {
 public:
  static Edge var(VarId var, NodeId target);
  static Edge node(NodeId src, NodeId dst);
  static Edge labeled(NodeId src, NodeId dst, Label label);

  EdgeKind kind() const { return kind_; }
  bool is_var() const { return kind_ == EdgeKind::kVar; }
  // Node or labeled edge, i.e. an edge between two nodes.
  bool is_structural() const { return kind_ != EdgeKind::kVar; }
  bool is_self() const { return is_structural() && source_ == target_.str(); }

  VarId var() const { return VarId(source_); }
  NodeId src() const { return NodeId(source_); }
  const NodeId& dst() const { return target_; }
  Label label() const { return label_; }

  // Same kind, variable and label, with the node endpoints replaced. For a
  // variable edge only `dst` is used.
  Edge with_endpoints(const NodeId& src, const NodeId& dst) const;

  std::string to_string() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  Edge(EdgeKind kind, std::string source, NodeId target, Label label)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)),
        label_(label) {}

  EdgeKind kind_ = EdgeKind::kNode;
  std::string source_;
  NodeId target_;
  Label label_ = Label::kNone;
};

using Region = std::set<NodeId>;

// A labeled directed graph with a layout tag. Construction is permissive:
// ill-formed components can be built and are reported by
// validate_component().
class Component {
 public:
  explicit Component(Layout layout = Layout::SLL) : layout_(layout) {}

  Layout layout() const { return layout_; }
  const std::set<VarId>& vars() const { return vars_; }
  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }

  bool has_var(const VarId& v) const { return vars_.contains(v); }
  bool has_node(const NodeId& n) const { return nodes_.contains(n); }
  bool has_edge(const Edge& e) const { return edges_.contains(e); }

  // Each returns false when the element was already present (sets).
  bool add_var(VarId v);
  bool add_node(NodeId n);
  bool add_edge(Edge e);

  bool erase_edge(const Edge& e);
  // Removes the node only; incident edges are left for the caller.
  bool erase_node(const NodeId& n);

  std::vector<Edge> var_edges() const;
  std::vector<Edge> structural_edges() const;

  friend bool operator==(const Component&, const Component&) = default;

 private:
  Layout layout_;
  std::set<VarId> vars_;
  std::set<NodeId> nodes_;
  std::set<Edge> edges_;
};

struct Heap {
  std::vector<Component> components;

  friend bool operator==(const Heap&, const Heap&) = default;
};

// Predecessor/successor sets over node and labeled edges (self edges
// included). Labels are ignored.
struct Adjacency {
  std::map<NodeId, std::set<NodeId>> successors;
  std::map<NodeId, std::set<NodeId>> predecessors;

  explicit Adjacency(const Component& c);

  const std::set<NodeId>& succ(const NodeId& n) const;
  const std::set<NodeId>& pred(const NodeId& n) const;
};

// P(R): structural edges with both endpoints in r.
std::set<Edge> region_edges(const Component& c, const Region& r);
// P_in(R): structural edges entering r from outside.
std::set<Edge> edges_in(const Component& c, const Region& r);
// P_out(R): structural edges leaving r.
std::set<Edge> edges_out(const Component& c, const Region& r);

// Every concrete heap is an abstract one; identity embedding.
Heap lift_concrete(const Heap& h);

// Roots are nodes without incoming non-self structural edges, plus
// variable-pointed nodes not reachable from those. Depth is the BFS
// distance from the nearest root. Throws UnreachableNode otherwise.
std::map<NodeId, std::size_t> depth_map(const Component& c);

// Maximum depth; layout T only.
std::size_t height(const Component& c);

std::vector<Violation> validate_component(const Component& c);

struct HeapViolation {
  std::size_t component;
  Violation violation;
};

// Per-component validation plus cross-component id disjointness.
std::vector<HeapViolation> validate_heap(const Heap& h);

}  // namespace heapabs
