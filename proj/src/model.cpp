// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/model.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>

namespace heapabs {

std::string_view to_string(Layout layout) {
  switch (layout) {
    case Layout::SLL: return "SLL";
    case Layout::T: return "T";
    case Layout::C: return "C";
    case Layout::DAG: return "DAG";
  }
  return "?";
}

std::optional<Layout> parse_layout(std::string_view text) {
  if (text == "SLL") return Layout::SLL;
  if (text == "T") return Layout::T;
  if (text == "C") return Layout::C;
  if (text == "DAG") return Layout::DAG;
  return std::nullopt;
}

bool is_valid_token(std::string_view text) {
  if (text.empty()) return false;
  return std::none_of(text.begin(), text.end(), [](char ch) {
    return ch == ',' || std::isspace(static_cast<unsigned char>(ch)) != 0;
  });
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kNone: return "";
    case Label::kLeft: return "l";
    case Label::kRight: return "r";
  }
  return "";
}

Edge Edge::var(VarId var, NodeId target) {
  return Edge(EdgeKind::kVar, var.str(), std::move(target), Label::kNone);
}

Edge Edge::node(NodeId src, NodeId dst) {
  return Edge(EdgeKind::kNode, src.str(), std::move(dst), Label::kNone);
}

Edge Edge::labeled(NodeId src, NodeId dst, Label label) {
  return Edge(EdgeKind::kLabeled, src.str(), std::move(dst), label);
}

Edge Edge::with_endpoints(const NodeId& src, const NodeId& dst) const {
  if (is_var()) return Edge(kind_, source_, dst, label_);
  return Edge(kind_, src.str(), dst, label_);
}

std::string Edge::to_string() const {
  std::string out = "(" + source_ + "," + target_.str();
  if (kind_ == EdgeKind::kLabeled) {
    out += ",";
    out += heapabs::to_string(label_);
  }
  out += ")";
  return out;
}

bool Component::add_var(VarId v) { return vars_.insert(std::move(v)).second; }
bool Component::add_node(NodeId n) { return nodes_.insert(std::move(n)).second; }
bool Component::add_edge(Edge e) { return edges_.insert(std::move(e)).second; }
bool Component::erase_edge(const Edge& e) { return edges_.erase(e) > 0; }
bool Component::erase_node(const NodeId& n) { return nodes_.erase(n) > 0; }

std::vector<Edge> Component::var_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (e.is_var()) out.push_back(e);
  }
  return out;
}

std::vector<Edge> Component::structural_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (e.is_structural()) out.push_back(e);
  }
  return out;
}

Adjacency::Adjacency(const Component& c) {
  for (const NodeId& n : c.nodes()) {
    successors[n];
    predecessors[n];
  }
  for (const Edge& e : c.edges()) {
    if (!e.is_structural()) continue;
    successors[e.src()].insert(e.dst());
    predecessors[e.dst()].insert(e.src());
  }
}

namespace {

const std::set<NodeId>& empty_node_set() {
  static const std::set<NodeId> kEmpty;
  return kEmpty;
}

void require_members(const Component& c, const Region& r) {
  for (const NodeId& n : r) {
    if (!c.has_node(n)) {
      throw Error(ErrorCategory::kPrecondition, ErrorCode::kUnknownNode,
                  "region member '" + n.str() + "' is not a node");
    }
  }
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Depth computation shared by depth_map() and the validator. Unreached
// nodes keep kUnreached.
std::map<NodeId, std::size_t> compute_depths(const Component& c) {
  const Adjacency adj(c);
  std::map<NodeId, std::size_t> depth;
  for (const NodeId& n : c.nodes()) depth[n] = kUnreached;

  std::deque<NodeId> queue;
  auto bfs = [&]() {
    while (!queue.empty()) {
      NodeId n = std::move(queue.front());
      queue.pop_front();
      for (const NodeId& m : adj.succ(n)) {
        auto it = depth.find(m);
        if (it != depth.end() && it->second == kUnreached) {
          it->second = depth[n] + 1;
          queue.push_back(m);
        }
      }
    }
  };

  for (const NodeId& n : c.nodes()) {
    const auto& preds = adj.pred(n);
    bool has_foreign_pred =
        std::any_of(preds.begin(), preds.end(),
                    [&](const NodeId& p) { return p != n; });
    if (!has_foreign_pred) {
      depth[n] = 0;
      queue.push_back(n);
    }
  }
  bfs();

  // Variable-pointed nodes that the in-degree-0 roots cannot reach become
  // roots as well. Seeded together, so the second BFS is multi-source.
  for (const Edge& e : c.edges()) {
    if (!e.is_var()) continue;
    auto it = depth.find(e.dst());
    if (it != depth.end() && it->second == kUnreached) {
      it->second = 0;
      queue.push_back(e.dst());
    }
  }
  bfs();
  return depth;
}

// Returns a node lying on a directed cycle, if any.
std::optional<NodeId> find_cycle(const Component& c, bool count_self_edges) {
  const Adjacency adj(c);
  enum class Color { kWhite, kGrey, kBlack };
  std::map<NodeId, Color> color;
  for (const NodeId& n : c.nodes()) color[n] = Color::kWhite;

  for (const NodeId& start : c.nodes()) {
    if (color[start] != Color::kWhite) continue;
    // Iterative DFS: (node, iterator into its successor set).
    std::vector<std::pair<NodeId, std::set<NodeId>::const_iterator>> stack;
    color[start] = Color::kGrey;
    stack.emplace_back(start, adj.succ(start).begin());
    while (!stack.empty()) {
      auto& [node, it] = stack.back();
      const auto& succ = adj.succ(node);
      if (it == succ.end()) {
        color[node] = Color::kBlack;
        stack.pop_back();
        continue;
      }
      const NodeId next = *it;
      ++it;
      if (next == node) {
        if (count_self_edges) return node;
        continue;
      }
      auto found = color.find(next);
      if (found == color.end()) continue;
      if (found->second == Color::kGrey) return next;
      if (found->second == Color::kWhite) {
        found->second = Color::kGrey;
        stack.emplace_back(next, adj.succ(next).begin());
      }
    }
  }
  return std::nullopt;
}

bool edge_kind_allowed(Layout layout, const Edge& e) {
  switch (e.kind()) {
    case EdgeKind::kVar: return true;
    case EdgeKind::kLabeled: return layout == Layout::T;
    case EdgeKind::kNode: return layout != Layout::T;
  }
  return false;
}

}  // namespace

const std::set<NodeId>& Adjacency::succ(const NodeId& n) const {
  auto it = successors.find(n);
  return it == successors.end() ? empty_node_set() : it->second;
}

const std::set<NodeId>& Adjacency::pred(const NodeId& n) const {
  auto it = predecessors.find(n);
  return it == predecessors.end() ? empty_node_set() : it->second;
}

std::set<Edge> region_edges(const Component& c, const Region& r) {
  require_members(c, r);
  std::set<Edge> out;
  for (const Edge& e : c.edges()) {
    if (e.is_structural() && r.contains(e.src()) && r.contains(e.dst())) {
      out.insert(e);
    }
  }
  return out;
}

std::set<Edge> edges_in(const Component& c, const Region& r) {
  require_members(c, r);
  std::set<Edge> out;
  for (const Edge& e : c.edges()) {
    if (e.is_structural() && !r.contains(e.src()) && r.contains(e.dst())) {
      out.insert(e);
    }
  }
  return out;
}

std::set<Edge> edges_out(const Component& c, const Region& r) {
  require_members(c, r);
  std::set<Edge> out;
  for (const Edge& e : c.edges()) {
    if (e.is_structural() && r.contains(e.src()) && !r.contains(e.dst())) {
      out.insert(e);
    }
  }
  return out;
}

Heap lift_concrete(const Heap& h) { return h; }

std::map<NodeId, std::size_t> depth_map(const Component& c) {
  if (c.layout() != Layout::SLL && c.layout() != Layout::T) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "depth is defined for SLL and T components only, got " +
                    std::string(to_string(c.layout())));
  }
  auto depth = compute_depths(c);
  for (const auto& [node, d] : depth) {
    if (d == kUnreached) {
      throw Error(ErrorCategory::kModel, ErrorCode::kUnreachableNode,
                  "node '" + node.str() + "' is not reachable from a root");
    }
  }
  return depth;
}

std::size_t height(const Component& c) {
  if (c.layout() != Layout::T) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "height is defined for T components only");
  }
  if (c.nodes().empty()) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kEmptyComponent,
                "height of a component without nodes");
  }
  std::size_t h = 0;
  for (const auto& [node, d] : depth_map(c)) h = std::max(h, d);
  return h;
}

std::vector<Violation> validate_component(const Component& c) {
  std::vector<Violation> out;

  // v1: endpoints declared.
  for (const Edge& e : c.edges()) {
    bool ok = c.has_node(e.dst()) &&
              (e.is_var() ? c.has_var(e.var()) : c.has_node(e.src()));
    if (!ok) {
      out.push_back({ErrorCode::kUnknownEndpoint,
                     "edge " + e.to_string() + " has an undeclared endpoint"});
    }
  }

  // v2: edge kind matches layout.
  for (const Edge& e : c.edges()) {
    if (!edge_kind_allowed(c.layout(), e)) {
      out.push_back({ErrorCode::kEdgeKindMismatch,
                     "edge " + e.to_string() + " is not allowed in a " +
                         std::string(to_string(c.layout())) + " component"});
    }
  }

  // v3: reachability for layouts with a notion of depth.
  std::map<NodeId, std::size_t> depth;
  bool all_reached = true;
  if (c.layout() == Layout::SLL || c.layout() == Layout::T) {
    depth = compute_depths(c);
    for (const auto& [node, d] : depth) {
      if (d == kUnreached) {
        all_reached = false;
        out.push_back({ErrorCode::kUnreachableNode,
                       "node '" + node.str() + "' is not reachable from a root"});
      }
    }
  }

  // v4: a DAG has no cycle. Self edges mark summarized regions and are
  // not counted.
  if (c.layout() == Layout::DAG) {
    if (auto n = find_cycle(c, /*count_self_edges=*/false)) {
      out.push_back({ErrorCode::kCycleInDag,
                     "directed cycle through node '" + n->str() + "'"});
    }
  }

  // v5: a cycle component has at least one cycle (self edges count).
  if (c.layout() == Layout::C) {
    if (!find_cycle(c, /*count_self_edges=*/true)) {
      out.push_back({ErrorCode::kNoCycle, "cycle component has no cycle"});
    }
  }

  // v6: tree skeleton, every non-root node has a shallower labeled parent.
  if (c.layout() == Layout::T && all_reached) {
    for (const auto& [node, d] : depth) {
      if (d == 0) continue;
      bool has_parent = std::any_of(
          c.edges().begin(), c.edges().end(), [&](const Edge& e) {
            if (e.kind() != EdgeKind::kLabeled || e.dst() != node) return false;
            auto it = depth.find(e.src());
            return it != depth.end() && it->second < d;
          });
      if (!has_parent) {
        out.push_back({ErrorCode::kMissingTreeParent,
                       "node '" + node.str() + "' has no labeled parent"});
      }
    }
  }

  for (const VarId& v : c.vars()) {
    if (!is_valid_token(v.str())) {
      out.push_back({ErrorCode::kInvalidId, "bad variable id '" + v.str() + "'"});
    }
  }
  for (const NodeId& n : c.nodes()) {
    if (!is_valid_token(n.str())) {
      out.push_back({ErrorCode::kInvalidId, "bad node id '" + n.str() + "'"});
    }
  }
  return out;
}

std::vector<HeapViolation> validate_heap(const Heap& h) {
  std::vector<HeapViolation> out;
  std::map<NodeId, std::size_t> node_owner;
  std::map<VarId, std::size_t> var_owner;
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const Component& c = h.components[i];
    for (Violation& v : validate_component(c)) out.push_back({i, std::move(v)});
    for (const NodeId& n : c.nodes()) {
      auto [it, inserted] = node_owner.emplace(n, i);
      if (!inserted) {
        out.push_back({i, {ErrorCode::kComponentIdClash,
                           "node '" + n.str() + "' also declared in component " +
                               std::to_string(it->second)}});
      }
    }
    for (const VarId& v : c.vars()) {
      auto [it, inserted] = var_owner.emplace(v, i);
      if (!inserted) {
        out.push_back({i, {ErrorCode::kComponentIdClash,
                           "variable '" + v.str() +
                               "' also declared in component " +
                               std::to_string(it->second)}});
      }
    }
  }
  return out;
}

}  // namespace heapabs
