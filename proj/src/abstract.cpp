// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/abstract.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "heapabs/classify.hpp"

namespace heapabs {

namespace {

void require_node(const Component& c, const NodeId& n) {
  if (!c.has_node(n)) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kUnknownNode,
                "'" + n.str() + "' is not a node of the component");
  }
}

void require_distinct(const NodeId& a, const NodeId& b) {
  if (a == b) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kSameNode,
                "'" + a.str() + "' given twice");
  }
}

void require_valid(const Component& c, Layout layout) {
  if (c.layout() != layout) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "expected a " + std::string(to_string(layout)) +
                    " component, got " + std::string(to_string(c.layout())));
  }
  auto violations = validate_component(c);
  if (!violations.empty()) {
    throw Error(ErrorCategory::kModel, violations.front().code,
                violations.front().detail);
  }
}

// Survivor bookkeeping with path compression, so a node absorbed by a
// node that is later absorbed itself maps to the final survivor.
class Absorption {
 public:
  void absorb(const NodeId& survivor, const NodeId& removed) {
    parent_[removed] = survivor;
  }

  NodeId find(const NodeId& n) {
    auto it = parent_.find(n);
    if (it == parent_.end()) return n;
    NodeId root = find(it->second);
    it->second = root;
    return root;
  }

  NodeMap node_map(const Component& input) {
    NodeMap out;
    for (const NodeId& n : input.nodes()) out.emplace(n, find(n));
    return out;
  }

 private:
  std::map<NodeId, NodeId> parent_;
};

AbstractionResult finish(const Component& input, Component output,
                         Absorption& absorption, std::vector<MergeEvent> log,
                         std::size_t candidates, std::size_t bound) {
  if (log.size() > bound) {
    throw Error(ErrorCategory::kInternal, ErrorCode::kInvariantBreach,
                std::to_string(log.size()) + " merges exceed the bound of " +
                    std::to_string(bound));
  }
  AbstractionResult result;
  result.witness = induced_witness(input, absorption.node_map(input));
  result.output = std::move(output);
  result.merge_log = std::move(log);
  result.candidates = candidates;
  result.merge_bound = bound;
  return result;
}

// Smallest structural edge (a,b), a != b, with both endpoints in `pool`.
std::optional<std::pair<NodeId, NodeId>> first_internal_edge(
    const Component& c, const std::set<NodeId>& pool) {
  for (const Edge& e : c.edges()) {
    if (!e.is_structural() || e.is_self()) continue;
    NodeId src = e.src();
    if (pool.contains(src) && pool.contains(e.dst())) {
      return std::make_pair(std::move(src), e.dst());
    }
  }
  return std::nullopt;
}

// A tree child may be folded into its parent only when nothing but the
// parent points at it and it has no edges left except self edges.
bool folds_into(const Component& c, const NodeId& parent, const NodeId& child) {
  return std::all_of(c.edges().begin(), c.edges().end(), [&](const Edge& e) {
    if (!e.is_structural()) return e.dst() != child;
    const NodeId src = e.src();
    if (src != child && e.dst() != child) return true;
    if (src == child) return e.dst() == child;
    return src == parent;
  });
}

}  // namespace

Component remove_node(const Component& c, const NodeId& survivor,
                      const NodeId& removed) {
  require_distinct(survivor, removed);
  require_node(c, survivor);
  require_node(c, removed);
  if (c.layout() == Layout::T) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "remove_node does not apply to T components");
  }
  Component out(c.layout());
  for (const VarId& v : c.vars()) out.add_var(v);
  for (const NodeId& n : c.nodes()) {
    if (n != removed) out.add_node(n);
  }
  auto redirect = [&](const NodeId& n) { return n == removed ? survivor : n; };
  for (const Edge& e : c.edges()) {
    if (e.is_var()) {
      out.add_edge(e.with_endpoints(e.dst(), redirect(e.dst())));
      continue;
    }
    const NodeId src = e.src();
    if (src == survivor && e.dst() == removed) continue;
    out.add_edge(e.with_endpoints(redirect(src), redirect(e.dst())));
  }
  return out;
}

Component remove_nodes_tree(const Component& c, const NodeId& first,
                            const NodeId& second) {
  require_distinct(first, second);
  require_node(c, first);
  require_node(c, second);
  if (c.layout() != Layout::T) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch,
                "remove_nodes_tree applies to T components only");
  }
  Component out(c.layout());
  for (const VarId& v : c.vars()) out.add_var(v);
  for (const NodeId& n : c.nodes()) {
    if (n != first && n != second) out.add_node(n);
  }
  auto gone = [&](const NodeId& n) { return n == first || n == second; };
  for (const Edge& e : c.edges()) {
    if (gone(e.dst()) || (e.is_structural() && gone(e.src()))) continue;
    out.add_edge(e);
  }
  return out;
}

AbstractionResult abstract_sll(const Component& c) {
  require_valid(c, Layout::SLL);
  std::set<NodeId> pool = ordinary_nodes(c);
  const std::size_t candidates = pool.size();

  Component current = c;
  Absorption absorption;
  std::vector<MergeEvent> log;
  while (auto pair = first_internal_edge(current, pool)) {
    const auto& [a, b] = *pair;
    current = remove_node(current, a, b);
    current.add_edge(Edge::node(a, a));
    pool.erase(b);
    absorption.absorb(a, b);
    log.push_back({a, {b}});
  }
  const std::size_t bound = candidates == 0 ? 0 : candidates - 1;
  return finish(c, std::move(current), absorption, std::move(log), candidates, bound);
}

AbstractionResult abstract_tree(const Component& c) {
  require_valid(c, Layout::T);
  std::set<NodeId> pool = ordinary_nodes(c);
  const std::size_t candidates = pool.size();
  const auto depth = depth_map(c);
  const std::size_t h = c.nodes().empty() ? 0 : height(c);

  Component current = c;
  Absorption absorption;
  std::vector<MergeEvent> log;

  // Triple (a, b, c2) at parent depth `level`, smallest a first.
  auto next_triple = [&](std::size_t level)
      -> std::optional<std::tuple<NodeId, NodeId, NodeId>> {
    for (const NodeId& a : pool) {
      if (depth.at(a) != level) continue;
      std::vector<NodeId> lefts, rights;
      for (const Edge& e : current.edges()) {
        if (e.kind() != EdgeKind::kLabeled || e.src() != a) continue;
        const NodeId& child = e.dst();
        if (child == a || !pool.contains(child)) continue;
        (e.label() == Label::kLeft ? lefts : rights).push_back(child);
      }
      for (const NodeId& b : lefts) {
        if (!folds_into(current, a, b)) continue;
        for (const NodeId& c2 : rights) {
          if (c2 != b && folds_into(current, a, c2)) return std::make_tuple(a, b, c2);
        }
      }
    }
    return std::nullopt;
  };

  for (std::size_t level = h == 0 ? 0 : h - 1; level > 0; --level) {
    while (auto triple = next_triple(level)) {
      const auto& [a, b, c2] = *triple;
      current = remove_nodes_tree(current, b, c2);
      current.add_edge(Edge::labeled(a, a, Label::kLeft));
      current.add_edge(Edge::labeled(a, a, Label::kRight));
      pool.erase(b);
      pool.erase(c2);
      absorption.absorb(a, b);
      absorption.absorb(a, c2);
      log.push_back({a, {b, c2}});
    }
  }
  return finish(c, std::move(current), absorption, std::move(log), candidates,
                candidates / 2);
}

AbstractionResult abstract_cycle(const Component& c) {
  require_valid(c, Layout::C);
  std::set<NodeId> pool = ordinary_nodes(c);
  const std::size_t candidates = pool.size();

  Component current = c;
  Absorption absorption;
  std::vector<MergeEvent> log;
  while (auto pair = first_internal_edge(current, pool)) {
    const auto& [a, b] = *pair;
    // b is ordinary, so (a,b) is its only incoming edge. Merges preserve
    // in-degrees, which keeps this true for the whole run.
    for (const Edge& e : edges_in(current, Region{b})) {
      if (e.src() != a) {
        throw Error(ErrorCategory::kInternal, ErrorCode::kInvariantBreach,
                    "ordinary cycle node '" + b.str() + "' has a second predecessor");
      }
    }
    // Outgoing edges of b move to a, b disappears and (a,b) becomes (a,a).
    current = remove_node(current, a, b);
    current.add_edge(Edge::node(a, a));
    pool.erase(b);
    absorption.absorb(a, b);
    log.push_back({a, {b}});
  }
  const std::size_t bound = candidates == 0 ? 0 : candidates - 1;
  return finish(c, std::move(current), absorption, std::move(log), candidates, bound);
}

AbstractionResult abstract_dag(const Component& c) {
  require_valid(c, Layout::DAG);
  const SimilarityPartition partition = ref_similar_dag(c);
  std::size_t candidates = 0;
  for (const Region& g : partition.groups) candidates += g.size();

  Component current = c;
  Absorption absorption;
  std::vector<MergeEvent> log;
  for (const Region& group : partition.groups) {
    if (group.size() < 2) continue;
    const NodeId& keep = *group.begin();
    Component next(current.layout());
    for (const VarId& v : current.vars()) next.add_var(v);
    for (const NodeId& n : current.nodes()) {
      if (n == keep || !group.contains(n)) next.add_node(n);
    }
    for (const Edge& e : current.edges()) {
      if (next.has_node(e.dst()) && (e.is_var() || next.has_node(e.src()))) {
        next.add_edge(e);
      }
    }
    next.add_edge(Edge::node(keep, keep));
    for (auto it = std::next(group.begin()); it != group.end(); ++it) {
      absorption.absorb(keep, *it);
      log.push_back({keep, {*it}});
    }
    current = std::move(next);
  }
  return finish(c, std::move(current), absorption, std::move(log), candidates,
                candidates - partition.groups.size());
}

AbstractionResult abstract_component(const Component& c) {
  switch (c.layout()) {
    case Layout::SLL: return abstract_sll(c);
    case Layout::T: return abstract_tree(c);
    case Layout::C: return abstract_cycle(c);
    case Layout::DAG: return abstract_dag(c);
  }
  throw Error(ErrorCategory::kInternal, ErrorCode::kInvariantBreach, "unknown layout");
}

std::vector<Violation> verify_structure(const Component& input,
                                        const AbstractionResult& result) {
  std::vector<Violation> out;
  if (result.output.layout() != input.layout()) {
    out.push_back({ErrorCode::kLayoutMismatch, "output layout differs from input"});
  }
  for (Violation& v : validate_component(result.output)) {
    v.detail = "output: " + v.detail;
    out.push_back(std::move(v));
  }
  for (const auto& [node, cls] : classify(input)) {
    if (cls.ordinary()) continue;
    auto it = result.witness.node_map.find(node);
    if (!result.output.has_node(node) || it == result.witness.node_map.end() ||
        it->second != node) {
      out.push_back({ErrorCode::kInvariantBreach,
                     "special node '" + node.str() + "' did not survive unchanged"});
    }
  }
  for (const Edge& e : input.var_edges()) {
    if (!result.output.has_edge(e)) {
      out.push_back({ErrorCode::kInvariantBreach,
                     "variable edge " + e.to_string() + " lost"});
    }
  }
  if (result.merge_log.size() > result.merge_bound) {
    out.push_back({ErrorCode::kInvariantBreach, "merge bound exceeded"});
  }
  return out;
}

std::vector<Violation> verify_result(const Component& input,
                                     const AbstractionResult& result) {
  std::vector<Violation> out = verify_structure(input, result);
  for (Violation& v : check_valid_abstraction(input, result.output, result.witness)) {
    v.detail = "witness: " + v.detail;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Witness> HeapAbstraction::witnesses() const {
  std::vector<Witness> out;
  out.reserve(results.size());
  for (const AbstractionResult& r : results) out.push_back(r.witness);
  return out;
}

HeapAbstraction heap_abstract(const Heap& h) {
  for (const HeapViolation& hv : validate_heap(h)) {
    throw Error(ErrorCategory::kModel, hv.violation.code, hv.violation.detail,
                "component " + std::to_string(hv.component));
  }
  HeapAbstraction out;
  for (const Component& c : h.components) {
    out.results.push_back(abstract_component(c));
    out.heap.components.push_back(out.results.back().output);
  }
  return out;
}

}  // namespace heapabs
