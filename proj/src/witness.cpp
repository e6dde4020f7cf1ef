// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/witness.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace heapabs {

Edge image_of(const Edge& e, const NodeMap& node_map) {
  auto map = [&](const NodeId& n) -> const NodeId& {
    auto it = node_map.find(n);
    return it == node_map.end() ? n : it->second;
  };
  if (e.is_var()) return e.with_endpoints(e.dst(), map(e.dst()));
  return e.with_endpoints(map(e.src()), map(e.dst()));
}

Witness induced_witness(const Component& source, const NodeMap& node_map) {
  Witness w;
  w.node_map = node_map;
  for (const Edge& e : source.edges()) w.edge_map.emplace(e, image_of(e, node_map));
  return w;
}

Witness identity_witness(const Component& c) {
  NodeMap identity;
  for (const NodeId& n : c.nodes()) identity.emplace(n, n);
  return induced_witness(c, identity);
}

namespace {

bool endpoints_mapped(const Edge& e, const NodeMap& node_map) {
  if (!node_map.contains(e.dst())) return false;
  return e.is_var() || node_map.contains(e.src());
}

}  // namespace

std::vector<Violation> check_valid_abstraction(const Component& source,
                                               const Component& target,
                                               const Witness& w) {
  std::vector<Violation> out;

  // w1, w2
  if (source.layout() != target.layout()) {
    out.push_back({ErrorCode::kLayoutMismatch,
                   std::string(to_string(source.layout())) + " vs " +
                       std::string(to_string(target.layout()))});
  }
  if (source.vars() != target.vars()) {
    out.push_back({ErrorCode::kVariableSetMismatch,
                   "source and target declare different variables"});
  }

  // w3: node map total and onto.
  for (const NodeId& n : source.nodes()) {
    if (!w.node_map.contains(n)) {
      out.push_back({ErrorCode::kNodeMapNotTotal, "no image for node '" + n.str() + "'"});
    }
  }
  std::set<NodeId> node_images;
  for (const auto& [from, to] : w.node_map) {
    if (!source.has_node(from)) {
      out.push_back({ErrorCode::kNodeMapUnknownSource,
                     "'" + from.str() + "' is not a source node"});
    }
    if (!target.has_node(to)) {
      out.push_back({ErrorCode::kNodeMapBadImage,
                     "image '" + to.str() + "' of '" + from.str() +
                         "' is not a target node"});
    }
    node_images.insert(to);
  }
  for (const NodeId& n : target.nodes()) {
    if (!node_images.contains(n)) {
      out.push_back({ErrorCode::kNodeMapNotOnto,
                     "target node '" + n.str() + "' has no preimage"});
    }
  }

  // w4: edge map total and onto.
  for (const Edge& e : source.edges()) {
    if (!w.edge_map.contains(e)) {
      out.push_back({ErrorCode::kEdgeMapNotTotal, "no image for edge " + e.to_string()});
    }
  }
  std::set<Edge> edge_images;
  for (const auto& [from, to] : w.edge_map) {
    if (!source.has_edge(from)) {
      out.push_back({ErrorCode::kEdgeMapUnknownSource,
                     from.to_string() + " is not a source edge"});
    }
    edge_images.insert(to);
  }
  for (const Edge& e : target.edges()) {
    if (!edge_images.contains(e)) {
      out.push_back({ErrorCode::kEdgeMapNotOnto,
                     "target edge " + e.to_string() + " has no preimage"});
    }
  }

  // w5, w6: per-edge compatibility and existence of the image.
  for (const auto& [from, to] : w.edge_map) {
    if (!endpoints_mapped(from, w.node_map) || to != image_of(from, w.node_map)) {
      out.push_back({ErrorCode::kEdgeMapIncompatible,
                     from.to_string() + " -> " + to.to_string() +
                         " does not follow the node map"});
    }
    if (!target.has_edge(to)) {
      out.push_back({ErrorCode::kImageEdgeMissing,
                     "image " + to.to_string() + " of " + from.to_string() +
                         " is not a target edge"});
    }
  }
  return out;
}

Witness compose(const Witness& first, const Witness& second) {
  Witness out;
  for (const auto& [from, mid] : first.node_map) {
    auto it = second.node_map.find(mid);
    if (it == second.node_map.end()) {
      throw Error(ErrorCategory::kPrecondition, ErrorCode::kDomainMismatch,
                  "node '" + mid.str() + "' is outside the second witness");
    }
    out.node_map.emplace(from, it->second);
  }
  for (const auto& [from, mid] : first.edge_map) {
    auto it = second.edge_map.find(mid);
    if (it == second.edge_map.end()) {
      throw Error(ErrorCategory::kPrecondition, ErrorCode::kDomainMismatch,
                  "edge " + mid.to_string() + " is outside the second witness");
    }
    out.edge_map.emplace(from, it->second);
  }
  return out;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const Component& source, const Component& target)
      : source_(source), target_(target),
        src_nodes_(source.nodes().begin(), source.nodes().end()),
        tgt_nodes_(target.nodes().begin(), target.nodes().end()),
        assignment_(src_nodes_.size(), 0),
        cover_(tgt_nodes_.size(), 0),
        checks_(src_nodes_.size()) {
    auto index_of = [&](const NodeId& n) {
      return static_cast<std::size_t>(
          std::lower_bound(src_nodes_.begin(), src_nodes_.end(), n) -
          src_nodes_.begin());
    };
    // Each edge is checked once both of its endpoints have an image, i.e.
    // when the later of the two is assigned.
    for (const Edge& e : source.edges()) {
      std::size_t at = index_of(e.dst());
      if (!e.is_var()) at = std::max(at, index_of(e.src()));
      checks_[at].push_back(e);
    }
  }

  std::optional<Witness> run() {
    if (tgt_nodes_.size() > src_nodes_.size()) return std::nullopt;
    if (src_nodes_.empty()) {
      if (!target_.edges().empty() || !source_.edges().empty()) return std::nullopt;
      return Witness{};
    }
    if (tgt_nodes_.empty()) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    return induced_witness(source_, current_map());
  }

 private:
  NodeMap current_map() const {
    NodeMap m;
    for (std::size_t i = 0; i < src_nodes_.size(); ++i) {
      m.emplace(src_nodes_[i], tgt_nodes_[assignment_[i]]);
    }
    return m;
  }

  bool assign(std::size_t i) {
    if (i == src_nodes_.size()) return leaf_ok();
    const std::size_t left = src_nodes_.size() - i;
    for (std::size_t t = 0; t < tgt_nodes_.size(); ++t) {
      const bool newly_covered = cover_[t] == 0;
      // Onto pruning: the remaining sources must cover what is uncovered.
      if (uncovered_ - (newly_covered ? 1 : 0) > left - 1) continue;
      assignment_[i] = t;
      if (!edges_ok(i)) continue;
      ++cover_[t];
      if (newly_covered) --uncovered_;
      if (assign(i + 1)) return true;
      --cover_[t];
      if (newly_covered) ++uncovered_;
    }
    return false;
  }

  const NodeId& image(const NodeId& n) const {
    auto it = std::lower_bound(src_nodes_.begin(), src_nodes_.end(), n);
    return tgt_nodes_[assignment_[static_cast<std::size_t>(it - src_nodes_.begin())]];
  }

  bool edges_ok(std::size_t i) const {
    for (const Edge& e : checks_[i]) {
      const Edge img = e.is_var() ? e.with_endpoints(e.dst(), image(e.dst()))
                                  : e.with_endpoints(image(e.src()), image(e.dst()));
      if (!target_.has_edge(img)) return false;
    }
    return true;
  }

  bool leaf_ok() const {
    std::set<Edge> images;
    for (const auto& bucket : checks_) {
      for (const Edge& e : bucket) {
        images.insert(e.is_var() ? e.with_endpoints(e.dst(), image(e.dst()))
                                 : e.with_endpoints(image(e.src()), image(e.dst())));
      }
    }
    return images.size() == target_.edges().size();
  }

  const Component& source_;
  const Component& target_;
  std::vector<NodeId> src_nodes_;
  std::vector<NodeId> tgt_nodes_;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> cover_;
  std::size_t uncovered_ = tgt_nodes_.size();
  std::vector<std::vector<Edge>> checks_;
};

}  // namespace

std::optional<Witness> find_witness_bruteforce(const Component& source,
                                               const Component& target,
                                               std::size_t node_budget) {
  if (source.nodes().size() > node_budget) {
    throw Error(ErrorCategory::kPrecondition, ErrorCode::kBudgetExceeded,
                "source has " + std::to_string(source.nodes().size()) +
                    " nodes, budget is " + std::to_string(node_budget));
  }
  if (source.layout() != target.layout() || source.vars() != target.vars()) {
    return std::nullopt;
  }
  return WitnessSearch(source, target).run();
}

namespace {

// Bit set of the structural edges from one node to another.
constexpr std::uint8_t kPlainBit = 1;
constexpr std::uint8_t kLeftBit = 2;
constexpr std::uint8_t kRightBit = 4;

std::uint8_t edge_bit(const Edge& e) {
  if (e.kind() == EdgeKind::kNode) return kPlainBit;
  return e.label() == Label::kLeft ? kLeftBit : kRightBit;
}

struct IndexedGraph {
  std::vector<NodeId> nodes;
  std::vector<std::vector<std::uint8_t>> adj;  // adj[from][to]
  std::vector<std::string> signature;

  explicit IndexedGraph(const Component& c)
      : nodes(c.nodes().begin(), c.nodes().end()),
        adj(nodes.size(), std::vector<std::uint8_t>(nodes.size(), 0)) {
    auto index_of = [&](const NodeId& n) {
      return static_cast<std::size_t>(
          std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
    };
    std::vector<std::vector<std::string>> vars(nodes.size());
    for (const Edge& e : c.edges()) {
      if (e.is_var()) {
        vars[index_of(e.dst())].push_back(e.var().str());
      } else {
        adj[index_of(e.src())][index_of(e.dst())] |= edge_bit(e);
      }
    }
    // Degree counts per edge bit, self loops and pointing variables. Equal
    // signatures are necessary for two nodes to correspond.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::array<int, 8> out_deg{}, in_deg{};
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (i == j) continue;
        ++out_deg[adj[i][j]];
        ++in_deg[adj[j][i]];
      }
      std::string sig = std::to_string(adj[i][i]) + "|";
      for (int k = 1; k < 8; ++k) {
        sig += std::to_string(out_deg[k]) + "," + std::to_string(in_deg[k]) + ";";
      }
      std::sort(vars[i].begin(), vars[i].end());
      for (const auto& v : vars[i]) sig += "|" + v;
      signature.push_back(std::move(sig));
    }
  }
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IndexedGraph& a, const IndexedGraph& b)
      : a_(a), b_(b), image_(a.nodes.size(), kNone), used_(b.nodes.size(), false) {
    // Connectivity-first order: each next node has the most links to nodes
    // already placed, so consistency checks prune early.
    const std::size_t n = a.nodes.size();
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kNone;
      for (std::size_t i = 0; i < n; ++i) {
        if (!placed[i] && (best == kNone || links[i] > links[best])) best = i;
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t j = 0; j < n; ++j) {
        if (a.adj[best][j] != 0 || a.adj[j][best] != 0) ++links[j];
      }
    }
  }

  bool run() { return place(0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool place(std::size_t step) {
    if (step == order_.size()) return true;
    const std::size_t x = order_[step];
    for (std::size_t y = 0; y < b_.nodes.size(); ++y) {
      if (used_[y] || a_.signature[x] != b_.signature[y]) continue;
      if (!consistent(x, y, step)) continue;
      image_[x] = y;
      used_[y] = true;
      if (place(step + 1)) return true;
      used_[y] = false;
      image_[x] = kNone;
    }
    return false;
  }

  bool consistent(std::size_t x, std::size_t y, std::size_t step) const {
    for (std::size_t k = 0; k < step; ++k) {
      const std::size_t u = order_[k];
      const std::size_t v = image_[u];
      if (a_.adj[x][u] != b_.adj[y][v] || a_.adj[u][x] != b_.adj[v][y]) {
        return false;
      }
    }
    return true;
  }

  const IndexedGraph& a_;
  const IndexedGraph& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool isomorphic(const Component& a, const Component& b) {
  if (a.layout() != b.layout() || a.vars() != b.vars()) return false;
  if (a.nodes().size() != b.nodes().size() || a.edges().size() != b.edges().size()) {
    return false;
  }
  const IndexedGraph ga(a);
  const IndexedGraph gb(b);
  auto sa = ga.signature;
  auto sb = gb.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return IsomorphismSearch(ga, gb).run();
}

}  // namespace heapabs
