// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "heapabs/model.hpp"

namespace heapabs {
namespace {

using support::fixture_component;
using support::make_component;

NodeId N(const char* s) { return NodeId(s); }

std::vector<ErrorCode> codes(const std::vector<Violation>& vs) {
  std::vector<ErrorCode> out;
  for (const Violation& v : vs) out.push_back(v.code);
  return out;
}

TEST(Ids, TokenRules) {
  EXPECT_TRUE(is_valid_token("h0"));
  EXPECT_TRUE(is_valid_token("var:x"));
  EXPECT_FALSE(is_valid_token(""));
  EXPECT_FALSE(is_valid_token("a b"));
  EXPECT_FALSE(is_valid_token("a,b"));
  EXPECT_FALSE(is_valid_token("a\tb"));
}

TEST(Layouts, ParseAndPrint) {
  for (Layout l : {Layout::SLL, Layout::T, Layout::C, Layout::DAG}) {
    EXPECT_EQ(parse_layout(to_string(l)), l);
  }
  EXPECT_FALSE(parse_layout("sll").has_value());
  EXPECT_FALSE(parse_layout("TREE").has_value());
}

TEST(Components, EdgesAreSets) {
  Component c(Layout::SLL);
  c.add_node(N("a"));
  c.add_node(N("b"));
  EXPECT_TRUE(c.add_edge(Edge::node(N("a"), N("b"))));
  EXPECT_FALSE(c.add_edge(Edge::node(N("a"), N("b"))));
  EXPECT_EQ(c.edges().size(), 1u);
}

TEST(Regions, InternalEdgesOfListPair) {
  Component c = fixture_component("fig1_sll.json");
  EXPECT_EQ(region_edges(c, {N("h1"), N("h2")}), (std::set<Edge>{Edge::node(N("h1"), N("h2"))}));
  EXPECT_TRUE(region_edges(c, {}).empty());
}

TEST(Regions, FanOutTargetsShareNoEdges) {
  Component c = fixture_component("fig4_dag.json");
  EXPECT_TRUE(region_edges(c, {N("h1"), N("h2")}).empty());
}

TEST(Regions, IncomingEdges) {
  Component cyc = fixture_component("fig3_cycle.json");
  EXPECT_EQ(edges_in(cyc, {N("h1")}),
            (std::set<Edge>{Edge::node(N("h0"), N("h1")), Edge::node(N("h7"), N("h1"))}));
  EXPECT_TRUE(edges_in(cyc, cyc.nodes()).empty());
  Component sll = fixture_component("fig1_sll.json");
  EXPECT_EQ(edges_in(sll, {N("h6")}),
            (std::set<Edge>{Edge::node(N("h5"), N("h6")), Edge::node(N("h7"), N("h6"))}));
}

TEST(Regions, OutgoingEdges) {
  Component cyc = fixture_component("fig3_cycle.json");
  EXPECT_EQ(edges_out(cyc, {N("h7")}),
            (std::set<Edge>{Edge::node(N("h7"), N("h0")), Edge::node(N("h7"), N("h1"))}));
  EXPECT_TRUE(edges_out(cyc, cyc.nodes()).empty());
  Component tree = fixture_component("fig2_tree.json");
  EXPECT_EQ(edges_out(tree, {N("h5")}),
            (std::set<Edge>{Edge::labeled(N("h5"), N("h6"), Label::kRight),
                            Edge::labeled(N("h5"), N("h11"), Label::kLeft),
                            Edge::labeled(N("h5"), N("h12"), Label::kRight)}));
}

TEST(Regions, AllNodesGiveAllStructuralEdges) {
  Component c = fixture_component("fig2_tree.json");
  auto all = c.structural_edges();
  EXPECT_EQ(region_edges(c, c.nodes()), std::set<Edge>(all.begin(), all.end()));
}

TEST(Regions, UndeclaredMemberIsRejected) {
  Component c = fixture_component("fig1_sll.json");
  EXPECT_HEAPABS_ERROR(region_edges(c, {N("zz")}), ErrorCategory::kPrecondition,
                       ErrorCode::kUnknownNode);
  EXPECT_HEAPABS_ERROR(edges_in(c, {N("zz")}), ErrorCategory::kPrecondition,
                       ErrorCode::kUnknownNode);
  EXPECT_HEAPABS_ERROR(edges_out(c, {N("zz")}), ErrorCategory::kPrecondition,
                       ErrorCode::kUnknownNode);
}

TEST(Lift, IsIdentity) {
  Heap h = support::fixture_heap("mixed.json");
  EXPECT_EQ(lift_concrete(h), h);
  EXPECT_EQ(lift_concrete(Heap{}), Heap{});
}

TEST(Depth, ListFixture) {
  auto d = depth_map(fixture_component("fig1_sll.json"));
  for (int i = 0; i < 8; ++i) EXPECT_EQ(d.at(NodeId("h" + std::to_string(i))), i);
}

TEST(Depth, SingleNode) {
  auto d = depth_map(make_component(Layout::SLL, {"v=>a"}));
  EXPECT_EQ(d.at(N("a")), 0u);
}

TEST(Depth, TreeFixture) {
  auto d = depth_map(fixture_component("fig2_tree.json"));
  EXPECT_EQ(d.at(N("h0")), 0u);
  for (int i : {1, 2}) EXPECT_EQ(d.at(NodeId("h" + std::to_string(i))), 1u);
  for (int i = 3; i <= 6; ++i) EXPECT_EQ(d.at(NodeId("h" + std::to_string(i))), 2u);
  for (int i = 7; i <= 14; ++i) EXPECT_EQ(d.at(NodeId("h" + std::to_string(i))), 3u);
}

TEST(Depth, ClosedChainStartsAtPointedNode) {
  auto d = depth_map(make_component(Layout::SLL, {"v=>a", "a->b", "b->c", "c->a"}));
  EXPECT_EQ(d.at(N("a")), 0u);
  EXPECT_EQ(d.at(N("b")), 1u);
  EXPECT_EQ(d.at(N("c")), 2u);
}

TEST(Depth, Errors) {
  EXPECT_HEAPABS_ERROR(depth_map(fixture_component("fig3_cycle.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
  auto unreachable = make_component(Layout::SLL, {"a->b", "b->a"});
  EXPECT_HEAPABS_ERROR(depth_map(unreachable), ErrorCategory::kModel,
                       ErrorCode::kUnreachableNode);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(fixture_component("fig2_tree.json")), 3u);
  EXPECT_EQ(height(make_component(Layout::T, {}, {"r"})), 0u);
  EXPECT_EQ(height(make_component(Layout::T, {"r-l->x"})), 1u);
  EXPECT_HEAPABS_ERROR(height(Component(Layout::T)), ErrorCategory::kPrecondition,
                       ErrorCode::kEmptyComponent);
  EXPECT_HEAPABS_ERROR(height(fixture_component("fig1_sll.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
}

TEST(Validate, FixturesAreValid) {
  for (std::string_view name : support::kFigureFixtures) {
    for (const Component& c : support::fixture_heap(name).components) {
      EXPECT_TRUE(validate_component(c).empty()) << name;
    }
  }
}

TEST(Validate, LabeledEdgeInList) {
  Component c = make_component(Layout::SLL, {"v=>a", "a->b"});
  c.add_edge(Edge::labeled(N("a"), N("b"), Label::kLeft));
  EXPECT_EQ(codes(validate_component(c)), std::vector<ErrorCode>{ErrorCode::kEdgeKindMismatch});
}

TEST(Validate, PlainEdgeInTree) {
  Component c = make_component(Layout::T, {"v=>a", "a-l->b"});
  c.add_edge(Edge::node(N("a"), N("b")));
  EXPECT_EQ(codes(validate_component(c)), std::vector<ErrorCode>{ErrorCode::kEdgeKindMismatch});
}

TEST(Validate, DagWithBackEdge) {
  Component c = fixture_component("fig4_dag.json");
  c.add_edge(Edge::node(N("h1"), N("h0")));
  EXPECT_EQ(codes(validate_component(c)), std::vector<ErrorCode>{ErrorCode::kCycleInDag});
}

TEST(Validate, DagSelfEdgeIsAllowed) {
  EXPECT_TRUE(validate_component(make_component(Layout::DAG, {"v=>a", "a->b", "b->b"})).empty());
}

TEST(Validate, CycleNeedsACycle) {
  EXPECT_EQ(codes(validate_component(make_component(Layout::C, {"v=>a", "a->b"}))),
            std::vector<ErrorCode>{ErrorCode::kNoCycle});
  EXPECT_TRUE(validate_component(make_component(Layout::C, {"v=>a", "a->a"})).empty());
}

TEST(Validate, UnreachableListNode) {
  auto c = make_component(Layout::SLL, {"v=>a", "a->b"}, {"z"});
  // z has in-degree 0 and becomes a root of its own, so it is reachable.
  EXPECT_TRUE(validate_component(c).empty());
  auto loop = make_component(Layout::SLL, {"v=>a", "b->c", "c->b"});
  EXPECT_EQ(codes(validate_component(loop)),
            (std::vector<ErrorCode>{ErrorCode::kUnreachableNode, ErrorCode::kUnreachableNode}));
}

TEST(Validate, UndeclaredEndpoint) {
  Component c(Layout::SLL);
  c.add_node(N("a"));
  c.add_edge(Edge::node(N("a"), N("ghost")));
  auto found = codes(validate_component(c));
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front(), ErrorCode::kUnknownEndpoint);
}

TEST(Validate, HeapIdClash) {
  Heap h;
  h.components.push_back(make_component(Layout::SLL, {"v=>a"}));
  h.components.push_back(make_component(Layout::SLL, {"w=>a"}));
  auto found = validate_heap(h);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].component, 1u);
  EXPECT_EQ(found[0].violation.code, ErrorCode::kComponentIdClash);
}

}  // namespace
}  // namespace heapabs
