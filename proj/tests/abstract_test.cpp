// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "heapabs/abstract.hpp"
#include "heapabs/classify.hpp"

namespace heapabs {
namespace {

using support::fixture_component;
using support::make_component;

NodeId N(const std::string& s) { return NodeId(s); }

std::set<NodeId> ids(std::initializer_list<const char*> names) {
  std::set<NodeId> out;
  for (const char* n : names) out.insert(NodeId(n));
  return out;
}

Component perfect_tree(int levels, bool pointed_root = true) {
  Component c(Layout::T);
  int count = (1 << levels) - 1;
  for (int i = 0; i < count; ++i) c.add_node(N("t" + std::to_string(i)));
  for (int i = 1; i < count; ++i) {
    c.add_edge(Edge::labeled(N("t" + std::to_string((i - 1) / 2)), N("t" + std::to_string(i)),
                             i % 2 == 1 ? Label::kLeft : Label::kRight));
  }
  if (pointed_root) {
    c.add_var(VarId("root"));
    c.add_edge(Edge::var(VarId("root"), N("t0")));
  }
  return c;
}

void expect_sound(const Component& input, const AbstractionResult& r) {
  EXPECT_TRUE(verify_result(input, r).empty());
}

TEST(RemoveNode, ChainMiddle) {
  auto c = make_component(Layout::SLL, {"a->b", "b->c"});
  EXPECT_EQ(remove_node(c, N("a"), N("b")), make_component(Layout::SLL, {"a->c"}));
}

TEST(RemoveNode, SelfEdgeMovesToSurvivor) {
  auto c = make_component(Layout::SLL, {"a->b", "b->b"});
  EXPECT_EQ(remove_node(c, N("a"), N("b")), make_component(Layout::SLL, {"a->a"}));
}

TEST(RemoveNode, ListIntermediate) {
  auto c = make_component(Layout::SLL, {"s=>h0", "e=>h7", "h0->h1", "h1->h1", "h1->h5",
                                        "h5->h6", "h6->h7", "h7->h6"});
  Component out = remove_node(c, N("h1"), N("h5"));
  EXPECT_TRUE(out.has_edge(Edge::node(N("h1"), N("h6"))));
  EXPECT_FALSE(out.has_node(N("h5")));
}

TEST(RemoveNode, Errors) {
  auto c = make_component(Layout::SLL, {"a->b"});
  EXPECT_HEAPABS_ERROR(remove_node(c, N("a"), N("a")), ErrorCategory::kPrecondition,
                       ErrorCode::kSameNode);
  EXPECT_HEAPABS_ERROR(remove_node(c, N("a"), N("z")), ErrorCategory::kPrecondition,
                       ErrorCode::kUnknownNode);
  EXPECT_HEAPABS_ERROR(remove_node(perfect_tree(2), N("t0"), N("t1")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
}

TEST(RemoveNodesTree, Examples) {
  auto small = make_component(Layout::T, {"a-l->b", "a-r->c"});
  EXPECT_EQ(remove_nodes_tree(small, N("b"), N("c")), make_component(Layout::T, {}, {"a"}));

  Component fig = fixture_component("fig2_tree.json");
  Component out = remove_nodes_tree(fig, N("h7"), N("h8"));
  EXPECT_FALSE(out.has_edge(Edge::labeled(N("h3"), N("h7"), Label::kLeft)));
  EXPECT_FALSE(out.has_edge(Edge::labeled(N("h3"), N("h8"), Label::kRight)));
  EXPECT_EQ(out.edges().size(), fig.edges().size() - 2);

  auto looped = make_component(Layout::T, {"a-l->b", "a-r->c", "b-l->b", "b-r->b"});
  EXPECT_EQ(remove_nodes_tree(looped, N("b"), N("c")).edges().size(), 0u);
  EXPECT_HEAPABS_ERROR(remove_nodes_tree(small, N("b"), N("b")), ErrorCategory::kPrecondition,
                       ErrorCode::kSameNode);
}

TEST(AbstractList, Figure) {
  Component in = fixture_component("fig1_sll.json");
  AbstractionResult r = abstract_sll(in);
  EXPECT_EQ(r.output, make_component(Layout::SLL, {"s=>h0", "e=>h7", "h0->h1", "h1->h1",
                                                   "h1->h6", "h6->h7", "h7->h6"}));
  std::vector<MergeEvent> log = {{N("h1"), {N("h2")}},
                                 {N("h1"), {N("h3")}},
                                 {N("h1"), {N("h4")}},
                                 {N("h1"), {N("h5")}}};
  EXPECT_EQ(r.merge_log, log);
  EXPECT_EQ(r.candidates, 5u);
  EXPECT_EQ(r.merge_bound, 4u);
  expect_sound(in, r);
}

TEST(AbstractList, SingleNode) {
  auto in = make_component(Layout::SLL, {"v=>a"});
  AbstractionResult r = abstract_sll(in);
  EXPECT_EQ(r.output, in);
  EXPECT_EQ(r.witness, identity_witness(in));
}

TEST(AbstractList, TailCollapses) {
  auto in = make_component(Layout::SLL, {"v=>a", "a->b", "b->c"});
  AbstractionResult r = abstract_sll(in);
  EXPECT_EQ(r.output, make_component(Layout::SLL, {"v=>a", "a->b", "b->b"}));
  expect_sound(in, r);
}

TEST(AbstractTree, Figure) {
  Component in = fixture_component("fig2_tree.json");
  AbstractionResult r = abstract_tree(in);
  EXPECT_EQ(r.output.nodes(),
            ids({"h0", "h1", "h2", "h5", "h6", "h11", "h12", "h13", "h14"}));
  std::set<Edge> want = {
      Edge::var(VarId("R"), N("h0")),
      Edge::labeled(N("h0"), N("h1"), Label::kLeft),
      Edge::labeled(N("h0"), N("h2"), Label::kRight),
      Edge::labeled(N("h1"), N("h1"), Label::kLeft),
      Edge::labeled(N("h1"), N("h1"), Label::kRight),
      Edge::labeled(N("h2"), N("h5"), Label::kLeft),
      Edge::labeled(N("h2"), N("h6"), Label::kRight),
      Edge::labeled(N("h5"), N("h6"), Label::kRight),
      Edge::labeled(N("h5"), N("h11"), Label::kLeft),
      Edge::labeled(N("h5"), N("h12"), Label::kRight),
      Edge::labeled(N("h6"), N("h13"), Label::kLeft),
      Edge::labeled(N("h6"), N("h14"), Label::kRight)};
  EXPECT_EQ(r.output.edges(), want);
  std::vector<MergeEvent> log = {{N("h3"), {N("h7"), N("h8")}},
                                 {N("h4"), {N("h9"), N("h10")}},
                                 {N("h1"), {N("h3"), N("h4")}}};
  EXPECT_EQ(r.merge_log, log);
  for (const char* n : {"h3", "h4", "h7", "h8", "h9", "h10"}) {
    EXPECT_EQ(r.witness.node_map.at(N(n)), N("h1")) << n;
  }
  expect_sound(in, r);
}

TEST(AbstractTree, SingleNode) {
  auto in = make_component(Layout::T, {"v=>r"});
  EXPECT_EQ(abstract_tree(in).output, in);
}

TEST(AbstractTree, DepthOneChildrenSurvive) {
  Component in = perfect_tree(3);
  AbstractionResult r = abstract_tree(in);
  EXPECT_EQ(r.output, make_component(Layout::T, {"root=>t0", "t0-l->t1", "t0-r->t2", "t1-l->t1",
                                                 "t1-r->t1", "t2-l->t2", "t2-r->t2"}));
  expect_sound(in, r);
}

TEST(AbstractTree, PointedLeafBlocksFold) {
  // A variable below a merge candidate keeps its parent from folding upward.
  Component in = perfect_tree(4);
  in.add_var(VarId("x"));
  in.add_edge(Edge::var(VarId("x"), N("t7")));
  AbstractionResult r = abstract_tree(in);
  EXPECT_TRUE(r.output.has_node(N("t7")));
  EXPECT_TRUE(r.output.has_node(N("t3")));
  expect_sound(in, r);
}

TEST(AbstractCycle, Figure) {
  Component in = fixture_component("fig3_cycle.json");
  AbstractionResult r = abstract_cycle(in);
  EXPECT_EQ(r.output, make_component(Layout::C, {"s=>h0", "h0->h1", "h1->h2", "h2->h2",
                                                 "h2->h7", "h7->h0", "h7->h1"}));
  EXPECT_EQ(r.merge_log.size(), 4u);
  expect_sound(in, r);
}

TEST(AbstractCycle, TwoRing) {
  auto in = make_component(Layout::C, {"v=>a", "a->b", "b->a"});
  AbstractionResult r = abstract_cycle(in);
  EXPECT_EQ(r.output, in);
  EXPECT_EQ(r.witness, identity_witness(in));
}

TEST(AbstractCycle, FourRing) {
  auto in = make_component(Layout::C, {"v=>a", "a->b", "b->c", "c->d", "d->a"});
  AbstractionResult r = abstract_cycle(in);
  EXPECT_EQ(r.output, make_component(Layout::C, {"v=>a", "a->b", "b->b", "b->a"}));
  EXPECT_EQ(r.merge_log.size(), 2u);
  expect_sound(in, r);
}

TEST(AbstractDag, Figure) {
  Component in = fixture_component("fig4_dag.json");
  AbstractionResult r = abstract_dag(in);
  EXPECT_EQ(r.output,
            make_component(Layout::DAG, {"s=>h0", "h0->h1", "h7->h1", "h1->h1"}));
  EXPECT_EQ(r.merge_log.size(), 5u);
  EXPECT_EQ(r.merge_bound, 5u);
  EXPECT_TRUE(verify_structure(in, r).empty());
}

TEST(AbstractDag, GroupSelfEdgeHasNoPreimage) {
  // The added summary edge cannot be hit by an onto edge map.
  Component in = fixture_component("fig4_dag.json");
  AbstractionResult r = abstract_dag(in);
  auto violations = check_valid_abstraction(in, r.output, r.witness);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].code, ErrorCode::kEdgeMapNotOnto);
}

TEST(AbstractDag, DissimilarNodesUnchanged) {
  auto in = make_component(Layout::DAG, {"v=>a", "a->b", "a->c", "b->c"});
  AbstractionResult r = abstract_dag(in);
  EXPECT_EQ(r.output, in);
  EXPECT_EQ(r.witness, identity_witness(in));
}

TEST(AbstractDag, Diamond) {
  auto in = make_component(Layout::DAG, {"a->b", "a->c", "b->d", "c->d", "v=>a", "w=>d"});
  AbstractionResult r = abstract_dag(in);
  EXPECT_EQ(r.output,
            make_component(Layout::DAG, {"v=>a", "w=>d", "a->b", "b->b", "b->d"}));
}

TEST(AbstractComponent, LayoutChecks) {
  EXPECT_HEAPABS_ERROR(abstract_sll(fixture_component("fig3_cycle.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
  EXPECT_HEAPABS_ERROR(abstract_tree(fixture_component("fig1_sll.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
  EXPECT_HEAPABS_ERROR(abstract_cycle(fixture_component("fig4_dag.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
  EXPECT_HEAPABS_ERROR(abstract_dag(fixture_component("fig2_tree.json")),
                       ErrorCategory::kPrecondition, ErrorCode::kLayoutMismatch);
}

TEST(AbstractComponent, InvalidInputIsRejected) {
  auto in = make_component(Layout::C, {"v=>a", "a->b"});
  EXPECT_HEAPABS_ERROR(abstract_cycle(in), ErrorCategory::kModel, ErrorCode::kNoCycle);
}

TEST(HeapAbstract, Mixed) {
  Heap h = support::fixture_heap("mixed.json");
  HeapAbstraction r = heap_abstract(h);
  ASSERT_EQ(r.heap.components.size(), 4u);
  ASSERT_EQ(r.results.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.heap.components[i], abstract_component(h.components[i]).output);
    EXPECT_EQ(r.heap.components[i].layout(), h.components[i].layout());
  }
  EXPECT_EQ(r.witnesses().size(), 4u);
}

TEST(HeapAbstract, EmptyAndSingle) {
  HeapAbstraction empty = heap_abstract(Heap{});
  EXPECT_TRUE(empty.heap.components.empty());
  EXPECT_TRUE(empty.witnesses().empty());
  Heap one = support::fixture_heap("fig1_sll.json");
  EXPECT_EQ(heap_abstract(one).heap.components.at(0),
            abstract_sll(one.components[0]).output);
}

TEST(HeapAbstract, ReportsFailingComponent) {
  Heap h = support::fixture_heap("mixed.json");
  h.components.push_back(make_component(Layout::C, {"zz=>x", "x->y"}));
  try {
    heap_abstract(h);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.category(), ErrorCategory::kModel);
    EXPECT_EQ(e.location(), "component 4");
  }
}

}  // namespace
}  // namespace heapabs
