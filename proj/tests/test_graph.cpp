#include <gtest/gtest.h>

#include "ksplit/graph.hpp"

using namespace ksplit;

namespace {

using Names = std::vector<std::string>;

KGraph diamond() {
  return KGraph(Multigraph({"a", "x", "y", "b"}, {{"ax", "a", "x"}, {"ay", "a", "y"}, {"xb", "x", "b"}, {"yb", "y", "b"}}),
                {"a", "b"});
}

Names edge_ids(const Multigraph& g) {
  Names ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TEST(Multigraph, Validation) {
  EXPECT_THROW(Multigraph({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(Multigraph({"a", "b"}, {{"e", "a", "c"}}), std::invalid_argument);
  EXPECT_THROW(Multigraph({"a", "b"}, {{"e", "a", "a"}}), std::invalid_argument);
  EXPECT_THROW(Multigraph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}), std::invalid_argument);
  Multigraph parallel({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}});
  EXPECT_EQ(parallel.edge_count(), 2u);
  EXPECT_THROW(KGraph(parallel, {"c"}), std::invalid_argument);
}

TEST(InducedPartition, Examples) {
  Multigraph edge({"a", "b"}, {{"e", "a", "b"}});
  Names ka{"a"};
  EXPECT_EQ(induced_partition(edge, ka).to_string(), "abl");
  EXPECT_EQ(induced_partition(Multigraph({"a", "b"}, {}), ka).to_string(), "al|b");
  EXPECT_EQ(induced_partition(Multigraph({"a", "x"}, {}), ka).to_string(), "al|x");
}

TEST(BoundaryPartition, DiamondSide) {
  Names k{"a"}, x{"x", "y"};
  Multigraph both({"a", "x", "y"}, {{"ax", "a", "x"}, {"ay", "a", "y"}});
  Multigraph one({"a", "x", "y"}, {{"ax", "a", "x"}});
  Multigraph none({"a", "x", "y"}, {});
  EXPECT_EQ(boundary_partition(both, k, x).to_string(), "xyl");
  EXPECT_EQ(boundary_partition(one, k, x).to_string(), "xl|y");
  EXPECT_EQ(boundary_partition(none, k, x).to_string(), "x|y");
}

TEST(Merge, ParallelEdgesSurviveLoopsVanish) {
  Multigraph side2({"x", "y", "b"}, {{"xb", "x", "b"}, {"yb", "y", "b"}});
  auto g = merge(side2, LabelledPartition::parse("xy"));
  EXPECT_EQ(g.vertices(), (Names{"b", "x+y"}));
  ASSERT_EQ(g.edge_count(), 2u);
  for (const auto& e : g.edges()) EXPECT_TRUE((e.u == "x+y" && e.v == "b") || (e.u == "b" && e.v == "x+y"));

  Multigraph triangle({"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ac", "a", "c"}});
  auto t = merge(triangle, LabelledPartition::parse("ab|c"));
  EXPECT_EQ(t.vertices(), (Names{"a+b", "c"}));
  EXPECT_EQ(edge_ids(t), (Names{"ac", "bc"}));

  EXPECT_EQ(merge(triangle, LabelledPartition::parse("a|b|c")), triangle);
}

TEST(Merge, NameCollisionThrows) {
  Multigraph g({"x", "y", "x+y"}, {{"e", "x", "x+y"}});
  EXPECT_THROW(merge(g, LabelledPartition::parse("xy")), std::invalid_argument);
}

TEST(MergedKGraph, DiamondSideTerminals) {
  KGraph side(Multigraph({"a", "x", "y"}, {{"ax", "a", "x"}, {"ay", "a", "y"}}), {"a"});
  auto g = make_ground({"x", "y"});
  EXPECT_EQ(merged_kgraph(side, LabelledPartition::parse("xyl", g)).terminals, (Names{"a", "x+y"}));
  EXPECT_EQ(merged_kgraph(side, LabelledPartition::parse("xl|y", g)).terminals, (Names{"a", "x"}));
  EXPECT_EQ(merged_kgraph(side, LabelledPartition::parse("xl|yl", g)).terminals, (Names{"a", "x", "y"}));
  EXPECT_THROW(merged_kgraph(side, LabelledPartition::parse("x|y", g)), std::invalid_argument);
}

TEST(MergedKGraph, TerminalInSeparatorStaysTerminal) {
  KGraph side(Multigraph({"a", "x", "y"}, {{"ax", "a", "x"}, {"ay", "a", "y"}}), {"a", "x"});
  auto g = make_ground({"x", "y"});
  EXPECT_EQ(merged_kgraph(side, LabelledPartition::parse("xl|y", g)).terminals, (Names{"a", "x"}));
  EXPECT_THROW(merged_kgraph(side, LabelledPartition::parse("x|yl", g)), std::invalid_argument);
}

TEST(XMergedKGraph, Examples) {
  KGraph side(Multigraph({"a", "x", "y"}, {{"ax", "a", "x"}, {"ay", "a", "y"}}), {"a"});
  Names x{"x", "y"};
  auto m = x_merged_kgraph(side, x);
  EXPECT_EQ(m.graph.vertices(), (Names{"a", "x+y"}));
  EXPECT_EQ(m.graph.edge_count(), 2u);
  EXPECT_EQ(m.terminals, (Names{"a", "x+y"}));

  KGraph inside(Multigraph({"x", "y", "c"}, {{"xc", "x", "c"}}), {"x"});
  EXPECT_EQ(x_merged_kgraph(inside, x).terminals, (Names{"x+y"}));

  KGraph path(Multigraph({"a", "x"}, {{"ax", "a", "x"}}), {"a"});
  Names single{"x"};
  auto p = x_merged_kgraph(path, single);
  EXPECT_EQ(p.terminals, (Names{"a", "x"}));
  EXPECT_EQ(p.graph.edge_count(), 1u);
}

TEST(KConnected, Examples) {
  Names ab{"a", "b"}, a{"a"};
  EXPECT_TRUE(k_connected(Multigraph({"a", "b"}, {{"e", "a", "b"}}), ab));
  EXPECT_FALSE(k_connected(Multigraph({"a", "b"}, {}), ab));
  EXPECT_TRUE(k_connected(Multigraph({"a", "b"}, {}), a));
}

TEST(SplitBySeparator, PathAndDiamond) {
  KGraph path(Multigraph({"a", "x", "b"}, {{"ax", "a", "x"}, {"xb", "x", "b"}}), {"a", "b"});
  Names x{"x"};
  auto s = split_by_separator(path, x);
  EXPECT_EQ(edge_ids(s.side1.graph), (Names{"ax"}));
  EXPECT_EQ(edge_ids(s.side2.graph), (Names{"xb"}));
  EXPECT_EQ(s.side1.terminals, (Names{"a"}));
  EXPECT_EQ(s.side2.terminals, (Names{"b"}));
  validate_splitting(path, s);
  EXPECT_EQ(reassemble(s), path);

  Names xy{"x", "y"};
  auto d = split_by_separator(diamond(), xy);
  EXPECT_EQ(edge_ids(d.side1.graph), (Names{"ax", "ay"}));
  EXPECT_EQ(edge_ids(d.side2.graph), (Names{"xb", "yb"}));
  EXPECT_EQ(reassemble(d), diamond());
}

TEST(SplitBySeparator, AssignmentIsHonoured) {
  Names xy{"x", "y"};
  auto d = split_by_separator(diamond(), xy, {{"a", 2}, {"b", 1}});
  EXPECT_EQ(edge_ids(d.side1.graph), (Names{"xb", "yb"}));
  EXPECT_EQ(d.side2.terminals, (Names{"a"}));
}

TEST(SplitBySeparator, Errors) {
  Names xy{"x", "y"};
  // both terminals on one side of the cut
  KGraph g(Multigraph({"a", "b", "x", "c"}, {{"ab", "a", "b"}, {"bx", "b", "x"}, {"xc", "x", "c"}}), {"a", "b"});
  Names x{"x"};
  EXPECT_THROW(split_by_separator(g, x), std::invalid_argument);
  // not separating, no assignment
  KGraph tri(Multigraph({"a", "b", "x"}, {{"ab", "a", "b"}, {"bx", "b", "x"}, {"ax", "a", "x"}}), {"a", "b"});
  EXPECT_THROW(split_by_separator(tri, x), std::invalid_argument);
  Names unknown{"q"};
  EXPECT_THROW(split_by_separator(diamond(), unknown), std::invalid_argument);
  Names none;
  EXPECT_THROW(split_by_separator(diamond(), none), std::invalid_argument);
  EXPECT_THROW(split_by_separator(diamond(), xy, {{"a", 3}}), std::invalid_argument);
}

TEST(SplitBySeparator, TerminalInSeparatorAllowsOneSidedTerminals) {
  // K = {x, b}: side 1 has only the separator terminal.
  KGraph path(Multigraph({"a", "x", "b"}, {{"ax", "a", "x"}, {"xb", "x", "b"}}), {"b", "x"});
  Names x{"x"};
  auto s = split_by_separator(path, x);
  validate_splitting(path, s);
  EXPECT_EQ(s.separator_terminals(), (Names{"x"}));
}
