#include <gtest/gtest.h>

#include "balgamma/digraph.hpp"
#include "fixtures.hpp"

namespace balgamma {
namespace {

using testing::example;

TEST(Parse, ExampleShape) {
  const Multidigraph d = example();
  EXPECT_EQ(d.num_vertices(), 4u);
  EXPECT_EQ(d.num_arcs(), 7u);
  EXPECT_EQ(d.arc(*d.find_arc("e")).source, d.vertex_index("4"));
  EXPECT_EQ(d.arc(*d.find_arc("e")).target, d.vertex_index("2"));
  EXPECT_FALSE(d.find_arc("z").has_value());
}

TEST(Parse, FormatRoundTrip) {
  const Multidigraph d = example();
  EXPECT_EQ(parse_digraph(format_digraph(d)), d);
}

TEST(Parse, LoopsAndParallelArcs) {
  const Multidigraph d = parse_digraph("v u\nv w\na x u u\na y u w\na z u w\n");
  EXPECT_EQ(d.num_arcs(), 3u);
  EXPECT_EQ(d.out_arcs(0).size(), 3u);
  EXPECT_EQ(d.in_arcs(0).size(), 1u);
}

struct BadInput {
  const char* text;
  std::size_t line;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportLineNumber) {
  try {
    parse_digraph(GetParam().text);
    FAIL() << "accepted bad input";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(Digraph, ParseErrors,
                         ::testing::Values(BadInput{"v 1\nv 1\n", 2},                  // duplicate vertex
                                           BadInput{"v 1\n\n# c\na a 1 2\n", 4},       // undeclared target
                                           BadInput{"v 1\na a 1 1\na a 1 1\n", 3},     // duplicate label
                                           BadInput{"v 1\na a 1\n", 2},                // arity
                                           BadInput{"v 1\nx 1\n", 2},                  // record type
                                           BadInput{"v 1 2\n", 1}));

TEST(Predicates, DegreesAndBalance) {
  const Multidigraph d = example();
  const auto deg = degrees(d);
  EXPECT_EQ(deg[d.vertex_index("4")], (Degree{2, 2}));
  EXPECT_EQ(deg[d.vertex_index("1")], (Degree{2, 2}));
  EXPECT_EQ(deg[d.vertex_index("3")], (Degree{1, 1}));
  EXPECT_TRUE(is_balanced(d));
  EXPECT_TRUE(is_weakly_connected(d));
  EXPECT_FALSE(is_balanced(parse_digraph("v 1\nv 2\na a 1 2\n")));
  EXPECT_FALSE(is_weakly_connected(parse_digraph("v 1\nv 2\n")));
}

TEST(Predicates, AcyclicityAndSinks) {
  const Multidigraph d = example();
  EXPECT_FALSE(is_acyclic(d, d.subset({"a", "b"})));
  EXPECT_FALSE(is_acyclic(d, d.subset({"c", "d", "e"})));
  EXPECT_TRUE(is_acyclic(d, d.subset({"b", "d", "g"})));
  EXPECT_EQ(sinks(d, d.subset({"b", "d", "g"})), VertexSet::single(d.vertex_index("1")));
  EXPECT_EQ(sinks(d, ArcSubset{}), d.all_vertices());
  EXPECT_FALSE(is_acyclic(parse_digraph("v 1\na l 1 1\n"), ArcSubset::single(0)));
}

TEST(Predicates, BasinAndConvergence) {
  const Multidigraph d = example();
  const std::size_t v1 = d.vertex_index("1");
  const ArcSubset b = d.subset({"b", "d", "g"});
  EXPECT_EQ(basin(d, b, v1), d.all_vertices());
  EXPECT_TRUE(is_convergence(d, b, v1));
  EXPECT_TRUE(is_convergence_by_sink(d, b, v1));
  EXPECT_FALSE(is_convergence(d, b, d.vertex_index("2")));
  // {b,d} leaves 4 stranded: basin of 1 is {1,2}.
  const ArcSubset partial = d.subset({"b", "d"});
  EXPECT_EQ(basin(d, partial, v1), VertexSet::single(v1) | VertexSet::single(d.vertex_index("2")));
  EXPECT_FALSE(is_convergence(d, partial, v1));
}

TEST(Predicates, PartitionCrossingArcs) {
  const Multidigraph d = example();
  const VertexSet p = VertexSet::single(d.vertex_index("1")) | VertexSet::single(d.vertex_index("2"));
  const Partition part = partition(d, p);
  EXPECT_EQ(part.q, p.complement(4));
  EXPECT_EQ(part.a_pq, d.subset({"c", "f"}));
  EXPECT_EQ(part.a_qp, d.subset({"e", "g"}));
}

TEST(Format, Labels) {
  const Multidigraph d = example();
  EXPECT_EQ(format_subset(d, d.subset({"g", "b"})), "{b,g}");
  EXPECT_EQ(format_subset(d, ArcSubset{}), "{}");
  EXPECT_EQ(format_vertices(d, d.all_vertices()), "{1,2,3,4}");
}

TEST(Construction, RejectsInvalidGraphs) {
  EXPECT_THROW(Multidigraph({"a", "a"}, {}), PreconditionError);
  EXPECT_THROW(Multidigraph({"a"}, {{"x", 0, 1}}), PreconditionError);
  EXPECT_THROW(example().vertex_index("9"), PreconditionError);
}

}  // namespace
}  // namespace balgamma
