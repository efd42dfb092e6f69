#include <gtest/gtest.h>

#include <limits>

#include "balgamma/bareiss.hpp"
#include "balgamma/crosscheck.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/random.hpp"
#include "fixtures.hpp"

namespace balgamma {
namespace {

using Mat = DenseMatrix<std::int64_t>;

Mat make(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(Bareiss, SmallDeterminants) {
  EXPECT_EQ(bareiss_determinant(make({{2, 1}, {1, 3}})), 5);
  EXPECT_EQ(bareiss_determinant(make({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(bareiss_determinant(make({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(bareiss_determinant(make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), 4);
  EXPECT_EQ(bareiss_determinant(make({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), -1);
  EXPECT_EQ(bareiss_determinant(Mat(0, 0)), 1);
}

TEST(Bareiss, MatchesCofactorExpansion) {
  // 4x4 with zeros forcing pivots; reference computed by hand-rolled Laplace expansion.
  const Mat m = make({{0, 3, 1, 2}, {4, 0, 0, 1}, {1, 1, 0, 5}, {2, 0, 3, 0}});
  auto det3 = [](const Mat& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  };
  std::int64_t ref = 0;
  for (Eigen::Index j = 0; j < 4; ++j) {
    Mat minor(3, 3);
    for (Eigen::Index r = 1; r < 4; ++r)
      for (Eigen::Index c = 0, cc = 0; c < 4; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    ref += (j % 2 ? -1 : 1) * m(0, j) * det3(minor);
  }
  EXPECT_EQ(bareiss_determinant(m), ref);
}

TEST(Bareiss, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  EXPECT_THROW(bareiss_determinant(make({{big, 1}, {-big, big}})), OverflowError);
}

TEST(MatrixTree, Example) {
  const Multidigraph d = testing::example();
  for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(matrix_tree_to_root(d, s), 3u);
}

TEST(MatrixTree, CompleteBidirectedGraph) {
  // Cayley: K4 has 4^2 spanning trees, each orientable toward any root.
  UndirectedMultigraph k4{{"1", "2", "3", "4"}, {}};
  int id = 0;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k4.edges.push_back({"e" + std::to_string(id++), u, v});
  const Multidigraph d = bidirect(k4);
  for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(matrix_tree_to_root(d, s), 16u);
}

TEST(MatrixTree, LoopsAndParallelArcs) {
  // Two parallel arcs 1->2 and a loop at 1: two arborescences into 2, none into 1.
  const Multidigraph d = parse_digraph("v 1\nv 2\na x 1 2\na y 1 2\na l 1 1\n");
  EXPECT_EQ(matrix_tree_to_root(d, 1), 2u);
  EXPECT_EQ(matrix_tree_to_root(d, 0), 0u);
  EXPECT_EQ(gamma_table(d).at(1, 1), 2u);
}

TEST(MatrixTree, AgreesWithEnumerationOnCorpus) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Multidigraph d = seed % 3 ? corpus_balanced(seed) : corpus_unbalanced(seed);
    const GammaTable g = gamma_table(d);
    for (std::size_t s = 0; s < d.num_vertices(); ++s)
      EXPECT_EQ(matrix_tree_to_root(d, s), g.at(s, d.num_vertices() - 1)) << seed;
  }
}

TEST(Orientations, Triangle) {
  const UndirectedMultigraph g = parse_undirected(testing::kTriangle);
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(count_unique_sink_orientations(g, s), 2u);
}

TEST(Orientations, TreeLoopAndParallelEdges) {
  const UndirectedMultigraph path = parse_undirected("v 1\nv 2\nv 3\ne x 1 2\ne y 2 3\n");
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(count_unique_sink_orientations(path, s), 1u);
  const UndirectedMultigraph loop = parse_undirected("v 1\nv 2\ne x 1 2\ne l 2 2\n");
  EXPECT_EQ(count_unique_sink_orientations(loop, 0), 0u);
  // A double edge must be oriented the same way twice: one orientation per sink.
  const UndirectedMultigraph dbl = parse_undirected("v 1\nv 2\ne x 1 2\ne y 1 2\n");
  EXPECT_EQ(count_unique_sink_orientations(dbl, 0), 1u);
}

TEST(Orientations, AgreeWithGammaAtEdgeCount) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const UndirectedMultigraph g = corpus_undirected(seed);
    const GammaTable t = gamma_table(bidirect(g));
    for (std::size_t s = 0; s < g.vertices.size(); ++s)
      EXPECT_EQ(count_unique_sink_orientations(g, s), t.at(s, g.edges.size())) << seed;
  }
}

TEST(Undirected, FormatRoundTripAndErrors) {
  const UndirectedMultigraph g = parse_undirected(testing::kTriangle);
  EXPECT_EQ(parse_undirected(format_undirected(g)), g);
  try {
    parse_undirected("v 1\ne x 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Naive, ExampleValues) {
  const Multidigraph d = testing::example();
  EXPECT_EQ(naive_gamma(d, 0, 3), 3u);
  EXPECT_EQ(naive_gamma(d, 2, 4), 2u);
  EXPECT_EQ(naive_gamma(d, 1, 5), 0u);
}

}  // namespace
}  // namespace balgamma
