#include <gtest/gtest.h>

#include <atomic>

#include "balgamma/crosscheck.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/random.hpp"
#include "fixtures.hpp"

namespace balgamma {
namespace {

using testing::example;
using testing::sorted_labels;

TEST(Gamma, ExampleTable) {
  const Multidigraph d = example();
  const GammaTable g = gamma_table(d);
  ASSERT_EQ(g.max_k(), 7u);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t k = 0; k <= 7; ++k) EXPECT_EQ(g.at(s, k), k == 3 ? 3u : k == 4 ? 2u : 0u) << s << ' ' << k;
  EXPECT_TRUE(g.all_uniform());
}

TEST(Gamma, ExampleLists) {
  const Multidigraph d = example();
  const std::size_t v1 = d.vertex_index("1"), v2 = d.vertex_index("2");
  auto both = [&](std::size_t s) {
    auto l = list_convergences(d, s, 3);
    auto r = list_convergences(d, s, 4);
    l.insert(l.end(), r.begin(), r.end());
    return sorted_labels(d, l);
  };
  EXPECT_EQ(both(v1), (std::vector<std::string>{"{b,c,d,g}", "{b,d,e,g}", "{b,d,e}", "{b,d,g}", "{c,d,g}"}));
  EXPECT_EQ(both(v2), (std::vector<std::string>{"{a,d,e,f}", "{a,d,e,g}", "{a,d,e}", "{a,d,g}", "{d,e,f}"}));
}

TEST(Gamma, ListsAreSortedAndUnique) {
  const Multidigraph d = example();
  const auto l = list_convergences(d, 0, 3);
  EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));
  EXPECT_EQ(std::adjacent_find(l.begin(), l.end()), l.end());
  EXPECT_TRUE(list_convergences(d, 0, 99).empty());
  EXPECT_THROW(list_convergences(d, 9, 3), PreconditionError);
}

TEST(Gamma, BidirectedTriangle) {
  const Multidigraph d = bidirect(parse_undirected(testing::kTriangle));
  const GammaTable g = gamma_table(d);
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_EQ(g.at(s, 3), 2u);
    EXPECT_EQ(g.at(s, 2), 3u);  // spanning arborescences of K3
  }
}

TEST(Gamma, DirectedPathHasOneRoot) {
  const Multidigraph d = parse_digraph("v 1\nv 2\nv 3\na x 1 2\na y 2 3\n");
  const GammaTable g = gamma_table(d);
  EXPECT_EQ(g.at(2, 2), 1u);
  EXPECT_EQ(g.at(0, 2), 0u);
  EXPECT_FALSE(g.all_uniform());
}

TEST(Gamma, SingleVertexWithLoop) {
  const GammaTable g = gamma_table(parse_digraph("v 1\na l 1 1\n"));
  EXPECT_EQ(g.at(0, 0), 1u);
  EXPECT_EQ(g.at(0, 1), 0u);
}

TEST(Gamma, WorkerCountDoesNotChangeResults) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Multidigraph d = corpus_balanced(seed);
    EnumerationOptions one, many;
    many.workers = 4;
    many.prefix_depth = 3;
    EXPECT_EQ(gamma_table(d, one), gamma_table(d, many)) << seed;
    EXPECT_EQ(list_acyclic(d, 0, d.num_arcs(), one), list_acyclic(d, 0, d.num_arcs(), many)) << seed;
  }
}

TEST(Gamma, MatchesPowerSetOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Multidigraph d = seed % 2 ? corpus_balanced(seed) : corpus_unbalanced(seed);
    EXPECT_EQ(gamma_table(d), naive_gamma_table(d)) << seed;
  }
}

TEST(Enumerate, VisitsEveryAcyclicSubsetOnce) {
  const Multidigraph d = example();
  std::atomic<Count> seen = 0;
  EnumerationOptions opts;
  opts.workers = 3;
  const Count total = enumerate_acyclic(d, [&](const ArcSubset& b) {
    EXPECT_TRUE(is_acyclic(d, b));
    ++seen;
  }, opts);
  EXPECT_EQ(total, seen.load());
  // 2^7 minus the subsets containing one of the cycles, counted directly.
  Count expected = 0;
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    ArcSubset b;
    for (std::size_t i = 0; i < 7; ++i)
      if (mask >> i & 1) b.set(i);
    expected += is_acyclic(d, b);
  }
  EXPECT_EQ(total, expected);
}

TEST(Enumerate, BudgetIsEnforced) {
  BalancedParams p{12, 20, 4, 3};
  const Multidigraph d = random_balanced(p);
  EnumerationOptions tight;
  tight.node_budget = 1000;
  EXPECT_THROW(gamma_table(d, tight), BudgetExceeded);
  tight.workers = 4;
  EXPECT_THROW(gamma_table(d, tight), BudgetExceeded);
}

TEST(Classify, CellsPartitionUk) {
  const Multidigraph d = example();
  const std::size_t s = 0, t = 1;
  for (std::size_t k = 0; k <= d.num_arcs(); ++k) {
    const BasinClassification c = classify_uk(d, s, t, k);
    Count sum = 0;
    for (const auto& [key, cell] : c.cells) {
      sum += cell.count;
      EXPECT_EQ(cell.count, cell.members.size());
      for (const auto& b : cell.members) {
        EXPECT_EQ(b.count(), k);
        EXPECT_EQ(basin(d, b, s), key.first);
        EXPECT_EQ(basin(d, b, t), key.second);
        EXPECT_EQ(key.first | key.second, d.all_vertices());
      }
    }
    EXPECT_EQ(sum, c.total());
    EXPECT_EQ(c.count_s_basin(d.all_vertices()), gamma_table(d).at(s, k));
  }
  EXPECT_THROW(classify_uk(d, 0, 0, 3), PreconditionError);
}

TEST(Classify, AllSizesAgreeWithSingleSize) {
  const Multidigraph d = corpus_balanced(7);
  const auto all = classify_all(d, 0, d.num_vertices() - 1, {}, 0);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto one = classify_uk(d, 0, d.num_vertices() - 1, k, {}, 0);
    EXPECT_EQ(all[k].total(), one.total()) << k;
  }
}

TEST(MaxAcyclic, Example) {
  const Multidigraph d = example();
  const MaxAcyclic m = max_acyclic(d);
  EXPECT_EQ(m.size, 4u);
  EXPECT_EQ(m.count, list_acyclic(d, 4, 4).size());
  EXPECT_EQ(max_convergence_size(d, 0), 4u);
  EXPECT_THROW(max_convergence_size(parse_digraph("v 1\nv 2\n"), 0), PreconditionError);
}

}  // namespace
}  // namespace balgamma
