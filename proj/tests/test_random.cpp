#include <gtest/gtest.h>

#include "balgamma/random.hpp"

namespace balgamma {
namespace {

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
}

TEST(SplitMix64, BoundedDrawsStayInRange) {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const auto x = rng.between(3, 5);
    EXPECT_GE(x, 3u);
    EXPECT_LE(x, 5u);
  }
}

TEST(Generator, BalancedAndReproducible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Multidigraph d = corpus_balanced(seed);
    EXPECT_TRUE(is_balanced(d)) << seed;
    EXPECT_LE(d.num_vertices(), 6u);
    EXPECT_LE(d.num_arcs(), 14u);
    EXPECT_EQ(d, corpus_balanced(seed));
  }
}

TEST(Generator, Parameters) {
  const Multidigraph d = random_balanced({5, 4, 3, 9});
  EXPECT_EQ(d.num_vertices(), 5u);
  EXPECT_GE(d.num_arcs(), 4u);
  EXPECT_LE(d.num_arcs(), 12u);
  EXPECT_TRUE(is_balanced(d));
  EXPECT_THROW(random_balanced({0, 1, 1, 0}), PreconditionError);
  EXPECT_THROW(random_balanced({3, 1, 0, 0}), PreconditionError);
}

TEST(Generator, UnbalancedCorpus) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Multidigraph d = corpus_unbalanced(seed);
    EXPECT_FALSE(is_balanced(d)) << seed;
    EXPECT_EQ(d, corpus_unbalanced(seed));
  }
}

TEST(Generator, UndirectedCorpus) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const UndirectedMultigraph g = corpus_undirected(seed);
    EXPECT_LE(g.vertices.size(), 5u);
    EXPECT_LE(g.edges.size(), 7u);
    EXPECT_TRUE(is_balanced(bidirect(g)));
  }
}

}  // namespace
}  // namespace balgamma
