#include <gtest/gtest.h>

#include <set>

#include "balgamma/bijections.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/random.hpp"
#include "fixtures.hpp"

namespace balgamma {
namespace {

using testing::example;

std::vector<std::string> circuit_labels(const Multidigraph& d, const CircuitDecomposition& dec) {
  std::vector<std::string> out;
  for (const auto& c : dec.circuits) {
    std::string s;
    for (auto a : c) s += d.arc(a).label;
    out.push_back(s);
  }
  return out;
}

TEST(Decomposition, ExampleCircuits) {
  const Multidigraph d = example();
  const CircuitDecomposition dec = circuit_decomposition(d);
  EXPECT_EQ(circuit_labels(d, dec), (std::vector<std::string>{"ab", "cde", "fg"}));
  EXPECT_EQ(validate_decomposition(d, dec), "");
}

TEST(Decomposition, LassoTailIsReleased) {
  // From x the lowest out-arcs run x->y->z->y; the tail arc x->y is released.
  const Multidigraph d = parse_digraph("v x\nv y\nv z\na p x y\na q y z\na r z y\na s y x\n");
  const CircuitDecomposition dec = circuit_decomposition(d);
  EXPECT_EQ(validate_decomposition(d, dec), "");
  EXPECT_EQ(circuit_labels(d, dec), (std::vector<std::string>{"qr", "ps"}));
}

TEST(Decomposition, RejectsUnbalanced) {
  EXPECT_THROW(circuit_decomposition(parse_digraph("v 1\nv 2\na a 1 2\n")), PreconditionError);
}

TEST(Decomposition, ValidatorFindsDefects) {
  const Multidigraph d = example();
  CircuitDecomposition dec = circuit_decomposition(d);
  dec.circuits[1].pop_back();
  EXPECT_NE(validate_decomposition(d, dec), "");
}

TEST(Crossing, ExampleBeta) {
  const Multidigraph d = example();
  const auto dec = circuit_decomposition(d);
  const VertexSet p = VertexSet::single(d.vertex_index("1")) | VertexSet::single(d.vertex_index("2"));
  const CrossingBijection beta = crossing_bijection(d, dec, partition(d, p));
  const auto idx = [&](const char* l) { return *d.find_arc(l); };
  EXPECT_EQ(beta.forward.size(), 2u);
  EXPECT_EQ(beta.forward.at(idx("c")), idx("e"));
  EXPECT_EQ(beta.forward.at(idx("f")), idx("g"));
  EXPECT_EQ(beta.image(d.subset({"c", "f"})), d.subset({"e", "g"}));
  EXPECT_EQ(beta.preimage(d.subset({"g"})), d.subset({"f"}));
}

TEST(Crossing, EveryPartitionOfCorpus) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Multidigraph d = corpus_balanced(seed);
    const auto dec = circuit_decomposition(d);
    const std::size_t n = d.num_vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Partition part = partition(d, VertexSet(mask));
      ASSERT_EQ(part.a_pq.count(), part.a_qp.count());
      const auto beta = crossing_bijection(d, dec, part);
      EXPECT_EQ(beta.image(part.a_pq), part.a_qp);
    }
  }
}

TEST(StripRefill, ExampleRoundTrip) {
  const Multidigraph d = example();
  const Terminals st{d.vertex_index("1"), d.vertex_index("2")};
  // In {c,d,g} only 2 reaches 2, and c (2->3) is the single arc leaving that basin.
  const ArcSubset b = d.subset({"c", "d", "g"});
  const Partition part = partition(d, basin(d, b, st.t).complement(d.num_vertices()));
  const Stripped x = strip_t(d, b, part, st);
  EXPECT_EQ(x.c, d.subset({"c"}));
  EXPECT_EQ(refill_t(d, x.e, x.c, part, st), b);
}

TEST(Phi, ExampleMapsOutsideGammaAndInverts) {
  const Multidigraph d = example();
  const auto dec = circuit_decomposition(d);
  const Terminals st{0, 1};
  std::size_t mapped = 0;
  for (std::size_t k = 0; k <= d.num_arcs(); ++k) {
    const auto uk = classify_uk(d, st.s, st.t, k).members();
    for (const auto& b : uk) {
      if (is_convergence(d, b, st.s)) continue;
      const ArcSubset img = phi(d, dec, b, st);
      EXPECT_EQ(img.count(), k);
      EXPECT_FALSE(is_convergence(d, img, st.t));
      EXPECT_EQ(phi_inverse(d, dec, img, st), b);
      ++mapped;
    }
  }
  EXPECT_GT(mapped, 0u);
}

TEST(Psi, ExampleIsBijection) {
  const Multidigraph d = example();
  const auto dec = circuit_decomposition(d);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t)
      for (std::size_t k = 3; k <= 4; ++k) {
        const auto from = list_convergences(d, s, k);
        std::set<ArcSubset> image;
        for (const auto& b : from) {
          auto [img, trace] = psi(d, dec, b, {s, t});
          EXPECT_TRUE(is_convergence(d, img, t));
          EXPECT_LE(trace.steps.size(), d.num_vertices());
          if (s == t) {
            EXPECT_EQ(img, b);
          }
          image.insert(img);
        }
        const auto to = list_convergences(d, t, k);
        EXPECT_EQ(image, std::set<ArcSubset>(to.begin(), to.end()));
      }
}

TEST(Psi, ExampleTraces) {
  const Multidigraph d = example();
  const auto dec = circuit_decomposition(d);
  const Terminals st{d.vertex_index("1"), d.vertex_index("2")};
  auto run = [&](std::initializer_list<std::string_view> b) { return psi(d, dec, d.subset(b), st); };
  auto [img1, t1] = run({"b", "d", "g"});
  EXPECT_EQ(img1, d.subset({"a", "d", "g"}));
  EXPECT_EQ(t1.steps.size(), 1u);
  auto [img2, t2] = run({"c", "d", "g"});
  EXPECT_EQ(img2, d.subset({"d", "e", "f"}));
  ASSERT_EQ(t2.steps.size(), 2u);
  EXPECT_LT(t2.steps[0].partition.q.count(), t2.steps[1].partition.q.count());
}

TEST(Psi, RequiresConvergence) {
  const Multidigraph d = example();
  const auto dec = circuit_decomposition(d);
  EXPECT_THROW(psi(d, dec, d.subset({"a"}), {0, 1}), PreconditionError);
}

}  // namespace
}  // namespace balgamma
