#include "balgamma/random.hpp"

#include <string>

namespace balgamma {

namespace {

std::vector<std::string> numbered_vertices(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t v = 1; v <= n; ++v) ids.push_back(std::to_string(v));
  return ids;
}

}  // namespace

Multidigraph random_balanced(const BalancedParams& params) {
  if (params.vertices == 0) throw PreconditionError("need at least one vertex");
  if (params.max_length == 0) throw PreconditionError("max length must be at least 1");
  SplitMix64 rng(params.seed);
  const std::size_t n = params.vertices;
  std::vector<Arc> arcs;
  auto add = [&](std::size_t u, std::size_t v) {
    arcs.push_back({"a" + std::to_string(arcs.size() + 1), u, v});
  };
  for (std::size_t c = 0; c < params.circuits; ++c) {
    const std::size_t start = rng.below(n);
    const std::size_t length = rng.between(1, params.max_length);
    std::size_t cur = start;
    for (std::size_t step = 1; step < length; ++step) {
      const std::size_t nxt = rng.below(n);
      add(cur, nxt);
      cur = nxt;
    }
    add(cur, start);
  }
  return Multidigraph(numbered_vertices(n), std::move(arcs));
}

Multidigraph corpus_balanced(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xB1A5ED0000000000ull);
  // Disconnected digraphs have no convergences at all, so only every fifth
  // seed may keep one; the others are redrawn until weakly connected.
  const bool any = seed % 5 == 0;
  Multidigraph d;
  for (int attempt = 0; attempt < 64; ++attempt) {
    BalancedParams p;
    p.vertices = rng.between(any ? 1 : 2, 6);
    p.max_length = rng.between(2, 5);
    p.circuits = rng.between(2, 8);
    p.seed = rng.next();
    for (;;) {
      d = random_balanced(p);
      if (d.num_arcs() <= 14) break;
      --p.circuits;
    }
    if (any || is_weakly_connected(d)) break;
  }
  return d;
}

Multidigraph corpus_unbalanced(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x0B1A5ED000000000ull);
  const std::size_t n = rng.between(2, 5);
  const std::size_t m = rng.between(1, 10);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m; ++i)
    arcs.push_back({"a" + std::to_string(i + 1), rng.below(n), rng.below(n)});
  Multidigraph d(numbered_vertices(n), arcs);
  if (is_balanced(d)) {
    // Any single extra non-loop arc breaks the balance.
    const std::size_t u = rng.below(n);
    arcs.push_back({"a" + std::to_string(m + 1), u, (u + 1) % n});
    d = Multidigraph(numbered_vertices(n), std::move(arcs));
  }
  return d;
}

UndirectedMultigraph corpus_undirected(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x00D1EC7ED0000000ull);
  UndirectedMultigraph g;
  g.vertices = numbered_vertices(rng.between(1, 5));
  const std::size_t n = g.vertices.size();
  const std::size_t m = rng.between(0, 7);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = rng.below(n);
    std::size_t v = rng.below(n);
    // Loops only rarely; they zero out every count on both sides.
    if (v == u && n > 1 && rng.below(20) != 0) v = (u + 1 + rng.below(n - 1)) % n;
    g.edges.push_back({"e" + std::to_string(i + 1), u, v});
  }
  return g;
}

}  // namespace balgamma
