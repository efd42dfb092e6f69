#ifndef BALGAMMA_RANDOM_HPP
#define BALGAMMA_RANDOM_HPP

#include <cstddef>
#include <cstdint>

#include "balgamma/crosscheck.hpp"
#include "balgamma/digraph.hpp"

namespace balgamma {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state, fully specified, so a
/// seed reproduces the same stream on every platform and in every language:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection, bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

struct BalancedParams {
  std::size_t vertices = 4;
  std::size_t circuits = 3;
  std::size_t max_length = 4;
  std::uint64_t seed = 0;
};

/// Superposes `circuits` random closed walks on vertices "1".."n". Each walk
/// has a uniform length in [1, max_length]: length-1 random steps from a random
/// start, then one arc back to the start. Arcs are labelled "a1", "a2", ...
/// Balanced by construction. Throws PreconditionError for n = 0 or max_length = 0.
Multidigraph random_balanced(const BalancedParams& params);

/// A small balanced digraph for property suites: n <= 6 and at most 14 arcs.
Multidigraph corpus_balanced(std::uint64_t seed);

/// A small digraph with at least one vertex where outdegree != indegree.
Multidigraph corpus_unbalanced(std::uint64_t seed);

/// Random undirected multigraph, at most 5 vertices and 7 edges (parallel edges allowed).
UndirectedMultigraph corpus_undirected(std::uint64_t seed);

}  // namespace balgamma

#endif  // BALGAMMA_RANDOM_HPP
