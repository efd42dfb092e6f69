#ifndef BALGAMMA_CROSSCHECK_HPP
#define BALGAMMA_CROSSCHECK_HPP

// Independent oracles for the special cases k = |V|-1 (arborescences),
// bidirected graphs at k = |E| (unique-sink acyclic orientations), and a
// naive power-set enumerator for every (s, k).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "balgamma/digraph.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/types.hpp"

namespace balgamma {

struct Edge {
  std::string label;
  std::size_t u;
  std::size_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct UndirectedMultigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  friend bool operator==(const UndirectedMultigraph&, const UndirectedMultigraph&) = default;
};

/// Same line discipline as parse_digraph, with `e <label> <u> <v>` edge records.
UndirectedMultigraph parse_undirected(std::string_view text);
std::string format_undirected(const UndirectedMultigraph& g);

/// Replaces each edge e = {u,v} by arcs `e>` (u to v) and `e<` (v to u).
Multidigraph bidirect(const UndirectedMultigraph& g);

inline constexpr std::size_t kMaxOrientationEdges = 30;

/// Brute force over all 2^|E| orientations: acyclic ones whose only sink is s.
Count count_unique_sink_orientations(const UndirectedMultigraph& g, std::size_t s);

/// Number of spanning arborescences converging to s: the determinant of the
/// out-degree Laplacian with row and column s removed.
Count matrix_tree_to_root(const Multidigraph& d, std::size_t s);

inline constexpr std::size_t kMaxNaiveArcs = 20;

/// Number of s-convergences of size k found by testing every subset of A.
Count naive_gamma(const Multidigraph& d, std::size_t s, std::size_t k);

/// naive_gamma for every (s, k) in one pass over the power set.
GammaTable naive_gamma_table(const Multidigraph& d);

}  // namespace balgamma

#endif  // BALGAMMA_CROSSCHECK_HPP
