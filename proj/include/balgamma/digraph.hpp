#ifndef BALGAMMA_DIGRAPH_HPP
#define BALGAMMA_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "balgamma/types.hpp"

namespace balgamma {

struct Arc {
  std::string label;
  std::size_t source;
  std::size_t target;
};

struct Degree {
  std::size_t out = 0;
  std::size_t in = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

/// A directed multigraph D = (V, A, psi). Loops and parallel arcs are allowed.
///
/// Vertices and arcs are indexed by declaration position; enumeration order and
/// the canonical circuit decomposition both depend on that order. Immutable once
/// built, so a single instance can be shared between worker threads.
class Multidigraph {
 public:
  Multidigraph() = default;

  /// Builds a digraph, validating ids, labels and endpoints.
  /// Throws PreconditionError on duplicates, bad endpoints or size limits.
  Multidigraph(std::vector<std::string> vertices, std::vector<Arc> arcs);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }
  const std::string& vertex(std::size_t v) const { return vertices_[v]; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_arc(std::string_view label) const;
  /// Like find_vertex but throws PreconditionError for unknown ids.
  std::size_t vertex_index(std::string_view id) const;
  /// Builds an ArcSubset from labels; throws PreconditionError for unknown labels.
  ArcSubset subset(std::initializer_list<std::string_view> labels) const;

  /// Arc indices leaving / entering v, ascending.
  std::span<const std::size_t> out_arcs(std::size_t v) const { return out_[v]; }
  std::span<const std::size_t> in_arcs(std::size_t v) const { return in_[v]; }

  VertexSet all_vertices() const { return VertexSet::all(num_vertices()); }
  ArcSubset all_arcs() const { return ArcSubset::all(num_arcs()); }

  friend bool operator==(const Multidigraph& a, const Multidigraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arc_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

inline bool operator==(const Arc& a, const Arc& b) {
  return a.label == b.label && a.source == b.source && a.target == b.target;
}

/// Parses the line-oriented digraph format:
///   # comment
///   v <id>
///   a <label> <source-id> <target-id>
/// Vertices must be declared before any arc references them.
Multidigraph parse_digraph(std::string_view text);

/// Inverse of parse_digraph.
std::string format_digraph(const Multidigraph& d);

std::vector<Degree> degrees(const Multidigraph& d);
bool is_balanced(const Multidigraph& d);
bool is_weakly_connected(const Multidigraph& d);

/// Vertices that can reach `target` using only arcs of b (always contains target).
VertexSet basin(const Multidigraph& d, const ArcSubset& b, std::size_t target);

/// True iff D<b> has no directed cycle. A loop counts as a cycle.
bool is_acyclic(const Multidigraph& d, const ArcSubset& b);

/// Vertices with no outgoing arc in b.
VertexSet sinks(const Multidigraph& d, const ArcSubset& b);

/// b is acyclic and every vertex can b-reach s.
bool is_convergence(const Multidigraph& d, const ArcSubset& b, std::size_t s);

/// Same predicate decided by the unique-sink test: b is acyclic and sinks(b) = {s}.
bool is_convergence_by_sink(const Multidigraph& d, const ArcSubset& b, std::size_t s);

/// An ordered bipartition V = P ⊔ Q with its crossing arc sets.
struct Partition {
  VertexSet p;
  VertexSet q;
  ArcSubset a_pq;  // source in P, target in Q
  ArcSubset a_qp;  // source in Q, target in P
  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition(const Multidigraph& d, VertexSet p);

/// Renders a subset as "{a,b,c}" using arc labels.
std::string format_subset(const Multidigraph& d, const ArcSubset& b);
std::string format_vertices(const Multidigraph& d, VertexSet s);
std::vector<std::string> subset_labels(const Multidigraph& d, const ArcSubset& b);
std::vector<std::string> vertex_ids(const Multidigraph& d, VertexSet s);

}  // namespace balgamma

#endif  // BALGAMMA_DIGRAPH_HPP
