#ifndef BALGAMMA_ENUMERATION_HPP
#define BALGAMMA_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "balgamma/digraph.hpp"
#include "balgamma/types.hpp"

namespace balgamma {

struct EnumerationOptions {
  /// Threads used for the search. Results never depend on this value.
  std::size_t workers = 1;
  /// Upper limit on visited search-tree nodes.
  std::uint64_t node_budget = std::uint64_t{1} << 34;
  /// The search tree is cut at this depth into independent subtrees.
  std::size_t prefix_depth = 8;
};

/// gamma_k(s) for every vertex s and every size k in 0..|A|.
class GammaTable {
 public:
  GammaTable() = default;
  GammaTable(std::size_t num_vertices, std::size_t max_k)
      : n_(num_vertices), max_k_(max_k), counts_(num_vertices * (max_k + 1), 0) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t max_k() const { return max_k_; }

  Count at(std::size_t s, std::size_t k) const { return k > max_k_ ? 0 : counts_[s * (max_k_ + 1) + k]; }
  Count& at(std::size_t s, std::size_t k) { return counts_[s * (max_k_ + 1) + k]; }

  /// True iff column k is constant across vertices.
  bool column_uniform(std::size_t k) const;
  std::vector<bool> uniform_columns() const;
  bool all_uniform() const;

  GammaTable& operator+=(const GammaTable& o);
  friend bool operator==(const GammaTable&, const GammaTable&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t max_k_ = 0;
  std::vector<Count> counts_;
};

/// Visits every acyclic subset of A exactly once and returns how many there are.
///
/// Backtracks over arcs in index order; a branch is abandoned as soon as the
/// chosen arcs contain a cycle, since supersets of a cyclic set stay cyclic.
/// With workers > 1 the callback runs concurrently from several threads.
Count enumerate_acyclic(const Multidigraph& d, const std::function<void(const ArcSubset&)>& visit,
                        const EnumerationOptions& opts = {});

/// All acyclic subsets with size in [min_size, max_size], in lexicographic order.
std::vector<ArcSubset> list_acyclic(const Multidigraph& d, std::size_t min_size, std::size_t max_size,
                                    const EnumerationOptions& opts = {});

GammaTable gamma_table(const Multidigraph& d, const EnumerationOptions& opts = {});

/// The s-convergences of size k, in lexicographic order of arc indices.
std::vector<ArcSubset> list_convergences(const Multidigraph& d, std::size_t s, std::size_t k,
                                         const EnumerationOptions& opts = {});

struct BasinCell {
  Count count = 0;
  std::vector<ArcSubset> members;
  /// False when the cell outgrew the member cap and only its count was kept.
  bool members_complete = true;
};

/// The family U_k (acyclic k-subsets where every vertex reaches s or t)
/// bucketed by the pair (basin of s, basin of t).
///
/// The cell keyed (P, V\P) is X_k^{P,V\P}.
struct BasinClassification {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t num_vertices = 0;
  std::map<std::pair<VertexSet, VertexSet>, BasinCell> cells;

  /// |U_k|
  Count total() const;
  /// |{B in U_k : basin(B,s) = p}|
  Count count_s_basin(VertexSet p) const;
  /// |{B in U_k : basin(B,t) = q}|
  Count count_t_basin(VertexSet q) const;
  /// |X_k^{P,Q}| with Q = V \ P.
  Count count_x(VertexSet p) const;
  bool members_complete() const;
  /// Every member of U_k, sorted. Throws PreconditionError if some cell was truncated.
  std::vector<ArcSubset> members() const;
};

inline constexpr std::size_t kDefaultCellCap = 1'000'000;

BasinClassification classify_uk(const Multidigraph& d, std::size_t s, std::size_t t, std::size_t k,
                                 const EnumerationOptions& opts = {}, std::size_t cell_cap = kDefaultCellCap);

/// classify_uk for every k in 0..|A| from a single search.
std::vector<BasinClassification> classify_all(const Multidigraph& d, std::size_t s, std::size_t t,
                                              const EnumerationOptions& opts = {},
                                              std::size_t cell_cap = kDefaultCellCap);

struct MaxAcyclic {
  std::size_t size = 0;
  Count count = 0;
  friend bool operator==(const MaxAcyclic&, const MaxAcyclic&) = default;
};

/// Largest acyclic subset size and how many subsets attain it. Their
/// complements are the minimum feedback arc sets.
MaxAcyclic max_acyclic(const Multidigraph& d, const EnumerationOptions& opts = {});

/// Largest k with gamma_k(s) > 0. Throws PreconditionError when no s-convergence exists.
std::size_t max_convergence_size(const Multidigraph& d, std::size_t s, const EnumerationOptions& opts = {});

}  // namespace balgamma

#endif  // BALGAMMA_ENUMERATION_HPP
