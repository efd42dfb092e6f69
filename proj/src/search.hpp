#ifndef BALGAMMA_SRC_SEARCH_HPP
#define BALGAMMA_SRC_SEARCH_HPP

// Backtracking engine over acyclic arc subsets.
//
// Each search state carries the reflexive-transitive closure of the chosen arcs
// as one reachability word per vertex, so the cycle test for a new arc u->v is a
// single bit lookup (does v already reach u?) and basins fall out of the closure.

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "balgamma/digraph.hpp"
#include "balgamma/enumeration.hpp"

namespace balgamma::detail {

struct SearchState {
  ArcSubset chosen;
  std::size_t size = 0;
  VertexSet has_out;
  std::array<std::uint64_t, kMaxVertices> reach{};  // reach[x]: vertices x can reach, x included

  VertexSet sinks(std::size_t n) const { return has_out.complement(n); }

  /// Vertices that can reach `target` through chosen arcs.
  VertexSet basin_of(std::size_t target, std::size_t n) const {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < n; ++x) out |= ((reach[x] >> target) & 1u) << x;
    return VertexSet(out);
  }
};

struct SearchBounds {
  std::size_t min_size = 0;
  std::size_t max_size = kMaxArcs;
};

// Upper bound on leaves: subsets of non-loop arcs with admissible size.
inline long double leaf_estimate(const Multidigraph& d, const SearchBounds& bounds) {
  std::size_t m = 0;
  for (const auto& a : d.arcs()) m += a.source != a.target;
  long double total = 0, c = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k >= bounds.min_size && k <= bounds.max_size) total += c;
    c = c * static_cast<long double>(m - k) / static_cast<long double>(k + 1);
  }
  return total;
}

template <class Acc, class MakeAcc, class Leaf>
class Search {
 public:
  Search(const Multidigraph& d, SearchBounds bounds, const EnumerationOptions& opts, MakeAcc make, Leaf leaf)
      : d_(d), bounds_(bounds), opts_(opts), make_(make), leaf_(leaf), n_(d.num_vertices()), m_(d.num_arcs()) {}

  // One accumulator per search-tree prefix, in depth-first prefix order.
  std::vector<Acc> run() {
    if (leaf_estimate(d_, bounds_) > static_cast<long double>(opts_.node_budget))
      throw BudgetExceeded("enumeration of " + std::to_string(m_) + " arcs exceeds the node budget of " +
                           std::to_string(opts_.node_budget));
    std::vector<Acc> results;
    if (bounds_.min_size > m_ || bounds_.min_size > bounds_.max_size) return results;

    SearchState root;
    for (std::size_t x = 0; x < n_; ++x) root.reach[x] = std::uint64_t{1} << x;

    const std::size_t depth = std::min(opts_.prefix_depth, m_);
    std::vector<SearchState> prefixes;
    collect_prefixes(0, depth, root, prefixes);
    results.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) results.push_back(make_());

    const std::size_t workers = std::max<std::size_t>(1, std::min(opts_.workers, prefixes.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      std::vector<SearchState> stack(m_ + 1);
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
          if (abort_.load(std::memory_order_relaxed)) return;
          std::uint64_t local = 0;
          stack[depth] = prefixes[i];
          descend(depth, stack, results[i], local);
          charge(local);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        abort_ = true;
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
  }

 private:
  bool prune(std::size_t i, const SearchState& st) const {
    return st.size > bounds_.max_size || st.size + (m_ - i) < bounds_.min_size;
  }

  bool try_add(std::size_t i, const SearchState& from, SearchState& to) const {
    const Arc& a = d_.arc(i);
    if ((from.reach[a.target] >> a.source) & 1u) return false;  // would close a cycle (or a loop)
    to = from;
    const std::uint64_t gained = from.reach[a.target];
    for (std::size_t x = 0; x < n_; ++x)
      if ((from.reach[x] >> a.source) & 1u) to.reach[x] |= gained;
    to.chosen.set(i);
    to.has_out.set(a.source);
    ++to.size;
    return true;
  }

  void collect_prefixes(std::size_t i, std::size_t depth, const SearchState& st, std::vector<SearchState>& out) {
    ++prefix_nodes_;
    if (prune(i, st)) return;
    if (i == depth) {
      out.push_back(st);
      return;
    }
    collect_prefixes(i + 1, depth, st, out);
    if (st.size < bounds_.max_size) {
      SearchState next;
      if (try_add(i, st, next)) collect_prefixes(i + 1, depth, next, out);
    }
  }

  void descend(std::size_t i, std::vector<SearchState>& stack, Acc& acc, std::uint64_t& local) {
    if (++local == kChargeInterval) {
      charge(local);
      local = 0;
    }
    const SearchState& st = stack[i];
    if (prune(i, st)) return;
    if (i == m_) {
      leaf_(acc, st);
      return;
    }
    // Exclude arc i; the state at depth i+1 is then identical.
    stack[i + 1] = st;
    descend(i + 1, stack, acc, local);
    if (stack[i].size < bounds_.max_size && try_add(i, stack[i], stack[i + 1])) descend(i + 1, stack, acc, local);
  }

  void charge(std::uint64_t n) {
    const std::uint64_t total = visited_.fetch_add(n, std::memory_order_relaxed) + n + prefix_nodes_;
    if (total > opts_.node_budget)
      throw BudgetExceeded("enumeration exceeded the node budget of " + std::to_string(opts_.node_budget));
    if (abort_.load(std::memory_order_relaxed)) throw BudgetExceeded("search aborted");
  }

  static constexpr std::uint64_t kChargeInterval = 1 << 14;

  const Multidigraph& d_;
  SearchBounds bounds_;
  const EnumerationOptions& opts_;
  MakeAcc make_;
  Leaf leaf_;
  std::size_t n_;
  std::size_t m_;
  std::uint64_t prefix_nodes_ = 0;
  std::atomic<std::uint64_t> visited_{0};
  std::atomic<bool> abort_{false};
};

template <class MakeAcc, class Leaf>
auto run_search(const Multidigraph& d, SearchBounds bounds, const EnumerationOptions& opts, MakeAcc make, Leaf leaf) {
  using Acc = decltype(make());
  return Search<Acc, MakeAcc, Leaf>(d, bounds, opts, make, leaf).run();
}

}  // namespace balgamma::detail

#endif  // BALGAMMA_SRC_SEARCH_HPP
