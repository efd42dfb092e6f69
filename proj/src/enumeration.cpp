#include "balgamma/enumeration.hpp"

#include <algorithm>
#include <mutex>

#include "search.hpp"

namespace balgamma {

using detail::run_search;
using detail::SearchBounds;
using detail::SearchState;

bool GammaTable::column_uniform(std::size_t k) const {
  for (std::size_t s = 1; s < n_; ++s)
    if (at(s, k) != at(0, k)) return false;
  return true;
}

std::vector<bool> GammaTable::uniform_columns() const {
  std::vector<bool> out(max_k_ + 1);
  for (std::size_t k = 0; k <= max_k_; ++k) out[k] = column_uniform(k);
  return out;
}

bool GammaTable::all_uniform() const {
  for (std::size_t k = 0; k <= max_k_; ++k)
    if (!column_uniform(k)) return false;
  return true;
}

GammaTable& GammaTable::operator+=(const GammaTable& o) {
  if (o.n_ != n_ || o.max_k_ != max_k_) throw PreconditionError("gamma table shape mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] = checked_add(counts_[i], o.counts_[i]);
  return *this;
}

Count enumerate_acyclic(const Multidigraph& d, const std::function<void(const ArcSubset&)>& visit,
                        const EnumerationOptions& opts) {
  auto parts = run_search(
      d, SearchBounds{}, opts, [] { return Count{0}; },
      [&](Count& acc, const SearchState& st) {
        visit(st.chosen);
        ++acc;
      });
  Count total = 0;
  for (Count c : parts) total = checked_add(total, c);
  return total;
}

std::vector<ArcSubset> list_acyclic(const Multidigraph& d, std::size_t min_size, std::size_t max_size,
                                    const EnumerationOptions& opts) {
  auto parts = run_search(
      d, SearchBounds{min_size, max_size}, opts, [] { return std::vector<ArcSubset>{}; },
      [](std::vector<ArcSubset>& acc, const SearchState& st) { acc.push_back(st.chosen); });
  std::vector<ArcSubset> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

GammaTable gamma_table(const Multidigraph& d, const EnumerationOptions& opts) {
  const std::size_t n = d.num_vertices();
  const std::size_t m = d.num_arcs();
  // An acyclic set is an s-convergence exactly when s is its only sink.
  auto parts = run_search(
      d, SearchBounds{}, opts, [&] { return GammaTable(n, m); },
      [n](GammaTable& acc, const SearchState& st) {
        const VertexSet sk = st.sinks(n);
        if (sk.count() == 1) {
          Count& c = acc.at(sk.indices().front(), st.size);
          c = checked_add(c, 1);
        }
      });
  GammaTable table(n, m);
  for (const auto& p : parts) table += p;
  return table;
}

std::vector<ArcSubset> list_convergences(const Multidigraph& d, std::size_t s, std::size_t k,
                                         const EnumerationOptions& opts) {
  if (s >= d.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(s));
  if (k > d.num_arcs()) return {};
  const std::size_t n = d.num_vertices();
  const VertexSet want = VertexSet::single(s);
  auto parts = run_search(
      d, SearchBounds{k, k}, opts, [] { return std::vector<ArcSubset>{}; },
      [&](std::vector<ArcSubset>& acc, const SearchState& st) {
        if (st.sinks(n) == want) acc.push_back(st.chosen);
      });
  std::vector<ArcSubset> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// U_k classification
// ---------------------------------------------------------------------------

Count BasinClassification::total() const {
  Count c = 0;
  for (const auto& [key, cell] : cells) c = checked_add(c, cell.count);
  return c;
}

Count BasinClassification::count_s_basin(VertexSet p) const {
  Count c = 0;
  for (const auto& [key, cell] : cells)
    if (key.first == p) c = checked_add(c, cell.count);
  return c;
}

Count BasinClassification::count_t_basin(VertexSet q) const {
  Count c = 0;
  for (const auto& [key, cell] : cells)
    if (key.second == q) c = checked_add(c, cell.count);
  return c;
}

Count BasinClassification::count_x(VertexSet p) const {
  auto it = cells.find({p, p.complement(num_vertices)});
  return it == cells.end() ? 0 : it->second.count;
}

bool BasinClassification::members_complete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& kv) { return kv.second.members_complete; });
}

std::vector<ArcSubset> BasinClassification::members() const {
  if (!members_complete()) throw PreconditionError("U_k member lists were truncated by the cell cap");
  std::vector<ArcSubset> out;
  for (const auto& [key, cell] : cells) out.insert(out.end(), cell.members.begin(), cell.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void absorb(BasinCell& into, BasinCell&& from, std::size_t cap) {
  into.count = checked_add(into.count, from.count);
  if (!into.members_complete || !from.members_complete || into.members.size() + from.members.size() > cap) {
    into.members_complete = false;
    into.members.clear();
    into.members.shrink_to_fit();
    return;
  }
  into.members.insert(into.members.end(), from.members.begin(), from.members.end());
}

std::vector<BasinClassification> classify_range(const Multidigraph& d, std::size_t s, std::size_t t,
                                                std::size_t k_lo, std::size_t k_hi,
                                                const EnumerationOptions& opts, std::size_t cap) {
  const std::size_t n = d.num_vertices();
  if (s >= n || t >= n) throw PreconditionError("unknown vertex index");
  if (s == t) throw PreconditionError("classify_uk requires s != t");
  const VertexSet all = d.all_vertices();
  using Cells = std::map<std::pair<VertexSet, VertexSet>, BasinCell>;
  const std::size_t span = k_hi >= k_lo ? k_hi - k_lo + 1 : 0;

  auto parts = run_search(
      d, SearchBounds{k_lo, k_hi}, opts, [&] { return std::vector<Cells>(span); },
      [&](std::vector<Cells>& acc, const SearchState& st) {
        const VertexSet sb = st.basin_of(s, n);
        const VertexSet tb = st.basin_of(t, n);
        if ((sb | tb) != all) return;
        BasinCell& cell = acc[st.size - k_lo][{sb, tb}];
        ++cell.count;
        if (cell.members_complete) {
          if (cell.members.size() < cap) {
            cell.members.push_back(st.chosen);
          } else {
            cell.members_complete = false;
            cell.members.clear();
          }
        }
      });

  std::vector<BasinClassification> out(span);
  for (std::size_t i = 0; i < span; ++i) {
    out[i].s = s;
    out[i].t = t;
    out[i].k = k_lo + i;
    out[i].num_vertices = n;
  }
  for (auto& part : parts)
    for (std::size_t i = 0; i < span; ++i)
      for (auto& [key, cell] : part[i]) absorb(out[i].cells[key], std::move(cell), cap);
  for (auto& c : out)
    for (auto& [key, cell] : c.cells) std::sort(cell.members.begin(), cell.members.end());
  return out;
}

}  // namespace

BasinClassification classify_uk(const Multidigraph& d, std::size_t s, std::size_t t, std::size_t k,
                                 const EnumerationOptions& opts, std::size_t cell_cap) {
  if (k > d.num_arcs()) {
    if (s >= d.num_vertices() || t >= d.num_vertices()) throw PreconditionError("unknown vertex index");
    if (s == t) throw PreconditionError("classify_uk requires s != t");
    BasinClassification empty;
    empty.s = s;
    empty.t = t;
    empty.k = k;
    empty.num_vertices = d.num_vertices();
    return empty;
  }
  return classify_range(d, s, t, k, k, opts, cell_cap).front();
}

std::vector<BasinClassification> classify_all(const Multidigraph& d, std::size_t s, std::size_t t,
                                              const EnumerationOptions& opts, std::size_t cell_cap) {
  return classify_range(d, s, t, 0, d.num_arcs(), opts, cell_cap);
}

MaxAcyclic max_acyclic(const Multidigraph& d, const EnumerationOptions& opts) {
  auto parts = run_search(
      d, SearchBounds{}, opts, [] { return MaxAcyclic{}; },
      [](MaxAcyclic& acc, const SearchState& st) {
        if (st.size > acc.size || acc.count == 0) {
          acc = {st.size, 1};
        } else if (st.size == acc.size) {
          acc.count = checked_add(acc.count, 1);
        }
      });
  MaxAcyclic best;
  for (const auto& p : parts) {
    if (p.count == 0) continue;
    if (best.count == 0 || p.size > best.size) {
      best = p;
    } else if (p.size == best.size) {
      best.count = checked_add(best.count, p.count);
    }
  }
  return best;
}

std::size_t max_convergence_size(const Multidigraph& d, std::size_t s, const EnumerationOptions& opts) {
  if (s >= d.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(s));
  const GammaTable table = gamma_table(d, opts);
  for (std::size_t k = table.max_k() + 1; k-- > 0;)
    if (table.at(s, k) > 0) return k;
  throw PreconditionError("no " + d.vertex(s) + "-convergence exists");
}

}  // namespace balgamma
