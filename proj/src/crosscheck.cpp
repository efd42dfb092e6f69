#include "balgamma/crosscheck.hpp"

#include <sstream>
#include <unordered_map>

#include "balgamma/bareiss.hpp"
#include "line_reader.hpp"

namespace balgamma {

UndirectedMultigraph parse_undirected(std::string_view text) {
  UndirectedMultigraph g;
  std::unordered_map<std::string, std::size_t> ids;
  std::unordered_map<std::string, std::size_t> labels;
  detail::for_each_record(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line, "expected 'v <id>'");
      if (!ids.emplace(tok[1], g.vertices.size()).second)
        throw ParseError(line, "duplicate vertex id '" + tok[1] + "'");
      if (g.vertices.size() == kMaxVertices)
        throw ParseError(line, "more than " + std::to_string(kMaxVertices) + " vertices");
      g.vertices.push_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(line, "expected 'e <label> <u> <v>'");
      if (!labels.emplace(tok[1], g.edges.size()).second)
        throw ParseError(line, "duplicate edge label '" + tok[1] + "'");
      auto u = ids.find(tok[2]);
      if (u == ids.end()) throw ParseError(line, "undeclared vertex '" + tok[2] + "'");
      auto v = ids.find(tok[3]);
      if (v == ids.end()) throw ParseError(line, "undeclared vertex '" + tok[3] + "'");
      if (2 * (g.edges.size() + 1) > kMaxArcs)
        throw ParseError(line, "more than " + std::to_string(kMaxArcs / 2) + " edges");
      g.edges.push_back({tok[1], u->second, v->second});
    } else {
      throw ParseError(line, "unknown record type '" + tok[0] + "'");
    }
  });
  return g;
}

std::string format_undirected(const UndirectedMultigraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices) os << "v " << v << '\n';
  for (const auto& e : g.edges) os << "e " << e.label << ' ' << g.vertices[e.u] << ' ' << g.vertices[e.v] << '\n';
  return os.str();
}

Multidigraph bidirect(const UndirectedMultigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges.size());
  for (const auto& e : g.edges) {
    arcs.push_back({e.label + ">", e.u, e.v});
    arcs.push_back({e.label + "<", e.v, e.u});
  }
  return Multidigraph(g.vertices, std::move(arcs));
}

namespace {

// Three-colour DFS over an explicit adjacency list; kept separate from the
// digraph-core predicates so the orientation oracle stays independent.
bool has_cycle(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> colour(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root]) continue;
    stack.push_back({root, 0});
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (colour[w] == 1) return true;
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

Count count_unique_sink_orientations(const UndirectedMultigraph& g, std::size_t s) {
  const std::size_t n = g.vertices.size();
  const std::size_t m = g.edges.size();
  if (s >= n) throw PreconditionError("unknown vertex index " + std::to_string(s));
  if (m > kMaxOrientationEdges) throw BudgetExceeded("too many edges for orientation enumeration");
  Count total = 0;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (auto& row : adj) row.clear();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = g.edges[i];
      if ((mask >> i) & 1u)
        adj[e.v].push_back(e.u);
      else
        adj[e.u].push_back(e.v);
    }
    bool unique_sink = adj[s].empty();
    for (std::size_t v = 0; v < n && unique_sink; ++v)
      if (v != s && adj[v].empty()) unique_sink = false;
    if (unique_sink && !has_cycle(adj)) ++total;
  }
  return total;
}

Count matrix_tree_to_root(const Multidigraph& d, std::size_t s) {
  const std::size_t n = d.num_vertices();
  if (s >= n) throw PreconditionError("unknown vertex index " + std::to_string(s));
  auto minor_index = [s](std::size_t v) { return static_cast<Eigen::Index>(v < s ? v : v - 1); };
  DenseMatrix<std::int64_t> lap = DenseMatrix<std::int64_t>::Zero(static_cast<Eigen::Index>(n - 1),
                                                                   static_cast<Eigen::Index>(n - 1));
  for (const auto& a : d.arcs()) {
    if (a.source == a.target || a.source == s) continue;  // loops cancel; row s is deleted
    lap(minor_index(a.source), minor_index(a.source)) += 1;
    if (a.target != s) lap(minor_index(a.source), minor_index(a.target)) -= 1;
  }
  const std::int64_t det = bareiss_determinant(std::move(lap));
  if (det < 0) throw InvariantViolation("negative arborescence count");
  return static_cast<Count>(det);
}

Count naive_gamma(const Multidigraph& d, std::size_t s, std::size_t k) {
  if (s >= d.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(s));
  const std::size_t m = d.num_arcs();
  if (m > kMaxNaiveArcs) throw BudgetExceeded("naive enumeration is limited to " + std::to_string(kMaxNaiveArcs) + " arcs");
  if (k > m) return 0;
  const VertexSet all = d.all_vertices();
  Count total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    const ArcSubset b(mask, 0);
    if (is_acyclic(d, b) && basin(d, b, s) == all) ++total;
  }
  return total;
}

GammaTable naive_gamma_table(const Multidigraph& d) {
  const std::size_t n = d.num_vertices();
  const std::size_t m = d.num_arcs();
  if (m > kMaxNaiveArcs) throw BudgetExceeded("naive enumeration is limited to " + std::to_string(kMaxNaiveArcs) + " arcs");
  const VertexSet all = d.all_vertices();
  GammaTable table(n, m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const ArcSubset b(mask, 0);
    if (!is_acyclic(d, b)) continue;
    for (std::size_t s = 0; s < n; ++s)
      if (basin(d, b, s) == all) ++table.at(s, b.count());
  }
  return table;
}

}  // namespace balgamma
