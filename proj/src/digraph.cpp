#include "balgamma/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "line_reader.hpp"

namespace balgamma {

Multidigraph::Multidigraph(std::vector<std::string> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  if (vertices_.size() > kMaxVertices)
    throw PreconditionError("too many vertices: " + std::to_string(vertices_.size()) + " > " +
                            std::to_string(kMaxVertices));
  if (arcs_.size() > kMaxArcs)
    throw PreconditionError("too many arcs: " + std::to_string(arcs_.size()) + " > " +
                            std::to_string(kMaxArcs));
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw PreconditionError("duplicate vertex id '" + vertices_[v] + "'");
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (!arc_index_.emplace(a.label, i).second)
      throw PreconditionError("duplicate arc label '" + a.label + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw PreconditionError("arc '" + a.label + "' has an endpoint out of range");
    out_[a.source].push_back(i);
    in_[a.target].push_back(i);
  }
}

std::optional<std::size_t> Multidigraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Multidigraph::find_arc(std::string_view label) const {
  auto it = arc_index_.find(std::string(label));
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Multidigraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(id) + "'");
}

ArcSubset Multidigraph::subset(std::initializer_list<std::string_view> labels) const {
  ArcSubset s;
  for (auto l : labels) {
    auto a = find_arc(l);
    if (!a) throw PreconditionError("unknown arc '" + std::string(l) + "'");
    s.set(*a);
  }
  return s;
}

bool operator==(const Multidigraph& a, const Multidigraph& b) {
  return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
}

Multidigraph parse_digraph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Arc> arcs;
  std::unordered_map<std::string, std::size_t> ids;
  std::unordered_map<std::string, std::size_t> labels;

  detail::for_each_record(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line, "expected 'v <id>'");
      if (!ids.emplace(tok[1], vertices.size()).second)
        throw ParseError(line, "duplicate vertex id '" + tok[1] + "'");
      if (vertices.size() == kMaxVertices)
        throw ParseError(line, "more than " + std::to_string(kMaxVertices) + " vertices");
      vertices.push_back(tok[1]);
    } else if (tok[0] == "a") {
      if (tok.size() != 4) throw ParseError(line, "expected 'a <label> <source> <target>'");
      if (!labels.emplace(tok[1], arcs.size()).second)
        throw ParseError(line, "duplicate arc label '" + tok[1] + "'");
      auto src = ids.find(tok[2]);
      if (src == ids.end()) throw ParseError(line, "undeclared vertex '" + tok[2] + "'");
      auto tgt = ids.find(tok[3]);
      if (tgt == ids.end()) throw ParseError(line, "undeclared vertex '" + tok[3] + "'");
      if (arcs.size() == kMaxArcs)
        throw ParseError(line, "more than " + std::to_string(kMaxArcs) + " arcs");
      arcs.push_back({tok[1], src->second, tgt->second});
    } else {
      throw ParseError(line, "unknown record type '" + tok[0] + "'");
    }
  });
  return Multidigraph(std::move(vertices), std::move(arcs));
}

std::string format_digraph(const Multidigraph& d) {
  std::ostringstream os;
  for (const auto& v : d.vertices()) os << "v " << v << '\n';
  for (const auto& a : d.arcs())
    os << "a " << a.label << ' ' << d.vertex(a.source) << ' ' << d.vertex(a.target) << '\n';
  return os.str();
}

std::vector<Degree> degrees(const Multidigraph& d) {
  std::vector<Degree> deg(d.num_vertices());
  for (const auto& a : d.arcs()) {
    ++deg[a.source].out;
    ++deg[a.target].in;
  }
  return deg;
}

bool is_balanced(const Multidigraph& d) {
  const auto deg = degrees(d);
  return std::all_of(deg.begin(), deg.end(), [](const Degree& x) { return x.out == x.in; });
}

bool is_weakly_connected(const Multidigraph& d) {
  const std::size_t n = d.num_vertices();
  if (n == 0) return true;
  VertexSet seen = VertexSet::single(0);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    };
    for (auto i : d.out_arcs(v)) visit(d.arc(i).target);
    for (auto i : d.in_arcs(v)) visit(d.arc(i).source);
  }
  return seen == d.all_vertices();
}

VertexSet basin(const Multidigraph& d, const ArcSubset& b, std::size_t target) {
  VertexSet reached = VertexSet::single(target);
  std::size_t queue[kMaxVertices];
  std::size_t head = 0, tail = 0;
  queue[tail++] = target;
  while (head < tail) {
    const std::size_t w = queue[head++];
    for (auto i : d.in_arcs(w)) {
      if (!b.test(i)) continue;
      const std::size_t u = d.arc(i).source;
      if (!reached.test(u)) {
        reached.set(u);
        queue[tail++] = u;
      }
    }
  }
  return reached;
}

bool is_acyclic(const Multidigraph& d, const ArcSubset& b) {
  // Kahn elimination: repeatedly delete vertices with no remaining in-arcs.
  const std::size_t n = d.num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  b.for_each([&](std::size_t i) { ++indeg[d.arc(i).target]; });
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (auto i : d.out_arcs(v))
      if (b.test(i) && --indeg[d.arc(i).target] == 0) ready.push_back(d.arc(i).target);
  }
  return removed == n;
}

VertexSet sinks(const Multidigraph& d, const ArcSubset& b) {
  VertexSet has_out;
  b.for_each([&](std::size_t i) { has_out.set(d.arc(i).source); });
  return has_out.complement(d.num_vertices());
}

bool is_convergence(const Multidigraph& d, const ArcSubset& b, std::size_t s) {
  return is_acyclic(d, b) && basin(d, b, s) == d.all_vertices();
}

bool is_convergence_by_sink(const Multidigraph& d, const ArcSubset& b, std::size_t s) {
  return is_acyclic(d, b) && sinks(d, b) == VertexSet::single(s);
}

Partition partition(const Multidigraph& d, VertexSet p) {
  Partition part;
  part.p = p & d.all_vertices();
  part.q = part.p.complement(d.num_vertices());
  for (std::size_t i = 0; i < d.num_arcs(); ++i) {
    const bool src_p = part.p.test(d.arc(i).source);
    const bool tgt_p = part.p.test(d.arc(i).target);
    if (src_p && !tgt_p) part.a_pq.set(i);
    if (!src_p && tgt_p) part.a_qp.set(i);
  }
  return part;
}

std::vector<std::string> subset_labels(const Multidigraph& d, const ArcSubset& b) {
  std::vector<std::string> out;
  b.for_each([&](std::size_t i) { out.push_back(d.arc(i).label); });
  return out;
}

std::vector<std::string> vertex_ids(const Multidigraph& d, VertexSet s) {
  std::vector<std::string> out;
  for (auto v : s.indices()) out.push_back(d.vertex(v));
  return out;
}

namespace {
std::string braced(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ',';
    s += items[i];
  }
  return s + "}";
}
}  // namespace

std::string format_subset(const Multidigraph& d, const ArcSubset& b) { return braced(subset_labels(d, b)); }
std::string format_vertices(const Multidigraph& d, VertexSet s) { return braced(vertex_ids(d, s)); }

}  // namespace balgamma
