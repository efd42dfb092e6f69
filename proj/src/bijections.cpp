#include "balgamma/bijections.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace balgamma {

CircuitDecomposition circuit_decomposition(const Multidigraph& d) {
  if (!is_balanced(d)) throw PreconditionError("circuit decomposition requires a balanced digraph");
  const std::size_t n = d.num_vertices();
  const std::size_t m = d.num_arcs();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  CircuitDecomposition dec;
  dec.position.assign(m, {kNone, kNone});
  std::vector<bool> used(m, false);
  std::size_t remaining = m;
  std::size_t lowest_unused = 0;

  auto next_out = [&](std::size_t v) -> std::size_t {
    for (auto i : d.out_arcs(v))
      if (!used[i]) return i;
    return kNone;
  };

  std::vector<std::size_t> walk;
  std::vector<std::size_t> first_exit(n, kNone);  // index in `walk` of the arc leaving a vertex
  while (remaining > 0) {
    while (used[lowest_unused]) ++lowest_unused;
    walk.clear();
    std::fill(first_exit.begin(), first_exit.end(), kNone);

    std::size_t arc = lowest_unused;
    first_exit[d.arc(arc).source] = 0;
    for (;;) {
      used[arc] = true;
      walk.push_back(arc);
      const std::size_t v = d.arc(arc).target;
      if (first_exit[v] != kNone) {
        // Lasso: keep the cycle through v, give the tail back.
        const std::size_t from = first_exit[v];
        for (std::size_t j = 0; j < from; ++j) used[walk[j]] = false;
        std::vector<std::size_t> circuit(walk.begin() + static_cast<std::ptrdiff_t>(from), walk.end());
        for (std::size_t j = 0; j < circuit.size(); ++j) dec.position[circuit[j]] = {dec.circuits.size(), j};
        remaining -= circuit.size();
        dec.circuits.push_back(std::move(circuit));
        break;
      }
      first_exit[v] = walk.size();
      arc = next_out(v);
      if (arc == kNone) throw InvariantViolation("circuit walk got stuck at vertex " + d.vertex(v));
    }
  }
  return dec;
}

std::string validate_decomposition(const Multidigraph& d, const CircuitDecomposition& dec) {
  const std::size_t m = d.num_arcs();
  if (dec.position.size() != m) return "position index has wrong size";
  std::vector<int> seen(m, 0);
  for (std::size_t c = 0; c < dec.circuits.size(); ++c) {
    const auto& circ = dec.circuits[c];
    if (circ.empty()) return "circuit " + std::to_string(c) + " is empty";
    for (std::size_t j = 0; j < circ.size(); ++j) {
      const std::size_t a = circ[j];
      if (a >= m) return "arc index out of range";
      if (seen[a]++) return "arc " + d.arc(a).label + " appears twice";
      if (dec.position[a] != std::pair{c, j}) return "position index disagrees for arc " + d.arc(a).label;
      const std::size_t nxt = circ[(j + 1) % circ.size()];
      if (d.arc(a).target != d.arc(nxt).source)
        return "circuit " + std::to_string(c) + " is not closed at arc " + d.arc(a).label;
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    if (!seen[a]) return "arc " + d.arc(a).label + " is not covered";
  return {};
}

ArcSubset CrossingBijection::image(const ArcSubset& c) const {
  ArcSubset out;
  c.for_each([&](std::size_t a) {
    auto it = forward.find(a);
    if (it == forward.end()) throw PreconditionError("arc outside A(P,Q) passed to beta");
    out.set(it->second);
  });
  return out;
}

ArcSubset CrossingBijection::preimage(const ArcSubset& c) const {
  ArcSubset out;
  c.for_each([&](std::size_t a) {
    auto it = backward.find(a);
    if (it == backward.end()) throw PreconditionError("arc outside A(Q,P) passed to beta^-1");
    out.set(it->second);
  });
  return out;
}

CrossingBijection crossing_bijection(const Multidigraph& d, const CircuitDecomposition& dec, const Partition& part) {
  if (dec.position.size() != d.num_arcs()) throw PreconditionError("decomposition does not belong to this digraph");
  CrossingBijection beta;
  beta.partition = part;
  for (const auto& circ : dec.circuits) {
    // Crossing arcs of this circuit in cyclic order.
    std::vector<std::size_t> crossing;
    for (auto a : circ)
      if (part.a_pq.test(a) || part.a_qp.test(a)) crossing.push_back(a);
    const std::size_t len = crossing.size();
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t a = crossing[j];
      const std::size_t b = crossing[(j + 1) % len];
      if (part.a_pq.test(a) == part.a_pq.test(b))
        throw PreconditionError("crossing arcs do not alternate on the circuit through " + d.arc(a).label);
      if (part.a_pq.test(a)) {
        beta.forward.emplace(a, b);
        beta.backward.emplace(b, a);
      }
    }
  }
  if (beta.forward.size() != part.a_pq.count() || beta.backward.size() != part.a_qp.count())
    throw PreconditionError("decomposition does not cover the crossing arcs");
  return beta;
}

// ---------------------------------------------------------------------------
// strip / refill
// ---------------------------------------------------------------------------

namespace {

bool in_u(const Multidigraph& d, const ArcSubset& b, Terminals st) {
  return (basin(d, b, st.s) | basin(d, b, st.t)) == d.all_vertices();
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

void ensure(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

// e in X^{P,Q}: acyclic with basins exactly P (of s) and Q (of t).
bool in_x(const Multidigraph& d, const ArcSubset& e, const Partition& part, Terminals st) {
  return is_acyclic(d, e) && basin(d, e, st.s) == part.p && basin(d, e, st.t) == part.q;
}

}  // namespace

Stripped strip(const Multidigraph& d, const ArcSubset& b, const Partition& part, Terminals st) {
  require(is_acyclic(d, b), "strip: input is not acyclic");
  require(in_u(d, b, st), "strip: some vertex reaches neither s nor t");
  require(basin(d, b, st.s) == part.p, "strip: basin of s differs from P");
  Stripped out{b - part.a_pq, b & part.a_pq};
  ensure(in_x(d, out.e, part, st), "strip: remainder is not in X^{P,Q}");
  ensure(out.e.count() + out.c.count() == b.count(), "strip: sizes do not add up");
  return out;
}

ArcSubset refill(const Multidigraph& d, const ArcSubset& e, const ArcSubset& c, const Partition& part, Terminals st) {
  require(c.subset_of(part.a_pq), "refill: C is not contained in A(P,Q)");
  require(in_x(d, e, part, st), "refill: E is not in X^{P,Q}");
  ensure((e & c).empty(), "refill: E and C intersect");
  const ArcSubset r = e | c;
  ensure(is_acyclic(d, r), "refill: result has a cycle");
  ensure(basin(d, r, st.s) == part.p, "refill: basin of s changed");
  ensure(in_u(d, r, st), "refill: result is not in U");
  ensure((r & part.a_pq) == c, "refill: result meets A(P,Q) outside C");
  return r;
}

// The t-side transcriptions below exchange s/t, P/Q and A(P,Q)/A(Q,P).

Stripped strip_t(const Multidigraph& d, const ArcSubset& b, const Partition& part, Terminals st) {
  require(is_acyclic(d, b), "strip_t: input is not acyclic");
  require(in_u(d, b, st), "strip_t: some vertex reaches neither s nor t");
  require(basin(d, b, st.t) == part.q, "strip_t: basin of t differs from Q");
  Stripped out{b - part.a_qp, b & part.a_qp};
  ensure(in_x(d, out.e, part, st), "strip_t: remainder is not in X^{P,Q}");
  return out;
}

ArcSubset refill_t(const Multidigraph& d, const ArcSubset& e, const ArcSubset& c, const Partition& part,
                   Terminals st) {
  require(c.subset_of(part.a_qp), "refill_t: C is not contained in A(Q,P)");
  require(in_x(d, e, part, st), "refill_t: E is not in X^{P,Q}");
  ensure((e & c).empty(), "refill_t: E and C intersect");
  const ArcSubset r = e | c;
  ensure(is_acyclic(d, r), "refill_t: result has a cycle");
  ensure(basin(d, r, st.t) == part.q, "refill_t: basin of t changed");
  ensure(in_u(d, r, st), "refill_t: result is not in U");
  ensure((r & part.a_qp) == c, "refill_t: result meets A(Q,P) outside C");
  return r;
}

// ---------------------------------------------------------------------------
// phi, phi^{-1}, psi
// ---------------------------------------------------------------------------

ArcSubset phi(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b, Terminals st) {
  const VertexSet p = basin(d, b, st.s);
  require(p != d.all_vertices(), "phi: input is an s-convergence");
  const Partition part = partition(d, p);
  const CrossingBijection beta = crossing_bijection(d, dec, part);
  const Stripped parts = strip(d, b, part, st);
  return refill_t(d, parts.e, beta.image(parts.c), part, st);
}

namespace {

InvolutionStep inverse_step(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b,
                            Terminals st) {
  const VertexSet q = basin(d, b, st.t);
  require(q != d.all_vertices(), "phi_inverse: input is a t-convergence");
  const Partition part = partition(d, q.complement(d.num_vertices()));
  const CrossingBijection beta = crossing_bijection(d, dec, part);
  const Stripped parts = strip_t(d, b, part, st);
  const ArcSubset inserted = beta.preimage(parts.c);
  return {refill(d, parts.e, inserted, part, st), part, parts.c, inserted};
}

}  // namespace

ArcSubset phi_inverse(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b, Terminals st) {
  return inverse_step(d, dec, b, st).subset;
}

std::pair<ArcSubset, InvolutionTrace> psi(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b,
                                          Terminals st) {
  require(is_convergence(d, b, st.s), "psi: input is not an s-convergence");
  InvolutionTrace trace{b, {}, b};
  if (st.s == st.t) return {b, trace};
  ArcSubset cur = b;
  while (basin(d, cur, st.t) != d.all_vertices()) {
    if (trace.steps.size() == d.num_vertices())
      throw InvariantViolation("psi: more than |V| applications of phi^-1");
    trace.steps.push_back(inverse_step(d, dec, cur, st));
    cur = trace.steps.back().subset;
  }
  trace.result = cur;
  return {cur, trace};
}

}  // namespace balgamma
