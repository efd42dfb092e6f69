#include "balgamma/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "balgamma/crosscheck.hpp"

namespace balgamma {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

template <class Body>
CheckResult guarded(std::string name, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const Error& e) {
    r.status = CheckStatus::fail;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

void fail(CheckResult& r, std::string detail, std::string cex = {}) {
  r.status = CheckStatus::fail;
  r.detail = std::move(detail);
  r.counterexample = std::move(cex);
}

void skip(CheckResult& r, std::string why) {
  r.status = CheckStatus::skip;
  r.detail = std::move(why);
}

std::string describe(const Multidigraph& d, const Partition& part) {
  return "P=" + format_vertices(d, part.p) + " Q=" + format_vertices(d, part.q) + " A(P,Q)=" +
         format_subset(d, part.a_pq) + " A(Q,P)=" + format_subset(d, part.a_qp);
}

std::string st_label(const Multidigraph& d, std::size_t s, std::size_t t, std::size_t k) {
  return "s=" + d.vertex(s) + " t=" + d.vertex(t) + " k=" + std::to_string(k);
}

// All subsets of `pool`, smallest index bits first.
template <class F>
void for_each_subset(const ArcSubset& pool, F&& f) {
  const auto idx = pool.indices();
  const std::size_t n = idx.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArcSubset c;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1u) c.set(idx[j]);
    if (!f(c)) return;
  }
}

bool balanced_or_skip(const Multidigraph& d, CheckResult& r) {
  if (is_balanced(d)) return true;
  skip(r, "requires a balanced digraph");
  return false;
}

}  // namespace

std::string verify_crossing_bijection(const Multidigraph& d, const CircuitDecomposition& dec,
                                      const CrossingBijection& beta) {
  const Partition& part = beta.partition;
  ArcSubset domain, codomain;
  for (const auto& [a, b] : beta.forward) {
    if (!part.a_pq.test(a)) return "beta is defined on " + d.arc(a).label + " which is not in A(P,Q)";
    if (!part.a_qp.test(b)) return "beta sends " + d.arc(a).label + " outside A(Q,P)";
    if (codomain.test(b)) return "beta is not injective: two arcs map to " + d.arc(b).label;
    domain.set(a);
    codomain.set(b);
    auto back = beta.backward.find(b);
    if (back == beta.backward.end() || back->second != a)
      return "beta^-1 does not undo beta at " + d.arc(a).label;
  }
  if (domain != part.a_pq) return "beta is not defined on all of A(P,Q)";
  if (codomain != part.a_qp) return "beta is not onto A(Q,P)";
  if (beta.backward.size() != beta.forward.size()) return "beta^-1 has extra entries";

  for (const auto& circ : dec.circuits) {
    int last = -1;  // 0: A(P,Q), 1: A(Q,P)
    int first = -1;
    for (auto a : circ) {
      const int kind = part.a_pq.test(a) ? 0 : part.a_qp.test(a) ? 1 : -1;
      if (kind < 0) continue;
      if (first < 0) first = kind;
      if (kind == last) return "crossing arcs do not alternate at " + d.arc(a).label;
      last = kind;
    }
    if (first >= 0 && first == last) return "crossing arcs do not alternate around a circuit";
  }
  for (const auto& [a, b] : beta.forward) {
    const auto [c, pos] = dec.position[a];
    const auto& circ = dec.circuits[c];
    std::size_t expect = a;
    for (std::size_t j = 1; j <= circ.size(); ++j) {
      const std::size_t x = circ[(pos + j) % circ.size()];
      if (part.a_qp.test(x)) {
        expect = x;
        break;
      }
    }
    if (expect != b)
      return "beta(" + d.arc(a).label + ") = " + d.arc(b).label + " but the next A(Q,P) arc on its circuit is " +
             d.arc(expect).label;
  }
  return {};
}

CheckResult check_balance(const Multidigraph& d) {
  return guarded("balanced", [&](CheckResult& r) {
    const auto deg = degrees(d);
    for (std::size_t v = 0; v < deg.size(); ++v)
      if (deg[v].out != deg[v].in)
        return fail(r, "outdegree differs from indegree",
                    "vertex " + d.vertex(v) + " out=" + std::to_string(deg[v].out) + " in=" +
                        std::to_string(deg[v].in));
    r.detail = "outdegree = indegree at all " + std::to_string(deg.size()) + " vertices";
  });
}

CheckResult check_decomposition(const Multidigraph& d) {
  return guarded("decomposition", [&](CheckResult& r) {
    if (!balanced_or_skip(d, r)) return;
    const auto dec = circuit_decomposition(d);
    if (auto err = validate_decomposition(d, dec); !err.empty()) return fail(r, err);
    r.detail = std::to_string(dec.circuits.size()) + " circuits, arc-disjoint, covering, closed";
  });
}

CheckResult check_a_symmetry(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("a_symmetry", [&](CheckResult& r) {
    if (!balanced_or_skip(d, r)) return;
    const std::size_t n = d.num_vertices();
    if (n > opts.max_partition_vertices) return skip(r, "more than " + std::to_string(opts.max_partition_vertices) + " vertices");
    const auto dec = circuit_decomposition(d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Partition part = partition(d, VertexSet(mask));
      if (part.a_pq.count() != part.a_qp.count())
        return fail(r, "|A(P,Q)| != |A(Q,P)|", describe(d, part));
      CrossingBijection beta = crossing_bijection(d, dec, part);
      if (opts.break_beta && beta.forward.size() >= 2) {
        const std::size_t target = beta.forward.begin()->second;
        for (auto& [a, b] : beta.forward) b = target;
      }
      if (auto err = verify_crossing_bijection(d, dec, beta); !err.empty()) return fail(r, err, describe(d, part));
    }
    r.detail = "all " + std::to_string(std::uint64_t{1} << n) + " partitions: |A(P,Q)| = |A(Q,P)|, beta verified";
  });
}

CheckResult check_absorption(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("absorption", [&](CheckResult& r) {
    const std::size_t m = d.num_arcs();
    if (m > opts.max_absorption_arcs) return skip(r, "more than " + std::to_string(opts.max_absorption_arcs) + " arcs");
    std::uint64_t cases = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const ArcSubset e(mask, 0);
      for (std::size_t s = 0; s < d.num_vertices(); ++s) {
        const VertexSet p = basin(d, e, s);
        const Partition part = partition(d, p);
        const ArcSubset pool = part.a_pq - e;
        auto check = [&](const ArcSubset& c) {
          ++cases;
          return basin(d, e | c, s) == p;
        };
        bool ok = true;
        if (pool.count() <= 6) {
          for_each_subset(pool, [&](const ArcSubset& c) { return ok = check(c); });
        } else {
          pool.for_each([&](std::size_t a) { ok = ok && check(ArcSubset::single(a)); });
          ok = ok && check(pool);
        }
        if (!ok)
          return fail(r, "adding A(P,Q) arcs changed the basin of " + d.vertex(s),
                      "E=" + format_subset(d, e) + " " + describe(d, part));
      }
    }
    r.detail = std::to_string(cases) + " (E, C, s) cases";
  });
}

CheckResult check_sink_characterization(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("sink_characterization", [&](CheckResult& r) {
    EnumerationOptions single = opts.enumeration;
    single.workers = 1;
    std::string cex;
    const Count visited = enumerate_acyclic(
        d,
        [&](const ArcSubset& b) {
          if (!cex.empty()) return;
          for (std::size_t s = 0; s < d.num_vertices(); ++s)
            if (is_convergence(d, b, s) != is_convergence_by_sink(d, b, s)) {
              cex = "B=" + format_subset(d, b) + " s=" + d.vertex(s);
              return;
            }
        },
        single);
    if (!cex.empty()) return fail(r, "to-root and unique-sink tests disagree", cex);
    r.detail = std::to_string(visited) + " acyclic subsets, all vertices";
  });
}

CheckResult check_counting_identities(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("counting_identities", [&](CheckResult& r) {
    const std::size_t n = d.num_vertices();
    const std::size_t m = d.num_arcs();
    if (n < 2) return skip(r, "needs two distinct vertices");
    if (n > opts.max_partition_vertices) return skip(r, "too many vertices for partition sweep");
    const GammaTable gamma = gamma_table(d, opts.enumeration);
    const VertexSet all = d.all_vertices();
    std::vector<Partition> parts;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) parts.push_back(partition(d, VertexSet(mask)));

    std::uint64_t identities = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const auto cls = classify_all(d, s, t, opts.enumeration, 0);
        for (std::size_t k = 0; k <= m; ++k) {
          const BasinClassification& u = cls[k];
          const Count total = u.total();
          if (u.count_s_basin(all) != gamma.at(s, k) || u.count_t_basin(all) != gamma.at(t, k))
            return fail(r, "cell with full basin differs from gamma", st_label(d, s, t, k));
          Count sum_s = 0, sum_t = 0;
          for (const auto& part : parts) {
            sum_s = checked_add(sum_s, u.count_s_basin(part.p));
            sum_t = checked_add(sum_t, u.count_t_basin(part.q));
            Count rhs_s = 0, rhs_t = 0;
            for (std::size_t j = 0; j <= k; ++j) {
              const Count x = cls[k - j].count_x(part.p);
              rhs_s = checked_add(rhs_s, checked_mul(binomial(part.a_pq.count(), j), x));
              rhs_t = checked_add(rhs_t, checked_mul(binomial(part.a_qp.count(), j), x));
            }
            if (u.count_s_basin(part.p) != rhs_s)
              return fail(r, "S-basin binomial identity fails", st_label(d, s, t, k) + " " + describe(d, part));
            if (u.count_t_basin(part.q) != rhs_t)
              return fail(r, "T-basin binomial identity fails", st_label(d, s, t, k) + " " + describe(d, part));
            identities += 2;
          }
          if (total < sum_s || total - sum_s != gamma.at(s, k))
            return fail(r, "gamma_k(s) != |U_k| - sum over proper S-basins", st_label(d, s, t, k));
          if (total < sum_t || total - sum_t != gamma.at(t, k))
            return fail(r, "gamma_k(t) != |U_k| - sum over proper T-basins", st_label(d, s, t, k));
          identities += 2;
        }
      }
    r.detail = std::to_string(identities) + " identities";
  });
}

CheckResult check_strip_refill(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("strip_refill", [&](CheckResult& r) {
    const std::size_t n = d.num_vertices();
    if (n < 2) return skip(r, "needs two distinct vertices");
    const VertexSet all = d.all_vertices();
    std::uint64_t round_trips = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const Terminals st{s, t};
        for (const auto& u : classify_all(d, s, t, opts.enumeration)) {
          for (const auto& [key, cell] : u.cells) {
            const auto& [sb, tb] = key;
            if (!cell.members_complete) return skip(r, "cell cap reached");
            for (const auto& b : cell.members) {
              if (sb != all) {
                const Partition part = partition(d, sb);
                const Stripped x = strip(d, b, part, st);
                if (refill(d, x.e, x.c, part, st) != b)
                  return fail(r, "refill(strip(B)) != B", "B=" + format_subset(d, b) + " " + describe(d, part));
                ++round_trips;
              }
              if (tb != all) {
                const Partition part = partition(d, tb.complement(n));
                const Stripped x = strip_t(d, b, part, st);
                if (refill_t(d, x.e, x.c, part, st) != b)
                  return fail(r, "refill_t(strip_t(B)) != B", "B=" + format_subset(d, b) + " " + describe(d, part));
                ++round_trips;
              }
            }
            // X^{P,Q} cells: refill with every C and strip it back.
            if ((sb | tb) != all || !(sb & tb).empty()) continue;
            const Partition part = partition(d, sb);
            for (const auto& e : cell.members) {
              bool ok = true;
              std::string cex;
              for_each_subset(part.a_pq, [&](const ArcSubset& c) {
                if (strip(d, refill(d, e, c, part, st), part, st) != Stripped{e, c}) {
                  ok = false;
                  cex = "E=" + format_subset(d, e) + " C=" + format_subset(d, c);
                }
                ++round_trips;
                return ok;
              });
              for_each_subset(part.a_qp, [&](const ArcSubset& c) {
                if (ok && strip_t(d, refill_t(d, e, c, part, st), part, st) != Stripped{e, c}) {
                  ok = false;
                  cex = "E=" + format_subset(d, e) + " C'=" + format_subset(d, c);
                }
                ++round_trips;
                return ok;
              });
              if (!ok) return fail(r, "strip(refill(E,C)) != (E,C)", cex + " " + describe(d, part));
            }
          }
        }
      }
    r.detail = std::to_string(round_trips) + " round trips";
  });
}

CheckResult check_phi(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("phi", [&](CheckResult& r) {
    if (!balanced_or_skip(d, r)) return;
    const std::size_t n = d.num_vertices();
    if (n < 2) return skip(r, "needs two distinct vertices");
    const auto dec = circuit_decomposition(d);
    const VertexSet all = d.all_vertices();
    std::uint64_t mapped = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const Terminals st{s, t};
        for (const auto& u : classify_all(d, s, t, opts.enumeration)) {
          std::unordered_set<ArcSubset, ArcSubsetHash> non_t, image;
          std::vector<ArcSubset> non_s;
          for (const auto& [key, cell] : u.cells) {
            if (!cell.members_complete) return skip(r, "cell cap reached");
            for (const auto& b : cell.members) {
              if (key.first != all) non_s.push_back(b);
              if (key.second != all) non_t.insert(b);
            }
          }
          for (const auto& b : non_s) {
            const ArcSubset img = phi(d, dec, b, st);
            const std::string where = st_label(d, s, t, u.k) + " B=" + format_subset(d, b);
            if (!non_t.count(img)) return fail(r, "phi(B) is not in U_k \\ Gamma_k(t)", where);
            if (!image.insert(img).second) return fail(r, "phi is not injective", where);
            if (basin(d, img, t) != basin(d, b, s).complement(n))
              return fail(r, "phi does not send the S=P cell to the T=Q cell", where);
            if (phi_inverse(d, dec, img, st) != b) return fail(r, "phi_inverse(phi(B)) != B", where);
            ++mapped;
          }
          if (image.size() != non_t.size())
            return fail(r, "phi is not onto U_k \\ Gamma_k(t)", st_label(d, s, t, u.k));
          for (const auto& b : non_t)
            if (phi(d, dec, phi_inverse(d, dec, b, st), st) != b)
              return fail(r, "phi(phi_inverse(B)) != B", st_label(d, s, t, u.k) + " B=" + format_subset(d, b));
        }
      }
    r.detail = std::to_string(mapped) + " subsets mapped and round-tripped";
  });
}

CheckResult check_psi(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("psi", [&](CheckResult& r) {
    if (!balanced_or_skip(d, r)) return;
    const std::size_t n = d.num_vertices();
    const std::size_t m = d.num_arcs();
    const auto dec = circuit_decomposition(d);
    std::uint64_t mapped = 0;
    std::size_t longest = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        const Terminals st{s, t};
        for (std::size_t k = 0; k <= m; ++k) {
          const auto from = list_convergences(d, s, k, opts.enumeration);
          const auto to = list_convergences(d, t, k, opts.enumeration);
          const std::string where = st_label(d, s, t, k);
          if (from.size() != to.size()) return fail(r, "|Gamma_k(s)| != |Gamma_k(t)|", where);
          const std::unordered_set<ArcSubset, ArcSubsetHash> target(to.begin(), to.end());
          std::unordered_set<ArcSubset, ArcSubsetHash> image;
          for (const auto& b : from) {
            const auto [img, trace] = psi(d, dec, b, st);
            const std::string at = where + " B=" + format_subset(d, b);
            if (!target.count(img)) return fail(r, "psi(B) is not a t-convergence", at);
            if (!image.insert(img).second) return fail(r, "psi is not injective", at);
            if (trace.steps.size() > n) return fail(r, "trace longer than |V|", at);
            if (s == t && !trace.steps.empty()) return fail(r, "psi is not the identity for s = t", at);
            std::size_t prev = basin(d, b, t).count();
            for (const auto& step : trace.steps) {
              const std::size_t cur = basin(d, step.subset, t).count();
              if (cur <= prev) return fail(r, "|T-basin| does not increase along the trace", at);
              prev = cur;
            }
            longest = std::max(longest, trace.steps.size());
            ++mapped;
          }
          if (image.size() != target.size()) return fail(r, "psi is not onto Gamma_k(t)", where);
        }
      }
    r.detail = std::to_string(mapped) + " convergences mapped, longest trace " + std::to_string(longest);
  });
}

CheckResult check_matrix_tree(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("matrix_tree", [&](CheckResult& r) {
    const std::size_t n = d.num_vertices();
    if (n == 0) return skip(r, "no vertices");
    const GammaTable gamma = gamma_table(d, opts.enumeration);
    for (std::size_t s = 0; s < n; ++s) {
      const Count det = matrix_tree_to_root(d, s);
      if (det != gamma.at(s, n - 1))
        return fail(r, "determinant " + std::to_string(det) + " != gamma " + std::to_string(gamma.at(s, n - 1)),
                    "s=" + d.vertex(s));
    }
    r.detail = "gamma_{|V|-1}(s) matches the Laplacian minor at every root";
  });
}

CheckResult check_oracle(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("oracle", [&](CheckResult& r) {
    if (d.num_arcs() > opts.max_naive_arcs) return skip(r, "more than " + std::to_string(opts.max_naive_arcs) + " arcs");
    const GammaTable fast = gamma_table(d, opts.enumeration);
    const GammaTable slow = naive_gamma_table(d);
    for (std::size_t s = 0; s < d.num_vertices(); ++s)
      for (std::size_t k = 0; k <= d.num_arcs(); ++k)
        if (fast.at(s, k) != slow.at(s, k))
          return fail(r, "pruned enumeration disagrees with the power-set oracle",
                      "s=" + d.vertex(s) + " k=" + std::to_string(k));
    r.detail = "pruned and naive tables agree on every (s,k)";
  });
}

CheckResult check_theorem(const Multidigraph& d, const VerifyOptions& opts) {
  return guarded("theorem", [&](CheckResult& r) {
    if (!balanced_or_skip(d, r)) return;
    const GammaTable gamma = gamma_table(d, opts.enumeration);
    for (std::size_t k = 0; k <= gamma.max_k(); ++k)
      if (!gamma.column_uniform(k)) return fail(r, "gamma_k depends on the vertex", "k=" + std::to_string(k));
    r.detail = "every column of the gamma table is constant";
  });
}

VerifyReport verify_all(const Multidigraph& d, const VerifyOptions& opts) {
  VerifyReport report;
  report.checks.push_back(check_balance(d));
  report.checks.push_back(check_decomposition(d));
  report.checks.push_back(check_a_symmetry(d, opts));
  report.checks.push_back(check_absorption(d, opts));
  report.checks.push_back(check_sink_characterization(d, opts));
  report.checks.push_back(check_counting_identities(d, opts));
  report.checks.push_back(check_strip_refill(d, opts));
  report.checks.push_back(check_phi(d, opts));
  report.checks.push_back(check_psi(d, opts));
  report.checks.push_back(check_matrix_tree(d, opts));
  report.checks.push_back(check_oracle(d, opts));
  report.checks.push_back(check_theorem(d, opts));
  return report;
}

}  // namespace balgamma
