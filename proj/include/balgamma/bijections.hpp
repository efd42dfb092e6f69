#ifndef BALGAMMA_BIJECTIONS_HPP
#define BALGAMMA_BIJECTIONS_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "balgamma/digraph.hpp"
#include "balgamma/types.hpp"

namespace balgamma {

/// Arc-disjoint directed circuits covering every arc of a balanced digraph.
struct CircuitDecomposition {
  std::vector<std::vector<std::size_t>> circuits;
  /// arc index -> (circuit id, position within the circuit)
  std::vector<std::pair<std::size_t, std::size_t>> position;
};

/// Canonical decomposition: start at the lowest unused arc, keep taking the
/// lowest unused out-arc until some vertex repeats, keep the closed part as a
/// circuit and release the tail arcs. Throws PreconditionError if d is unbalanced.
CircuitDecomposition circuit_decomposition(const Multidigraph& d);

/// Checks arc-disjointness, coverage and closedness. Returns an empty string
/// when valid, otherwise a description of the first defect.
std::string validate_decomposition(const Multidigraph& d, const CircuitDecomposition& dec);

/// beta: A(P,Q) -> A(Q,P), each arc sent to the next A(Q,P) arc on its circuit.
struct CrossingBijection {
  Partition partition;
  std::map<std::size_t, std::size_t> forward;
  std::map<std::size_t, std::size_t> backward;

  ArcSubset image(const ArcSubset& c) const;
  ArcSubset preimage(const ArcSubset& c) const;
};

/// Throws PreconditionError if the crossing arcs of some circuit do not
/// alternate between A(P,Q) and A(Q,P) (i.e. dec does not belong to a balanced d).
CrossingBijection crossing_bijection(const Multidigraph& d, const CircuitDecomposition& dec, const Partition& part);

/// The two distinguished vertices s and t of the U_k construction.
struct Terminals {
  std::size_t s;
  std::size_t t;
};

struct Stripped {
  ArcSubset e;  // b with its crossing arcs removed
  ArcSubset c;  // the removed crossing arcs
  friend bool operator==(const Stripped&, const Stripped&) = default;
};

/// Phi on the s-side: b in U_k with basin(b,s) = P; removes C = b ∩ A(P,Q).
/// Verifies that the remainder is acyclic with basins exactly (P, Q).
Stripped strip(const Multidigraph& d, const ArcSubset& b, const Partition& part, Terminals st);

/// Psi on the s-side: e in X^{P,Q}, c ⊆ A(P,Q); returns e ∪ c and verifies that
/// it is acyclic, keeps basin(.,s) = P, lies in U and meets A(P,Q) exactly in c.
ArcSubset refill(const Multidigraph& d, const ArcSubset& e, const ArcSubset& c, const Partition& part, Terminals st);

// t-side mirrors (roles of s/t and P/Q exchanged, crossing set A(Q,P)).
Stripped strip_t(const Multidigraph& d, const ArcSubset& b, const Partition& part, Terminals st);
ArcSubset refill_t(const Multidigraph& d, const ArcSubset& e, const ArcSubset& c, const Partition& part, Terminals st);

/// phi: U_k \ Gamma_k(s) -> U_k \ Gamma_k(t).
ArcSubset phi(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b, Terminals st);
/// phi^{-1}: U_k \ Gamma_k(t) -> U_k \ Gamma_k(s).
ArcSubset phi_inverse(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b, Terminals st);

struct InvolutionStep {
  ArcSubset subset;      // result of this application of phi^{-1}
  Partition partition;   // (P, Q) with Q the t-basin of the input
  ArcSubset stripped;    // C' = input ∩ A(Q,P)
  ArcSubset inserted;    // beta^{-1}(C') ⊆ A(P,Q)
};

struct InvolutionTrace {
  ArcSubset start;
  std::vector<InvolutionStep> steps;
  ArcSubset result;
};

/// psi: Gamma_k(s) -> Gamma_k(t) by the involution principle.
std::pair<ArcSubset, InvolutionTrace> psi(const Multidigraph& d, const CircuitDecomposition& dec, const ArcSubset& b,
                                          Terminals st);

}  // namespace balgamma

#endif  // BALGAMMA_BIJECTIONS_HPP
