#ifndef BALGAMMA_VERIFY_HPP
#define BALGAMMA_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "balgamma/bijections.hpp"
#include "balgamma/digraph.hpp"
#include "balgamma/enumeration.hpp"

namespace balgamma {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;          // what was checked, or why it was skipped
  std::string counterexample;  // offending subset / partition on failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  std::size_t max_partition_vertices = 12;  // 2^|V| partitions
  std::size_t max_naive_arcs = 16;
  std::size_t max_absorption_arcs = 12;     // every E ⊆ A
  /// Test hook: corrupt beta before checking it, to exercise the failure path.
  bool break_beta = false;
};

/// Empty when beta is the crossing bijection of dec for its partition;
/// otherwise a description of the first defect found.
std::string verify_crossing_bijection(const Multidigraph& d, const CircuitDecomposition& dec,
                                      const CrossingBijection& beta);

CheckResult check_balance(const Multidigraph& d);
CheckResult check_decomposition(const Multidigraph& d);
CheckResult check_a_symmetry(const Multidigraph& d, const VerifyOptions& opts = {});
CheckResult check_absorption(const Multidigraph& d, const VerifyOptions& opts = {});
CheckResult check_sink_characterization(const Multidigraph& d, const VerifyOptions& opts = {});
/// The four counting identities on U_k, for every ordered pair s != t, every k
/// and every proper nonempty P. Valid for unbalanced digraphs.
CheckResult check_counting_identities(const Multidigraph& d, const VerifyOptions& opts = {});
/// Strip/refill well-definedness and round trips on every cell of every U_k.
CheckResult check_strip_refill(const Multidigraph& d, const VerifyOptions& opts = {});
/// phi and phi^{-1} are inverse bijections U_k\Gamma_k(s) <-> U_k\Gamma_k(t).
CheckResult check_phi(const Multidigraph& d, const VerifyOptions& opts = {});
/// psi is a bijection Gamma_k(s) -> Gamma_k(t) with short, monotone traces.
CheckResult check_psi(const Multidigraph& d, const VerifyOptions& opts = {});
CheckResult check_matrix_tree(const Multidigraph& d, const VerifyOptions& opts = {});
CheckResult check_oracle(const Multidigraph& d, const VerifyOptions& opts = {});
/// Every column of the gamma table is constant (balanced inputs only).
CheckResult check_theorem(const Multidigraph& d, const VerifyOptions& opts = {});

/// Runs every check above in order.
VerifyReport verify_all(const Multidigraph& d, const VerifyOptions& opts = {});

}  // namespace balgamma

#endif  // BALGAMMA_VERIFY_HPP
