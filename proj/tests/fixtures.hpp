#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "balgamma/digraph.hpp"

namespace balgamma::testing {

// Four vertices, seven arcs; circuits (a,b), (c,d,e), (f,g).
inline constexpr const char* kExample = R"(# example digraph
v 1
v 2
v 3
v 4
a a 1 2
a b 2 1
a c 2 3
a d 3 4
a e 4 2
a f 1 4
a g 4 1
)";

inline constexpr const char* kTriangle = R"(v x
v y
v z
e p x y
e q y z
e r z x
)";

inline Multidigraph example() { return parse_digraph(kExample); }

inline std::vector<std::string> sorted_labels(const Multidigraph& d, const std::vector<ArcSubset>& sets) {
  std::vector<std::string> out;
  for (const auto& b : sets) out.push_back(format_subset(d, b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace balgamma::testing
