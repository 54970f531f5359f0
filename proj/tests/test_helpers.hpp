#pragma once

#include <vector>

#include "bitten/instance.hpp"
#include "bitten/space.hpp"

namespace bitten::testing {

inline BuiltInstance example() { return build_instance(example_instance()); }

inline Mask mask(const Universe& u, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= Mask{1} << u.index(n);
  return m;
}

// Brute-force maximal-clique oracle: all subsets, keep cliques, keep the
// maximal ones. Independent of the production block enumeration.
inline std::vector<Mask> clique_oracle(const ToleranceRelation& t) {
  const std::size_t n = t.size();
  std::vector<Mask> cliques;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((m >> i & 1) && (m >> j & 1) && !t.related(i, j)) ok = false;
    if (ok) cliques.push_back(m);
  }
  std::vector<Mask> maximal;
  for (Mask m : cliques) {
    bool dom = false;
    for (Mask o : cliques)
      if (o != m && (m & ~o) == 0) {
        dom = true;
        break;
      }
    if (!dom) maximal.push_back(m);
  }
  return maximal;
}

}  // namespace bitten::testing
