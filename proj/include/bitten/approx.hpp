#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitten/space.hpp"

namespace bitten {

// The quadruple of regions attached to a subject set, plus the boundary.
// Invariants: lower <= subject <= bitten_upper <= upper, bitten_upper is
// disjoint from negative, boundary = bitten_upper \ lower.
struct ApproximationProfile {
  Subset subject;
  Subset lower;
  Subset upper;
  Subset negative;
  Subset bitten_upper;
  Subset boundary;
};

Mask gr_lower(const Granulation& g, Mask x);
Mask gr_upper(const Granulation& g, Mask x);
Mask gr_negative(const Granulation& g, Mask x);
Mask bitten_upper(const Granulation& g, Mask x);

Subset gr_lower(const Granulation& g, const Subset& x);
Subset gr_upper(const Granulation& g, const Subset& x);
Subset bitten_upper(const Granulation& g, const Subset& x);

ApproximationProfile profile(const Granulation& g, const Subset& x);

bool is_definable(const Granulation& g, Mask x);
bool is_crisp(const Granulation& g, Mask x);

// The two quantified operators of the starred pair.
Mask star_lower(const ToleranceRelation& t, Mask x);
Mask star_upper(const ToleranceRelation& t, Mask x);

// Brouwerian orthocomplement and the preclusivity-derived operators.
Mask sharp(const ToleranceRelation& t, Mask x);
Mask preclusive_lower(const ToleranceRelation& t, Mask x);
Mask preclusive_upper(const ToleranceRelation& t, Mask x);

struct LawResult {
  std::string id;
  bool holds = true;
  // Counterexample subsets, rendered; at most a handful are kept.
  std::vector<std::string> counterexamples;
};

struct PropertyReport {
  std::vector<LawResult> laws;
  bool all_hold() const {
    for (const auto& l : laws)
      if (!l.holds) return false;
    return true;
  }
  const LawResult* find(const std::string& id) const {
    for (const auto& l : laws)
      if (l.id == id) return &l;
    return nullptr;
  }
};

struct PropertyCheckOptions {
  bool exhaustive = true;
  std::size_t max_universe = 20;   // cap for exhaustive power-set sweeps
  std::size_t samples = 1024;      // sampled mode
  std::uint64_t seed = 0;
  std::size_t max_counterexamples = 4;
};

// Evaluates laws 1a..9b over all subsets (or a seeded sample), 10A/10B as
// definitional consistency, 11A/11B over pairs of definable/crisp sets.
PropertyReport property_report(const Granulation& g, const PropertyCheckOptions& opt = {});

}  // namespace bitten
