#pragma once

#include <vector>

#include "bitten/approx.hpp"

namespace bitten {

// Definable sets over the block-intersection granulation: the union
// closure of A_T. Closed under union and intersection by construction;
// carries the relative implication and difference.
class DefinableLattice {
 public:
  explicit DefinableLattice(const ToleranceRelation& t, std::size_t max_universe = 20);

  const Universe& universe() const { return *u_; }
  const std::vector<Mask>& granules() const { return granules_; }   // A_T
  const std::vector<Mask>& carrier() const { return carrier_; }     // Delta(S), sorted
  bool is_member(Mask x) const;

  // X -> Y: union of the granules A with X /\ A <= Y.
  Mask implies(Mask x, Mask y) const;
  // X (-) Y: least definable Z with X <= Y \/ Z.
  Mask subtract(Mask x, Mask y) const;

 private:
  void require_member(Mask x) const;
  const Universe* u_;
  std::vector<Mask> granules_;
  std::vector<Mask> carrier_;
};

DefinableLattice definable_sets(const ToleranceRelation& t, std::size_t max_universe = 20);

struct HeytingReport {
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

// Residuation over all triples, the difference axioms, distributivity,
// and atomicity of the definable lattice.
HeytingReport double_heyting_report(const DefinableLattice& d);

}  // namespace bitten
