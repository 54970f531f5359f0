#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bitten/approx.hpp"

namespace bitten {

// Finite collection of subsets K_1..K_n with the conventions K_0 = empty,
// K_{n+1} = S. Covering S is not required.
class CoverSystem {
 public:
  CoverSystem(const Universe& u, std::vector<Mask> covers)
      : u_(&u), covers_(std::move(covers)) {
    for (Mask& k : covers_) k &= u.full_mask();
  }

  const Universe& universe() const { return *u_; }
  const std::vector<Mask>& covers() const { return covers_; }
  std::size_t size() const { return covers_.size(); }

 private:
  const Universe* u_;
  std::vector<Mask> covers_;
};

// The four approximations. l1/u2 follow their formulas directly; u1/l2 use
// the closed forms
//   u1 = {z : exists x in X with every K_i containing x also containing z}
//   l2 = {z : the intersection of {S\K_i : z not in K_i} is included in X}
// which agree with the subfamily enumerations below for every input.
Mask l1(const CoverSystem& c, Mask x);
Mask l2(const CoverSystem& c, Mask x);
Mask u1(const CoverSystem& c, Mask x);
Mask u2(const CoverSystem& c, Mask x);

std::pair<Mask, Mask> au_rough(const CoverSystem& c, Mask x);  // (l1, u1)
std::pair<Mask, Mask> ai_rough(const CoverSystem& c, Mask x);  // (l2, u2)

// Defining subfamily enumerations over I included in {1..n+1}; exact but
// exponential in n, capped. Test oracles for the closed forms.
Mask u1_enumerated(const CoverSystem& c, Mask x, std::size_t max_subfamilies = 131072);
Mask l2_enumerated(const CoverSystem& c, Mask x, std::size_t max_subfamilies = 131072);

struct BridgeReport {
  bool claim1 = true;  // X^l1 = Gr_*(X)
  bool claim2 = true;  // X^u1 <= Gr^*(X)
  bool claim3 = true;  // Gr_b^*(X) = Gr^*(X) /\ X^u2
  bool partition_equality = true;  // X^u1 = Gr^*(X) when granules are disjoint
  bool granules_disjoint = false;
  std::vector<std::string> counterexamples;
  bool all_hold() const { return claim1 && claim2 && claim3; }
};

struct BridgeOptions {
  bool exhaustive = true;
  std::size_t max_universe = 20;
  std::size_t samples = 1024;
  std::uint64_t seed = 0;
};

// Verifies the bridge claims for the cover system taken to coincide with
// the granulation.
BridgeReport bridge_check(const Granulation& g, const BridgeOptions& opt = {});

}  // namespace bitten
