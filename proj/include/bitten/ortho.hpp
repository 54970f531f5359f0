#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitten/bite.hpp"

namespace bitten {

struct OrthoOptions {
  std::size_t partition_cap = 20000;  // supplementary partition sweep
  std::size_t sample_count = 2000;    // sampled partitions above the cap
  std::uint64_t seed = 1;
};

// Witness for the four cover clauses of an indexed family tau = {H_x}.
// Clause 4's verdict is the normal-system test on the family derived from
// the identity partition (B = tau as a set): antichain plus the pairwise
// witness property. Other partitions are swept for information only; see
// derived_b for the identity-partition family.
struct OrthoNormalWitness {
  bool clause1 = false;  // every point lies in its indexed member
  bool clause2 = false;  // the family covers K
  bool clause3 = false;  // antichain
  bool clause4 = false;
  std::vector<Bits> derived_b;
  std::size_t partitions_checked = 0;
  std::size_t partitions_passed = 0;
  bool ok() const { return clause1 && clause2 && clause3 && clause4; }
};

OrthoNormalWitness is_ortho_normal_cover(const std::vector<Bits>& tau,
                                         const OrthoOptions& opt = {});

struct RefinedCheckReport {
  std::size_t h0_size = 0;
  std::size_t h_size = 0;
  bool vacuous = false;         // H empty, nothing to search for
  bool bound_exceeded = false;  // |H| above the search bound
  bool witness_found = false;
  std::vector<Mask> witness_neighbours;  // witness tolerance, one mask per point
  std::size_t candidates_tried = 0;
  std::string note;
};

// Bounded search for a tolerance space matching the model: candidates on
// |H| points whose block family is an ortho-normal cover and whose
// quotient order is isomorphic to the model's C1O2 order.
RefinedCheckReport refined_check(const BiteModel& model, std::size_t max_universe);

}  // namespace bitten
