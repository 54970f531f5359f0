#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bitten/universe.hpp"

namespace bitten {

// Reflexive symmetric relation over a universe, stored as one neighbour
// mask per element (the mask always contains the element itself).
class ToleranceRelation {
 public:
  ToleranceRelation(const Universe& u, std::vector<Mask> neighbours);

  const Universe& universe() const { return *u_; }
  std::size_t size() const { return u_->size(); }

  bool related(std::size_t i, std::size_t j) const { return nbr_[i] >> j & 1; }
  Mask neighbours(std::size_t i) const { return nbr_[i]; }

 private:
  const Universe* u_;
  std::vector<Mask> nbr_;
};

// Reflexive-symmetric closure of a pair list; the minimal tolerance
// containing the pairs.
ToleranceRelation tolerance_from_pairs(
    const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs);

ToleranceRelation identity_tolerance(const Universe& u);
ToleranceRelation full_tolerance(const Universe& u);

// [x]_T = {y : (x,y) in T}.
Subset t_related(const ToleranceRelation& t, const std::string& x);
Subset t_related(const ToleranceRelation& t, std::size_t i);

// All maximal B with B x B included in T, i.e. maximal cliques of the
// tolerance graph. Pairwise incomparable, union covers the universe.
std::vector<Subset> blocks(const ToleranceRelation& t);

// Block reconstruction from the T-related family: maximal elements of
// {intersection of F : F a nonempty subfamily of the T-relateds, T total
// on the intersection}. Agrees with blocks() elementwise.
std::vector<Subset> mu_blocks(const ToleranceRelation& t);

// theta0 groups elements by dom_T(z) = intersection of the T-relateds
// containing z. Returns the partition as a list of class masks.
std::vector<Subset> theta0(const ToleranceRelation& t);

enum class GranulationKind { TRelateds, Blocks, BlockIntersections, Explicit };

std::string to_string(GranulationKind k);

// Covering family of subsets playing the role of the granule collection.
class Granulation {
 public:
  Granulation(const Universe& u, std::vector<Mask> granules, GranulationKind kind);

  const Universe& universe() const { return *u_; }
  GranulationKind kind() const { return kind_; }
  const std::vector<Mask>& granules() const { return granules_; }
  std::size_t size() const { return granules_.size(); }

 private:
  const Universe* u_;
  std::vector<Mask> granules_;
  GranulationKind kind_;
};

Granulation granulation(const ToleranceRelation& t, GranulationKind kind);
Granulation explicit_granulation(const Universe& u, std::vector<Mask> granules);

inline void require_same(const Granulation& g, const Subset& x) {
  if (&g.universe() != x.universe)
    throw InputError("subset universe differs from granulation universe");
}

// A_T: all intersections of subfamilies of the block family; the empty
// subfamily contributes S, and the empty set is retained when it arises.
std::vector<Mask> block_intersections(const ToleranceRelation& t);

}  // namespace bitten
