#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitten/poset.hpp"

namespace bitten {

// The isotone maps K -> {0,1}, i.e. the up-sets of K. A map is stored as
// its up-set over K; a family of maps is a Bits over map indices.
class KStar {
 public:
  explicit KStar(Poset k, std::size_t cap = std::size_t{1} << 20);

  const Poset& poset() const { return k_; }
  std::size_t size() const { return maps_.size(); }
  const Bits& map_upset(std::size_t i) const { return maps_[i]; }
  int index_of(const Bits& upset) const;

  // UP(p), LO(p) as families over map indices.
  const Bits& up(std::size_t p) const { return up_at_[p]; }
  const Bits& lo(std::size_t p) const { return lo_at_[p]; }

  Bits full_family() const { return Bits(maps_.size(), true); }
  Bits family_without_constants() const;

 private:
  Poset k_;
  std::vector<Bits> maps_;
  std::unordered_map<Bits, int, BitsHash> index_;
  std::vector<Bits> up_at_, lo_at_;
};

KStar enumerate_kstar(Poset k, std::size_t cap = std::size_t{1} << 20);

// F = intersection over x in A of x^{-1}(0) (dually 1); F and the result
// are subsets of K, A a family of maps. Empty A forces F = K.
bool is_A_ideal(const KStar& ks, const Bits& f, const Bits& a);
bool is_A_filter(const KStar& ks, const Bits& f, const Bits& a);

bool is_full(const KStar& ks, const Bits& a);
// Ideals and filters range over nonempty down-/up-closed subsets of K.
bool is_separating(const KStar& ks, const Bits& a);

// Closure operators relative to A; empty index family yields A.
Bits cl1(const KStar& ks, const Bits& x, const Bits& a);
Bits cl2(const KStar& ks, const Bits& x, const Bits& a);

bool is_c1o2(const KStar& ks, const Bits& x, const Bits& a);
std::vector<Bits> c1o2_sets(const KStar& ks, const Bits& a);

Bits sigma(const KStar& ks, std::size_t p, const Bits& a);

struct RepresentationReport {
  bool full = false;
  bool separating = false;
  bool isotone = true;
  bool injective = true;
  bool surjective = true;
  bool order_embedding = true;
  std::size_t c1o2_count = 0;
  std::vector<std::string> notes;
  bool isomorphism() const {
    return isotone && injective && surjective && order_embedding;
  }
};

// sigma is isotone always, injective when A is full, surjective onto the
// C1O2 sets when A is separating, and an order isomorphism when both.
RepresentationReport representation_check(const KStar& ks, const Bits& a);

}  // namespace bitten
