#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bitten/bits.hpp"
#include "bitten/universe.hpp"

namespace bitten {

// Finite poset over elements 0..n-1.
class Poset {
 public:
  Poset() = default;
  // leq as full boolean matrix; must be reflexive, antisymmetric, transitive.
  explicit Poset(const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return n_; }
  bool leq(std::size_t p, std::size_t q) const { return up_[p].test(q); }
  const Bits& up_row(std::size_t p) const { return up_[p]; }
  const Bits& down_row(std::size_t p) const { return down_[p]; }

  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<Bits> up_, down_;
};

// Seeded random poset: random edges on i < j, transitively closed.
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

// Order isomorphism test by backtracking; intended for small posets.
bool posets_isomorphic(const Poset& a, const Poset& b);

// All up-sets of the poset, deterministic order, capped.
std::vector<Bits> enumerate_upsets(const Poset& k, std::size_t cap);

}  // namespace bitten
