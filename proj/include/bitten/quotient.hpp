#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitten/approx.hpp"

namespace bitten {

// One class of the rough-equality quotient. The signature (lower, bitten)
// is shared by every member.
struct RoughClass {
  Mask lower = 0;
  Mask bitten = 0;
  std::vector<Mask> members;  // in enumeration order (lexicographic by bit pattern)
};

struct QuotientOptions {
  std::size_t max_universe = 20;
  std::size_t max_classes = 4096;  // guards the cubic operator tables
};

// The quotient of the power set by rough equality, with its order and the
// operator tables. Immutable after construction.
class QuotientPoset {
 public:
  QuotientPoset(const Granulation& g, const QuotientOptions& opt = {});

  const Granulation& granulation() const { return *g_; }
  const Universe& universe() const { return g_->universe(); }

  std::size_t class_count() const { return classes_.size(); }
  const RoughClass& cls(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(Mask subset) const { return class_of_[subset]; }

  bool leq(std::size_t a, std::size_t b) const;
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::size_t l_class(std::size_t c) const { return lcls_[c]; }
  std::size_t diamond_class(std::size_t c) const { return dcls_[c]; }
  // Undefined when members' complements land in different classes (cannot
  // happen for covering granulations, but checked constructively).
  std::optional<std::size_t> neg_class(std::size_t c) const;

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  // Covering pairs (a, b) with a covered by b; deterministic order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  // Minimal upper bounds / maximal lower bounds of a pair.
  std::vector<std::size_t> ub_min(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> lb_max(std::size_t a, std::size_t b) const;

 private:
  const Granulation* g_;
  std::vector<RoughClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> lcls_, dcls_;
  std::vector<std::optional<std::size_t>> ncls_;
  std::vector<std::vector<std::int32_t>> meet_, join_;  // -1 undefined
  std::size_t bottom_ = 0, top_ = 0;
};

struct QuotientTheoremReport {
  std::vector<LawResult> items;  // "1".."9"
  bool all_hold() const {
    for (const auto& i : items)
      if (!i.holds) return false;
    return true;
  }
};

// The nine quotient-theorem statements, honoring definedness premises.
QuotientTheoremReport quotient_theorem_report(const QuotientPoset& q);

}  // namespace bitten
