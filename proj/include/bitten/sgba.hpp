#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bitten/quotient.hpp"

namespace bitten {

enum class ChoiceRule { LexMin, Seeded };
enum class CoherenceMode { Bounds, Cones };

// Choice function stored extensionally on the sets the semantics queries:
// singletons, the minimal-upper/maximal-lower bound sets of all pairs and,
// in cone mode, the full cones of comparable pairs.
class ChoiceFunction {
 public:
  ChoiceFunction(const QuotientPoset& q, ChoiceRule rule, std::uint64_t seed = 0,
                 CoherenceMode mode = CoherenceMode::Bounds);

  const QuotientPoset& quotient() const { return *q_; }
  CoherenceMode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }

  // The chosen member for a recorded set; singletons are implicit.
  std::size_t choose(const std::vector<std::size_t>& set) const;

  // Choice-function axioms plus coherence; throws on violation.
  void validate() const;

  const std::map<std::vector<std::size_t>, std::size_t>& table() const { return table_; }

 private:
  const QuotientPoset* q_;
  CoherenceMode mode_;
  std::uint64_t seed_;
  std::map<std::vector<std::size_t>, std::size_t> table_;
};

ChoiceFunction make_choice(const QuotientPoset& q, ChoiceRule rule, std::uint64_t seed = 0,
                           CoherenceMode mode = CoherenceMode::Bounds);

// Quotient classes with total + and . derived from a choice function.
struct SgbaModel {
  const QuotientPoset* q = nullptr;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::size_t>> plus;
  std::vector<std::vector<std::size_t>> times;
};

SgbaModel build_sgba(const QuotientPoset& q, const ChoiceFunction& lambda);

struct SgbaReport {
  std::vector<LawResult> items;  // "1".."14"
  bool all_hold() const {
    for (const auto& i : items)
      if (!i.holds) return false;
    return true;
  }
};

SgbaReport sgba_law_report(const SgbaModel& m);

// Classes with nonbottom lower image that are minimal among such.
std::vector<std::size_t> minimal_granule_classes(const QuotientPoset& q);

struct ReconstructionReport {
  std::size_t models = 0;
  bool order_recovered = false;         // forced +/. values determine <=
  std::vector<std::pair<std::size_t, std::size_t>> recovered_leq;
  std::vector<std::size_t> minimal_classes;
  std::vector<Mask> block_candidates;   // lower parts of the minimal classes
  bool blocks_consistent = false;       // candidates regenerate a tolerance with these blocks
  std::string block_uniqueness;         // "not established" unless proven here
};

ReconstructionReport reconstruction_probe(const QuotientPoset& q,
                                          const std::vector<SgbaModel>& models);

}  // namespace bitten
