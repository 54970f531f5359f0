#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bitten/cover.hpp"
#include "bitten/space.hpp"

namespace bitten {

// On-disk instance description: universe, tolerance pairs, granulation tag
// or explicit family, optional cover list for the AUAI commands.
struct InstanceDocument {
  std::vector<std::string> universe;
  std::vector<std::pair<std::string, std::string>> tolerance_pairs;
  std::string granulation_tag = "t-relateds";
  std::vector<std::vector<std::string>> explicit_granules;
  std::vector<std::vector<std::string>> cover;

  static InstanceDocument from_json_text(const std::string& text);
  std::string to_json_text() const;  // canonical field order
  std::string digest() const;       // fnv-1a over the canonical text
};

// Owning view of a built instance; the universe outlives the relation and
// granulation that point into it.
struct BuiltInstance {
  std::unique_ptr<Universe> universe;
  std::unique_ptr<ToleranceRelation> tolerance;
  std::unique_ptr<Granulation> gran;
  std::unique_ptr<CoverSystem> cover;  // granulation family unless given
};

BuiltInstance build_instance(const InstanceDocument& doc);

// The fixed four-element space used by the golden table.
InstanceDocument example_instance();

// Seeded random space: every pair drawn with the given density, then the
// reflexive-symmetric closure.
InstanceDocument random_instance(std::size_t size, double density, std::uint64_t seed);

}  // namespace bitten
