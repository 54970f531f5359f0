#include "bitten/instance.hpp"

#include <random>

#include <json.hpp>

namespace bitten {

using ordered_json = nlohmann::ordered_json;

InstanceDocument InstanceDocument::from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid instance document: ") + e.what());
  }
  InstanceDocument doc;
  try {
    doc.universe = j.at("universe").get<std::vector<std::string>>();
    if (j.contains("tolerance_pairs"))
      for (const auto& p : j.at("tolerance_pairs")) {
        if (!p.is_array() || p.size() != 2) throw InputError("tolerance pair must have two names");
        doc.tolerance_pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    if (j.contains("granulation")) {
      const auto& g = j.at("granulation");
      if (g.is_string()) {
        doc.granulation_tag = g.get<std::string>();
      } else if (g.is_array()) {
        doc.granulation_tag = "explicit";
        for (const auto& s : g) doc.explicit_granules.push_back(s.get<std::vector<std::string>>());
      } else {
        throw InputError("granulation must be a tag or a list of subsets");
      }
    }
    if (j.contains("cover"))
      for (const auto& s : j.at("cover")) doc.cover.push_back(s.get<std::vector<std::string>>());
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid instance document: ") + e.what());
  }
  return doc;
}

std::string InstanceDocument::to_json_text() const {
  ordered_json j;
  j["universe"] = universe;
  auto& tp = j["tolerance_pairs"] = ordered_json::array();
  for (const auto& [a, b] : tolerance_pairs) tp.push_back({a, b});
  if (granulation_tag == "explicit") {
    j["granulation"] = explicit_granules;
  } else {
    j["granulation"] = granulation_tag;
  }
  if (!cover.empty()) j["cover"] = cover;
  return j.dump(2) + "\n";
}

std::string InstanceDocument::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : to_json_text()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BuiltInstance build_instance(const InstanceDocument& doc) {
  BuiltInstance out;
  out.universe = std::make_unique<Universe>(doc.universe);
  out.tolerance = std::make_unique<ToleranceRelation>(
      tolerance_from_pairs(*out.universe, doc.tolerance_pairs));

  if (doc.granulation_tag == "t-relateds") {
    out.gran = std::make_unique<Granulation>(granulation(*out.tolerance, GranulationKind::TRelateds));
  } else if (doc.granulation_tag == "blocks") {
    out.gran = std::make_unique<Granulation>(granulation(*out.tolerance, GranulationKind::Blocks));
  } else if (doc.granulation_tag == "block-intersections") {
    out.gran = std::make_unique<Granulation>(
        granulation(*out.tolerance, GranulationKind::BlockIntersections));
  } else if (doc.granulation_tag == "explicit") {
    std::vector<Mask> granules;
    for (const auto& s : doc.explicit_granules) granules.push_back(out.universe->mask_of(s));
    out.gran = std::make_unique<Granulation>(explicit_granulation(*out.universe, granules));
  } else {
    throw InputError("unknown granulation tag: " + doc.granulation_tag);
  }

  std::vector<Mask> covers;
  if (doc.cover.empty()) {
    covers = out.gran->granules();
  } else {
    for (const auto& s : doc.cover) covers.push_back(out.universe->mask_of(s));
  }
  out.cover = std::make_unique<CoverSystem>(*out.universe, std::move(covers));
  return out;
}

InstanceDocument example_instance() {
  InstanceDocument doc;
  doc.universe = {"x1", "x2", "x3", "x4"};
  doc.tolerance_pairs = {{"x1", "x2"}, {"x2", "x3"}};
  doc.granulation_tag = "t-relateds";
  return doc;
}

InstanceDocument random_instance(std::size_t size, double density, std::uint64_t seed) {
  if (size == 0 || size > 64) throw InputError("instance size out of range");
  InstanceDocument doc;
  for (std::size_t i = 0; i < size; ++i) doc.universe.push_back("x" + std::to_string(i + 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (coin(rng) < density) doc.tolerance_pairs.emplace_back(doc.universe[i], doc.universe[j]);
  return doc;
}

}  // namespace bitten
