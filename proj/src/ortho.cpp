#include "bitten/ortho.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bitten {

namespace {

bool antichain(const std::vector<Bits>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j && fam[i] != fam[j] && fam[i].is_subset_of(fam[j])) return false;
  return true;
}

std::vector<Bits> dedup(std::vector<Bits> fam) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// Normal-system test: every subset not inside a member has a two-element
// subset not inside a member. Equivalently, every set whose pairs are all
// covered lies inside some member.
bool pairwise_witness(std::size_t n, const std::vector<Bits>& fam) {
  if (n > 20) throw CapError("universe too large for the pairwise witness sweep");
  std::vector<std::vector<bool>> pair_covered(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const Bits& b : fam)
        if (b.test(i) && b.test(j)) {
          pair_covered[i][j] = true;
          break;
        }
  for (std::uint64_t a = 0; a < (1ull << n); ++a) {
    bool included = false;
    for (const Bits& b : fam) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if ((a >> i & 1) && !b.test(i)) inside = false;
      if (inside) {
        included = true;
        break;
      }
    }
    if (included) continue;
    bool has_pair_witness = false;
    for (std::size_t i = 0; i < n && !has_pair_witness; ++i)
      for (std::size_t j = i + 1; j < n && !has_pair_witness; ++j)
        if ((a >> i & 1) && (a >> j & 1) && !pair_covered[i][j]) has_pair_witness = true;
    if (!has_pair_witness) return false;
  }
  return true;
}

bool partition_family_ok(std::size_t n, const std::vector<Bits>& tau,
                         const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<Bits> fam;
  for (const auto& part : parts) {
    Bits b(n);
    for (std::size_t x : part) b |= tau[x];
    fam.push_back(b);
  }
  fam = dedup(std::move(fam));
  return antichain(fam) && pairwise_witness(n, fam);
}

// Restricted-growth enumeration of set partitions, capped.
void enumerate_partitions(std::size_t n, std::size_t cap,
                          std::vector<std::vector<std::vector<std::size_t>>>& out) {
  std::vector<std::size_t> rg(n, 0);
  while (true) {
    std::size_t blocks = 0;
    for (std::size_t v : rg) blocks = std::max(blocks, v + 1);
    std::vector<std::vector<std::size_t>> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[rg[i]].push_back(i);
    out.push_back(parts);
    if (out.size() >= cap) return;
    // next restricted-growth string
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t maxv = 0;
      for (std::size_t j = 0; j < i; ++j) maxv = std::max(maxv, rg[j]);
      if (rg[i] <= maxv) {
        ++rg[i];
        for (std::size_t j = i + 1; j < n; ++j) rg[j] = 0;
        break;
      }
      if (i == 1) return;
      rg[i] = 0;
    }
    if (n == 1) return;
  }
}

}  // namespace

OrthoNormalWitness is_ortho_normal_cover(const std::vector<Bits>& tau,
                                         const OrthoOptions& opt) {
  OrthoNormalWitness w;
  const std::size_t n = tau.size();
  if (n == 0) return w;

  w.clause1 = true;
  for (std::size_t x = 0; x < n; ++x)
    if (!tau[x].test(x)) w.clause1 = false;

  Bits unioned(n);
  for (const Bits& b : tau) unioned |= b;
  w.clause2 = unioned.count() == n;

  std::vector<Bits> as_set = dedup(tau);
  w.clause3 = antichain(as_set);

  w.derived_b = as_set;  // identity partition
  if (w.clause3) w.clause4 = pairwise_witness(n, as_set);

  // Supplementary sweep over other partitions; informational.
  std::vector<std::vector<std::vector<std::size_t>>> parts;
  enumerate_partitions(n, opt.partition_cap, parts);
  if (parts.size() >= opt.partition_cap) {
    std::mt19937_64 rng(opt.seed);
    parts.resize(opt.sample_count);
    for (auto& p : parts) {
      std::size_t blocks = 1 + rng() % n;
      p.assign(blocks, {});
      for (std::size_t i = 0; i < n; ++i) p[rng() % blocks].push_back(i);
      p.erase(std::remove_if(p.begin(), p.end(),
                             [](const auto& part) { return part.empty(); }),
              p.end());
    }
  }
  for (const auto& p : parts) {
    ++w.partitions_checked;
    if (partition_family_ok(n, tau, p)) ++w.partitions_passed;
  }
  return w;
}

namespace {

std::vector<Bits> block_indexed_family(const ToleranceRelation& t) {
  auto bs = blocks(t);
  const std::size_t n = t.size();
  std::vector<Bits> tau(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& b : bs)
      if (b.mask >> x & 1) {
        for (std::size_t i = 0; i < n; ++i)
          if (b.mask >> i & 1) tau[x].set(i);
        break;  // blocks are sorted; first containing block
      }
  }
  return tau;
}

}  // namespace

RefinedCheckReport refined_check(const BiteModel& model, std::size_t max_universe) {
  RefinedCheckReport rep;

  // H0: minimal diamonds of the definable elements with nonbottom L;
  // H: the elements whose diamond is minimal.
  std::vector<BiteModel::Value> diamonds;
  for (auto v : model.carrier()) {
    if (!model.xi(v)) continue;
    auto l = model.op1(Sym::QLower, v);
    if (!l || *l == model.bot() || *l == model.zero_class()) continue;
    auto d = model.op1(Sym::QDiamond, v);
    if (d) diamonds.push_back(*d);
  }
  std::sort(diamonds.begin(), diamonds.end());
  diamonds.erase(std::unique(diamonds.begin(), diamonds.end()), diamonds.end());
  std::vector<BiteModel::Value> h0;
  for (auto d : diamonds) {
    bool minimal = true;
    for (auto e : diamonds)
      if (e != d && model.mask_of(e).is_subset_of(model.mask_of(d))) {
        minimal = false;
        break;
      }
    if (minimal) h0.push_back(d);
  }
  std::vector<BiteModel::Value> h;
  for (auto v : model.carrier()) {
    if (!model.xi(v)) continue;
    auto l = model.op1(Sym::QLower, v);
    if (!l || *l == model.bot() || *l == model.zero_class()) continue;
    auto d = model.op1(Sym::QDiamond, v);
    if (d && std::find(h0.begin(), h0.end(), *d) != h0.end()) h.push_back(v);
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  rep.h0_size = h0.size();
  rep.h_size = h.size();

  if (h.empty()) {
    rep.vacuous = true;
    rep.note = "H is empty; no tolerance space to search for";
    return rep;
  }
  const std::size_t n = rep.h_size;
  if (n > max_universe || n > 6) {
    rep.bound_exceeded = true;
    rep.note = "search bound exceeded for |H| = " + std::to_string(n);
    return rep;
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  Universe u(names);

  const std::size_t edges = n * (n - 1) / 2;
  for (std::uint64_t sel = 0; sel < (1ull << edges); ++sel) {
    ++rep.candidates_tried;
    std::vector<Mask> nbr(n, 0);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++e)
        if (sel >> e & 1) {
          nbr[i] |= Mask{1} << j;
          nbr[j] |= Mask{1} << i;
        }
    ToleranceRelation t(u, nbr);
    auto tau = block_indexed_family(t);
    OrthoOptions oo;
    oo.partition_cap = 64;  // verdict comes from the identity partition
    if (!is_ortho_normal_cover(tau, oo).ok()) continue;
    QuotientPoset q(granulation(t, GranulationKind::TRelateds));
    if (q.class_count() != model.class_poset().size()) continue;
    if (!posets_isomorphic(quotient_order_poset(q), model.class_poset())) continue;
    rep.witness_found = true;
    rep.witness_neighbours = nbr;
    rep.note = "witness tolerance found on " + std::to_string(n) + " points";
    return rep;
  }
  rep.note = "search exhausted without witness";
  return rep;
}

}  // namespace bitten
