#include "bitten/cover.hpp"

#include <random>
#include <set>

namespace bitten {

Mask l1(const CoverSystem& c, Mask x) {
  Mask r = 0;  // K_0 = empty contributes nothing
  for (Mask k : c.covers())
    if ((k & ~x) == 0) r |= k;
  return r;
}

Mask u2(const CoverSystem& c, Mask x) {
  const Mask full = c.universe().full_mask();
  Mask r = full;  // S \ K_0 = S always qualifies
  for (Mask k : c.covers()) {
    Mask comp = ~k & full;
    if ((x & ~comp) == 0) r &= comp;
  }
  return r;
}

Mask u1(const CoverSystem& c, Mask x) {
  const std::size_t n = c.universe().size();
  Mask r = 0;
  for (std::size_t z = 0; z < n; ++z) {
    Mask rest = x;
    bool inside = false;
    while (rest && !inside) {
      std::size_t e = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      bool all = true;
      for (Mask k : c.covers())
        if ((k >> e & 1) && !(k >> z & 1)) {
          all = false;
          break;
        }
      inside = all;  // K_{n+1} = S never separates e from z
    }
    if (inside) r |= Mask{1} << z;
  }
  return r;
}

Mask l2(const CoverSystem& c, Mask x) {
  const Mask full = c.universe().full_mask();
  const std::size_t n = c.universe().size();
  Mask r = 0;
  for (std::size_t z = 0; z < n; ++z) {
    Mask inter = full;  // z lies in K_{n+1} = S, so index n+1 never enters
    for (Mask k : c.covers())
      if (!(k >> z & 1)) inter &= ~k & full;
    if ((inter & ~x) == 0) r |= Mask{1} << z;
  }
  return r;
}

std::pair<Mask, Mask> au_rough(const CoverSystem& c, Mask x) {
  return {l1(c, x), u1(c, x)};
}

std::pair<Mask, Mask> ai_rough(const CoverSystem& c, Mask x) {
  return {l2(c, x), u2(c, x)};
}

namespace {

void check_cap(const CoverSystem& c, std::size_t max_subfamilies) {
  std::size_t n = c.size();
  if (n + 1 >= 63 || (std::size_t{1} << (n + 1)) > max_subfamilies)
    throw CapError("cover subfamily enumeration cap exceeded");
}

}  // namespace

Mask u1_enumerated(const CoverSystem& c, Mask x, std::size_t max_subfamilies) {
  check_cap(c, max_subfamilies);
  const Mask full = c.universe().full_mask();
  const std::size_t n = c.size();
  Mask r = full;
  for (std::uint64_t fam = 0; fam < (1ull << (n + 1)); ++fam) {
    Mask uni = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (fam >> i & 1) uni |= c.covers()[i];
    if (fam >> n & 1) uni = full;  // K_{n+1}
    if ((x & ~uni) == 0) r &= uni;
  }
  return r;
}

Mask l2_enumerated(const CoverSystem& c, Mask x, std::size_t max_subfamilies) {
  check_cap(c, max_subfamilies);
  const Mask full = c.universe().full_mask();
  const std::size_t n = c.size();
  Mask r = 0;
  for (std::uint64_t fam = 0; fam < (1ull << (n + 1)); ++fam) {
    Mask inter = full;
    for (std::size_t i = 0; i < n; ++i)
      if (fam >> i & 1) inter &= ~c.covers()[i] & full;
    if (fam >> n & 1) inter &= 0;  // S \ K_{n+1} = empty
    if ((inter & ~x) == 0) r |= inter;
  }
  return r;
}

BridgeReport bridge_check(const Granulation& g, const BridgeOptions& opt) {
  const Universe& u = g.universe();
  const std::size_t n = u.size();
  CoverSystem c(u, g.granules());

  BridgeReport rep;
  rep.granules_disjoint = true;
  for (std::size_t i = 0; i < g.size() && rep.granules_disjoint; ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.granules()[i] & g.granules()[j]) {
        rep.granules_disjoint = false;
        break;
      }

  std::vector<Mask> subsets;
  if (opt.exhaustive) {
    if (n > opt.max_universe) throw CapError("universe too large for exhaustive bridge check");
    for (Mask m = 0; m < (Mask{1} << n); ++m) subsets.push_back(m);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::set<Mask> picked{0, u.full_mask()};
    while (picked.size() < opt.samples) picked.insert(rng() & u.full_mask());
    subsets.assign(picked.begin(), picked.end());
  }

  auto note = [&](BridgeReport& r, const std::string& what, Mask x) {
    if (r.counterexamples.size() < 8) r.counterexamples.push_back(what + " at X=" + u.render(x));
  };
  for (Mask x : subsets) {
    Mask glo = gr_lower(g, x), gup = gr_upper(g, x), gbit = bitten_upper(g, x);
    Mask xl1 = l1(c, x), xu1 = u1(c, x), xu2 = u2(c, x);
    if (xl1 != glo) {
      rep.claim1 = false;
      note(rep, "l1 != lower", x);
    }
    if (xu1 & ~gup) {
      rep.claim2 = false;
      note(rep, "u1 not within upper", x);
    }
    if (gbit != (gup & xu2)) {
      rep.claim3 = false;
      note(rep, "bitten != upper /\\ u2", x);
    }
    if (rep.granules_disjoint && xu1 != gup) {
      rep.partition_equality = false;
      note(rep, "u1 != upper on disjoint granules", x);
    }
  }
  return rep;
}

}  // namespace bitten
