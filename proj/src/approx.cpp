#include "bitten/approx.hpp"

#include <random>
#include <set>

namespace bitten {

Mask gr_lower(const Granulation& g, Mask x) {
  Mask r = 0;
  for (Mask a : g.granules())
    if ((a & ~x) == 0) r |= a;
  return r;
}

Mask gr_upper(const Granulation& g, Mask x) {
  Mask r = 0;
  for (Mask a : g.granules())
    if (a & x) r |= a;
  return r;
}

Mask gr_negative(const Granulation& g, Mask x) {
  return gr_lower(g, ~x & g.universe().full_mask());
}

Mask bitten_upper(const Granulation& g, Mask x) {
  return gr_upper(g, x) & ~gr_negative(g, x);
}

Subset gr_lower(const Granulation& g, const Subset& x) {
  require_same(g, x);
  return Subset(g.universe(), gr_lower(g, x.mask));
}

Subset gr_upper(const Granulation& g, const Subset& x) {
  require_same(g, x);
  return Subset(g.universe(), gr_upper(g, x.mask));
}

Subset bitten_upper(const Granulation& g, const Subset& x) {
  require_same(g, x);
  return Subset(g.universe(), bitten_upper(g, x.mask));
}

ApproximationProfile profile(const Granulation& g, const Subset& x) {
  require_same(g, x);
  const Universe& u = g.universe();
  Mask lo = gr_lower(g, x.mask);
  Mask up = gr_upper(g, x.mask);
  Mask neg = gr_negative(g, x.mask);
  Mask bit = up & ~neg;
  return ApproximationProfile{x,
                              Subset(u, lo),
                              Subset(u, up),
                              Subset(u, neg),
                              Subset(u, bit),
                              Subset(u, bit & ~lo)};
}

bool is_definable(const Granulation& g, Mask x) { return gr_lower(g, x) == x; }

bool is_crisp(const Granulation& g, Mask x) {
  return gr_lower(g, x) == bitten_upper(g, x);
}

Mask star_lower(const ToleranceRelation& t, Mask x) {
  Mask r = 0;
  const std::size_t n = t.size();
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!t.related(z, y)) continue;
      if ((t.neighbours(y) & ~x) == 0) {
        r |= Mask{1} << z;
        break;
      }
    }
  }
  return r;
}

Mask star_upper(const ToleranceRelation& t, Mask x) {
  Mask r = 0;
  const std::size_t n = t.size();
  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      if (t.related(z, y) && (t.neighbours(y) & x) == 0) ok = false;
    if (ok) r |= Mask{1} << z;
  }
  return r;
}

Mask sharp(const ToleranceRelation& t, Mask x) {
  Mask reach = 0;
  Mask rest = x;
  while (rest) {
    std::size_t y = static_cast<std::size_t>(__builtin_ctzll(rest));
    reach |= t.neighbours(y);
    rest &= rest - 1;
  }
  return ~reach & t.universe().full_mask();
}

Mask preclusive_lower(const ToleranceRelation& t, Mask x) {
  Mask full = t.universe().full_mask();
  return ~sharp(t, sharp(t, ~x & full)) & full;
}

Mask preclusive_upper(const ToleranceRelation& t, Mask x) {
  return sharp(t, sharp(t, x));
}

namespace {

struct Sweep {
  std::vector<Mask> subsets;
};

Sweep make_sweep(const Granulation& g, const PropertyCheckOptions& opt) {
  const std::size_t n = g.universe().size();
  Sweep s;
  if (opt.exhaustive) {
    if (n > opt.max_universe)
      throw CapError("universe too large for exhaustive power-set sweep");
    s.subsets.reserve(std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) s.subsets.push_back(m);
  } else {
    std::mt19937_64 rng(opt.seed);
    Mask full = g.universe().full_mask();
    std::set<Mask> picked{0, full};
    while (picked.size() < opt.samples && picked.size() < (std::size_t{1} << std::min<std::size_t>(n, 63)))
      picked.insert(rng() & full);
    s.subsets.assign(picked.begin(), picked.end());
  }
  return s;
}

}  // namespace

PropertyReport property_report(const Granulation& g, const PropertyCheckOptions& opt) {
  const Universe& u = g.universe();
  const Mask full = u.full_mask();
  Sweep sweep = make_sweep(g, opt);

  PropertyReport rep;
  auto law = [&](const std::string& id) -> LawResult& {
    rep.laws.push_back(LawResult{id, true, {}});
    return rep.laws.back();
  };
  auto fail = [&](LawResult& l, const std::string& cx) {
    l.holds = false;
    if (l.counterexamples.size() < opt.max_counterexamples) l.counterexamples.push_back(cx);
  };

  auto lo = [&](Mask x) { return gr_lower(g, x); };
  auto bu = [&](Mask x) { return bitten_upper(g, x); };

  LawResult& l1a = law("1a");
  LawResult& l1b = law("1b");
  LawResult& l3a = law("3a");
  LawResult& l3b = law("3b");
  LawResult& l4a = law("4a");
  LawResult& l4b = law("4b");
  LawResult& l5a = law("5a");
  LawResult& l5b = law("5b");
  LawResult& l8a = law("8a");
  LawResult& l8b = law("8b");
  LawResult& l9a = law("9a");
  LawResult& l9b = law("9b");
  for (Mask x : sweep.subsets) {
    Mask lx = lo(x), bx = bu(x);
    if (lx & ~x) fail(l1a, u.render(x));
    if (x & ~bx) fail(l1b, u.render(x));
    if (lo(lx) != lx) fail(l5a, u.render(x));
    if (bu(bx) != bx) fail(l5b, u.render(x));
    if (lx & ~bu(lx)) fail(l8a, u.render(x));
    if (lo(bx) & ~bx) fail(l8b, u.render(x));
    if ((~lx & full) != bu(~x & full)) fail(l9a, u.render(x));
    if ((~bx & full) != lo(~x & full)) fail(l9b, u.render(x));
  }
  if (lo(0) != 0) fail(l3a, "{}");
  if (bu(0) != 0) fail(l3b, "{}");
  if (lo(full) != full) fail(l4a, u.render(full));
  if (bu(full) != full) fail(l4b, u.render(full));

  LawResult& l2a = law("2a");
  LawResult& l2b = law("2b");
  LawResult& l6a = law("6a");
  LawResult& l6b = law("6b");
  LawResult& l7a = law("7a");
  LawResult& l7b = law("7b");
  for (Mask x : sweep.subsets) {
    Mask lx = lo(x), bx = bu(x);
    for (Mask y : sweep.subsets) {
      Mask ly = lo(y), by = bu(y);
      std::string cx = u.render(x) + "," + u.render(y);
      if ((x & ~y) == 0) {
        if (lx & ~ly) fail(l2a, cx);
        if (bx & ~by) fail(l2b, cx);
      }
      if (lo(x & y) & ~(lx & ly)) fail(l6a, cx);
      if (bu(x & y) & ~(bx & by)) fail(l6b, cx);
      if ((lx | ly) & ~lo(x | y)) fail(l7a, cx);
      if ((bx | by) & ~bu(x | y)) fail(l7b, cx);
    }
  }

  // 10A/10B: the membership predicates against their defining equations.
  LawResult& l10a = law("10A");
  LawResult& l10b = law("10B");
  std::set<Mask> definable_by_unions;
  {
    // Union closure of the granule family = the granularly definable sets.
    std::set<Mask> cur{0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> snapshot(cur.begin(), cur.end());
      for (Mask m : snapshot)
        for (Mask a : g.granules())
          if (cur.insert(m | a).second) grew = true;
    }
    definable_by_unions = std::move(cur);
  }
  for (Mask x : sweep.subsets) {
    bool by_union = definable_by_unions.count(x) != 0;
    if (by_union != is_definable(g, x)) fail(l10a, u.render(x));
    bool crisp = is_crisp(g, x);
    Mask bound = bu(x) & ~lo(x);
    if (crisp != (bound == 0)) fail(l10b, u.render(x));
  }

  LawResult& l11a = law("11A");
  LawResult& l11b = law("11B");
  std::vector<Mask> definable, crisp;
  for (Mask x : sweep.subsets) {
    if (is_definable(g, x)) definable.push_back(x);
    if (is_crisp(g, x)) crisp.push_back(x);
  }
  for (Mask x : definable)
    for (Mask y : definable)
      if (!is_definable(g, x | y)) fail(l11a, u.render(x) + "," + u.render(y));
  for (Mask x : crisp)
    for (Mask y : crisp) {
      if (!is_crisp(g, x & y)) fail(l11b, u.render(x) + "&" + u.render(y));
      if (!is_crisp(g, x | y)) fail(l11b, u.render(x) + "|" + u.render(y));
    }

  return rep;
}

}  // namespace bitten
