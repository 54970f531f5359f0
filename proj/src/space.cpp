#include "bitten/space.hpp"

#include <algorithm>
#include <set>

namespace bitten {

ToleranceRelation::ToleranceRelation(const Universe& u, std::vector<Mask> neighbours)
    : u_(&u), nbr_(std::move(neighbours)) {
  const std::size_t n = u.size();
  if (nbr_.size() != n) throw InputError("tolerance matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    nbr_[i] |= Mask{1} << i;
    nbr_[i] &= u.full_mask();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (((nbr_[i] >> j) & 1) != ((nbr_[j] >> i) & 1))
        throw InputError("tolerance relation must be symmetric");
}

ToleranceRelation tolerance_from_pairs(
    const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Mask> nbr(u.size(), 0);
  for (const auto& [a, b] : pairs) {
    std::size_t i = u.index(a), j = u.index(b);
    nbr[i] |= Mask{1} << j;
    nbr[j] |= Mask{1} << i;
  }
  return ToleranceRelation(u, std::move(nbr));
}

ToleranceRelation identity_tolerance(const Universe& u) {
  return ToleranceRelation(u, std::vector<Mask>(u.size(), 0));
}

ToleranceRelation full_tolerance(const Universe& u) {
  return ToleranceRelation(u, std::vector<Mask>(u.size(), u.full_mask()));
}

Subset t_related(const ToleranceRelation& t, std::size_t i) {
  return Subset(t.universe(), t.neighbours(i));
}

Subset t_related(const ToleranceRelation& t, const std::string& x) {
  return t_related(t, t.universe().index(x));
}

namespace {

bool is_clique(const ToleranceRelation& t, Mask m) {
  Mask rest = m;
  while (rest) {
    std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rest));
    if ((m & ~t.neighbours(i)) != 0) return false;
    rest &= rest - 1;
  }
  return true;
}

std::vector<Mask> maximal_members(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Mask> maximal;
  for (Mask m : family) {
    bool dominated = false;
    for (Mask o : family)
      if (o != m && (m & ~o) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  return maximal;
}

std::vector<Subset> to_subsets(const Universe& u, const std::vector<Mask>& ms) {
  std::vector<Subset> out;
  out.reserve(ms.size());
  for (Mask m : ms) out.emplace_back(u, m);
  return out;
}

// Bron-Kerbosch with pivoting over the strict (loop-free) adjacency.
void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                   std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  Mask best = 0;
  int best_count = -1;
  Mask rest = px;
  while (rest) {
    std::size_t v = static_cast<std::size_t>(__builtin_ctzll(rest));
    int cnt = __builtin_popcountll(p & adj[v]);
    if (cnt > best_count) {
      best_count = cnt;
      best = adj[v];
    }
    rest &= rest - 1;
  }
  Mask cand = p & ~best;
  while (cand) {
    std::size_t v = static_cast<std::size_t>(__builtin_ctzll(cand));
    Mask vm = Mask{1} << v;
    bron_kerbosch(adj, r | vm, p & adj[v], x & adj[v], out);
    p &= ~vm;
    x |= vm;
    cand &= cand - 1;
  }
}

}  // namespace

std::vector<Subset> blocks(const ToleranceRelation& t) {
  std::vector<Mask> adj(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    adj[i] = t.neighbours(i) & ~(Mask{1} << i);
  std::vector<Mask> cliques;
  bron_kerbosch(adj, 0, t.universe().full_mask(), 0, cliques);
  std::sort(cliques.begin(), cliques.end());
  return to_subsets(t.universe(), cliques);
}

std::vector<Subset> mu_blocks(const ToleranceRelation& t) {
  const std::size_t n = t.size();
  // Seed with the T-relateds, close under pairwise intersection, keep the
  // members on which the relation is total, then take maximal elements.
  std::set<Mask> inters;
  for (std::size_t i = 0; i < n; ++i) inters.insert(t.neighbours(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(inters.begin(), inters.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b)
        if (inters.insert(cur[a] & cur[b]).second) grew = true;
  }
  std::vector<Mask> total;
  for (Mask m : inters)
    if (is_clique(t, m)) total.push_back(m);
  auto maximal = maximal_members(std::move(total));
  std::sort(maximal.begin(), maximal.end());
  return to_subsets(t.universe(), maximal);
}

std::vector<Subset> theta0(const ToleranceRelation& t) {
  const std::size_t n = t.size();
  std::vector<Mask> dom(n, t.universe().full_mask());
  for (std::size_t x = 0; x < n; ++x) {
    Mask g = t.neighbours(x);
    for (std::size_t z = 0; z < n; ++z)
      if (g >> z & 1) dom[z] &= g;
  }
  std::vector<Mask> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Mask cls = 0;
    for (std::size_t j = i; j < n; ++j)
      if (!seen[j] && dom[j] == dom[i]) {
        cls |= Mask{1} << j;
        seen[j] = true;
      }
    classes.push_back(cls);
  }
  return to_subsets(t.universe(), classes);
}

std::string to_string(GranulationKind k) {
  switch (k) {
    case GranulationKind::TRelateds: return "t-relateds";
    case GranulationKind::Blocks: return "blocks";
    case GranulationKind::BlockIntersections: return "block-intersections";
    case GranulationKind::Explicit: return "explicit";
  }
  return "?";
}

Granulation::Granulation(const Universe& u, std::vector<Mask> granules,
                         GranulationKind kind)
    : u_(&u), granules_(std::move(granules)), kind_(kind) {
  std::sort(granules_.begin(), granules_.end());
  granules_.erase(std::unique(granules_.begin(), granules_.end()), granules_.end());
  Mask cover = 0;
  for (Mask g : granules_) cover |= g;
  if (cover != u.full_mask())
    throw InputError("granulation does not cover the universe");
}

std::vector<Mask> block_intersections(const ToleranceRelation& t) {
  auto bs = blocks(t);
  std::set<Mask> out;
  out.insert(t.universe().full_mask());  // empty-subfamily convention
  const std::size_t k = bs.size();
  if (k > 24) throw CapError("too many blocks for subfamily enumeration");
  for (Mask fam = 1; fam < (Mask{1} << k); ++fam) {
    Mask inter = t.universe().full_mask();
    Mask rest = fam;
    while (rest) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rest));
      inter &= bs[i].mask;
      rest &= rest - 1;
    }
    out.insert(inter);
  }
  return std::vector<Mask>(out.begin(), out.end());
}

Granulation granulation(const ToleranceRelation& t, GranulationKind kind) {
  const Universe& u = t.universe();
  switch (kind) {
    case GranulationKind::TRelateds: {
      std::vector<Mask> g;
      for (std::size_t i = 0; i < t.size(); ++i) g.push_back(t.neighbours(i));
      return Granulation(u, std::move(g), kind);
    }
    case GranulationKind::Blocks: {
      std::vector<Mask> g;
      for (const auto& b : blocks(t)) g.push_back(b.mask);
      return Granulation(u, std::move(g), kind);
    }
    case GranulationKind::BlockIntersections:
      return Granulation(u, block_intersections(t), kind);
    case GranulationKind::Explicit:
      throw InputError("explicit granulation requires an explicit family");
  }
  throw InputError("unknown granulation kind");
}

Granulation explicit_granulation(const Universe& u, std::vector<Mask> granules) {
  return Granulation(u, std::move(granules), GranulationKind::Explicit);
}

}  // namespace bitten
