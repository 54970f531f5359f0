#include "bitten/quotient.hpp"

#include <map>

namespace bitten {

QuotientPoset::QuotientPoset(const Granulation& g, const QuotientOptions& opt) : g_(&g) {
  const Universe& u = g.universe();
  const std::size_t n = u.size();
  if (n > opt.max_universe) throw CapError("universe too large for quotient construction");

  const Mask full = u.full_mask();
  class_of_.assign(std::size_t{1} << n, 0);
  std::map<std::pair<Mask, Mask>, std::size_t> by_signature;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    Mask lo = gr_lower(g, x);
    Mask bit = bitten_upper(g, x);
    auto key = std::make_pair(lo, bit);
    auto it = by_signature.find(key);
    std::size_t id;
    if (it == by_signature.end()) {
      id = classes_.size();
      if (id >= opt.max_classes) throw CapError("class count exceeds table cap");
      by_signature.emplace(key, id);
      classes_.push_back(RoughClass{lo, bit, {}});
    } else {
      id = it->second;
    }
    classes_[id].members.push_back(x);
    class_of_[x] = static_cast<std::uint32_t>(id);
  }

  const std::size_t c = classes_.size();
  leq_.assign(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      leq_[a][b] = (classes_[a].lower & ~classes_[b].lower) == 0 &&
                   (classes_[a].bitten & ~classes_[b].bitten) == 0;

  bottom_ = class_of_[0];
  top_ = class_of_[full];

  lcls_.resize(c);
  dcls_.resize(c);
  ncls_.resize(c);
  for (std::size_t a = 0; a < c; ++a) {
    lcls_[a] = class_of_[classes_[a].lower];
    dcls_[a] = class_of_[classes_[a].bitten];
    std::optional<std::size_t> neg;
    bool consistent = true;
    for (Mask m : classes_[a].members) {
      std::size_t nc = class_of_[~m & full];
      if (!neg)
        neg = nc;
      else if (*neg != nc) {
        consistent = false;
        break;
      }
    }
    ncls_[a] = consistent ? neg : std::nullopt;
  }

  meet_.assign(c, std::vector<std::int32_t>(c, -1));
  join_.assign(c, std::vector<std::int32_t>(c, -1));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      // infimum: a lower bound above every lower bound
      std::int32_t inf = -1, sup = -1;
      for (std::size_t m = 0; m < c && inf < 0; ++m) {
        if (!(leq_[m][a] && leq_[m][b])) continue;
        bool greatest = true;
        for (std::size_t w = 0; w < c && greatest; ++w)
          if (leq_[w][a] && leq_[w][b] && !leq_[w][m]) greatest = false;
        if (greatest) inf = static_cast<std::int32_t>(m);
      }
      for (std::size_t m = 0; m < c && sup < 0; ++m) {
        if (!(leq_[a][m] && leq_[b][m])) continue;
        bool least = true;
        for (std::size_t w = 0; w < c && least; ++w)
          if (leq_[a][w] && leq_[b][w] && !leq_[m][w]) least = false;
        if (least) sup = static_cast<std::int32_t>(m);
      }
      meet_[a][b] = inf;
      join_[a][b] = sup;
    }
  }
}

bool QuotientPoset::leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

std::optional<std::size_t> QuotientPoset::neg_class(std::size_t c) const { return ncls_[c]; }

std::optional<std::size_t> QuotientPoset::meet(std::size_t a, std::size_t b) const {
  std::int32_t m = meet_[a][b];
  if (m < 0) return std::nullopt;
  return static_cast<std::size_t>(m);
}

std::optional<std::size_t> QuotientPoset::join(std::size_t a, std::size_t b) const {
  std::int32_t m = join_[a][b];
  if (m < 0) return std::nullopt;
  return static_cast<std::size_t>(m);
}

std::vector<std::pair<std::size_t, std::size_t>> QuotientPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t c = classes_.size();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < c && covered; ++m)
        if (m != a && m != b && leq_[a][m] && leq_[m][b]) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

std::vector<std::size_t> QuotientPoset::ub_min(std::size_t a, std::size_t b) const {
  const std::size_t c = classes_.size();
  std::vector<std::size_t> ub;
  for (std::size_t m = 0; m < c; ++m)
    if (leq_[a][m] && leq_[b][m]) ub.push_back(m);
  std::vector<std::size_t> out;
  for (std::size_t m : ub) {
    bool minimal = true;
    for (std::size_t o : ub)
      if (o != m && leq_[o][m]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> QuotientPoset::lb_max(std::size_t a, std::size_t b) const {
  const std::size_t c = classes_.size();
  std::vector<std::size_t> lb;
  for (std::size_t m = 0; m < c; ++m)
    if (leq_[m][a] && leq_[m][b]) lb.push_back(m);
  std::vector<std::size_t> out;
  for (std::size_t m : lb) {
    bool maximal = true;
    for (std::size_t o : lb)
      if (o != m && leq_[m][o]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  return out;
}

QuotientTheoremReport quotient_theorem_report(const QuotientPoset& q) {
  QuotientTheoremReport rep;
  const std::size_t c = q.class_count();
  auto item = [&](const std::string& id) -> LawResult& {
    rep.items.push_back(LawResult{id, true, {}});
    return rep.items.back();
  };
  auto fail = [&](LawResult& l, std::size_t a, std::size_t b) {
    l.holds = false;
    if (l.counterexamples.size() < 4)
      l.counterexamples.push_back("classes (" + std::to_string(a) + "," + std::to_string(b) + ")");
  };

  LawResult& i1 = item("1");
  LawResult& i4 = item("4");
  LawResult& i5 = item("5");
  for (std::size_t x = 0; x < c; ++x)
    for (std::size_t y = 0; y < c; ++y) {
      std::size_t dx = q.diamond_class(x), dy = q.diamond_class(y);
      auto a = q.join(dx, dy);
      auto jxy = q.join(x, y);
      if (a && jxy) {
        std::size_t b = q.diamond_class(*jxy);
        if (!q.leq(*a, b)) fail(i1, x, y);
      }
      auto m = q.meet(dx, dy);
      auto mxy = q.meet(x, y);
      if (m && mxy) {
        std::size_t b = q.diamond_class(*mxy);
        if (!q.leq(b, *m)) fail(i4, x, y);
      }
      std::size_t lx = q.l_class(x), ly = q.l_class(y);
      auto lj = q.join(lx, ly);
      if (lj && jxy) {
        std::size_t b = q.l_class(*jxy);
        if (!q.leq(*lj, b)) fail(i5, x, y);
      }
    }

  LawResult& i2 = item("2");
  LawResult& i3 = item("3");
  LawResult& i6 = item("6");
  LawResult& i7 = item("7");
  for (std::size_t x = 0; x < c; ++x) {
    std::size_t dx = q.diamond_class(x);
    auto m = q.meet(x, dx);
    if (!m || *m != x) fail(i2, x, x);
    if (q.diamond_class(dx) != dx) fail(i3, x, x);
    std::size_t lx = q.l_class(x);
    auto m6 = q.meet(lx, q.diamond_class(lx));
    if (!m6 || *m6 != lx) fail(i6, x, x);
    auto j7 = q.join(dx, q.l_class(dx));
    if (!j7 || *j7 != dx) fail(i7, x, x);
  }

  LawResult& i8 = item("8");
  LawResult& i9 = item("9");
  for (std::size_t x = 0; x < c; ++x) {
    std::size_t dx = q.diamond_class(x), lx = q.l_class(x);
    auto ndx = q.neg_class(dx);
    auto nx = q.neg_class(x);
    if (ndx && nx) {
      if (*ndx != q.l_class(*nx)) fail(i8, x, x);
    }
    auto nlx = q.neg_class(lx);
    if (nlx && nx) {
      if (*nlx != q.diamond_class(*nx)) fail(i9, x, x);
    }
  }
  return rep;
}

}  // namespace bitten
