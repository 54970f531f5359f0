#include "bitten/sgba.hpp"

#include <algorithm>
#include <random>

#include "bitten/space.hpp"

namespace bitten {

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ChoiceFunction::ChoiceFunction(const QuotientPoset& q, ChoiceRule rule, std::uint64_t seed,
                               CoherenceMode mode)
    : q_(&q), mode_(mode), seed_(seed) {
  const std::size_t c = q.class_count();
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<std::size_t>& set) -> std::size_t {
    if (rule == ChoiceRule::LexMin) return *std::min_element(set.begin(), set.end());
    return set[rng() % set.size()];
  };
  for (std::size_t a = 0; a < c; ++a) table_[{a}] = a;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a; b < c; ++b) {
      auto ub = sorted(q.ub_min(a, b));
      auto lb = sorted(q.lb_max(a, b));
      if (ub.empty() || lb.empty())
        throw InputError("bound set empty; quotient is not directed");
      // Coherence forces the choice on comparable pairs; those bound sets
      // are singletons, so the singleton axiom already decides them.
      if (!table_.count(ub)) table_[ub] = pick(ub);
      if (!table_.count(lb)) table_[lb] = pick(lb);
      if (mode_ == CoherenceMode::Cones && (q.leq(a, b) || q.leq(b, a))) {
        std::vector<std::size_t> upper, lower;
        for (std::size_t m = 0; m < c; ++m) {
          if (q.leq(a, m) && q.leq(b, m)) upper.push_back(m);
          if (q.leq(m, a) && q.leq(m, b)) lower.push_back(m);
        }
        table_[sorted(upper)] = q.leq(a, b) ? b : a;
        table_[sorted(lower)] = q.leq(a, b) ? a : b;
      }
    }
}

std::size_t ChoiceFunction::choose(const std::vector<std::size_t>& set) const {
  auto key = sorted(set);
  if (key.size() == 1) return key[0];
  auto it = table_.find(key);
  if (it == table_.end()) throw InputError("choice function queried outside its table");
  return it->second;
}

void ChoiceFunction::validate() const {
  for (const auto& [set, chosen] : table_) {
    if (set.size() == 1 && chosen != set[0])
      throw InputError("choice violates the singleton axiom");
    if (std::find(set.begin(), set.end(), chosen) == set.end())
      throw InputError("choice outside its set");
  }
  const auto& q = *q_;
  for (std::size_t a = 0; a < q.class_count(); ++a)
    for (std::size_t b = 0; b < q.class_count(); ++b) {
      if (!q.leq(a, b)) continue;
      if (choose(q.ub_min(a, b)) != b || choose(q.lb_max(a, b)) != a)
        throw InputError("choice is not lattice-coherent");
    }
}

ChoiceFunction make_choice(const QuotientPoset& q, ChoiceRule rule, std::uint64_t seed,
                           CoherenceMode mode) {
  ChoiceFunction cf(q, rule, seed, mode);
  cf.validate();
  return cf;
}

SgbaModel build_sgba(const QuotientPoset& q, const ChoiceFunction& lambda) {
  const std::size_t c = q.class_count();
  SgbaModel m;
  m.q = &q;
  m.seed = lambda.seed();
  m.plus.assign(c, std::vector<std::size_t>(c, 0));
  m.times.assign(c, std::vector<std::size_t>(c, 0));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      m.plus[a][b] = lambda.choose(q.ub_min(a, b));
      m.times[a][b] = lambda.choose(q.lb_max(a, b));
    }
  return m;
}

SgbaReport sgba_law_report(const SgbaModel& m) {
  const QuotientPoset& q = *m.q;
  const std::size_t c = q.class_count();
  SgbaReport rep;
  auto item = [&](const std::string& id) -> LawResult& {
    rep.items.push_back(LawResult{id, true, {}});
    return rep.items.back();
  };
  auto fail = [&](LawResult& l, std::size_t a, std::size_t b) {
    l.holds = false;
    if (l.counterexamples.size() < 4)
      l.counterexamples.push_back("classes (" + std::to_string(a) + "," + std::to_string(b) + ")");
  };
  auto P = [&](std::size_t a, std::size_t b) { return m.plus[a][b]; };
  auto T = [&](std::size_t a, std::size_t b) { return m.times[a][b]; };
  auto L = [&](std::size_t a) { return q.l_class(a); };
  auto D = [&](std::size_t a) { return q.diamond_class(a); };

  LawResult& i1 = item("1");
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (P(a, b) != P(b, a) || T(a, b) != T(b, a)) fail(i1, a, b);
      if (P(a, a) != a || T(a, a) != a) fail(i1, a, a);
      if (T(a, P(a, b)) != a || P(a, T(a, b)) != a) fail(i1, a, b);
      for (std::size_t e = 0; e < c; ++e) {
        if (T(a, T(T(a, b), e)) != T(T(a, b), e)) fail(i1, a, b);
        if (P(a, P(P(a, b), e)) != P(P(a, b), e)) fail(i1, a, b);
      }
    }

  LawResult& i2 = item("2");
  LawResult& i3 = item("3");
  LawResult& i4 = item("4");
  LawResult& i5 = item("5");
  for (std::size_t a = 0; a < c; ++a) {
    if (P(a, a) != a || T(a, a) != a) fail(i3, a, a);
    for (std::size_t b = 0; b < c; ++b) {
      if (P(a, b) != P(b, a) || T(a, b) != T(b, a)) fail(i2, a, b);
      if (P(a, T(a, b)) != a || T(a, P(a, b)) != a) fail(i4, a, b);
      for (std::size_t e = 0; e < c; ++e) {
        if (P(a, P(a, P(b, e))) != P(a, P(b, e))) fail(i5, a, b);
        if (T(a, T(a, T(b, e))) != T(a, T(b, e))) fail(i5, a, b);
      }
    }
  }

  LawResult& i6 = item("6");
  LawResult& i7 = item("7");
  LawResult& i8 = item("8");
  for (std::size_t a = 0; a < c; ++a) {
    if (P(a, L(a)) != a || T(a, L(a)) != L(a)) fail(i6, a, a);
    if (P(a, D(a)) != D(a) || T(a, D(a)) != a) fail(i7, a, a);
    if (L(L(a)) != L(a) || D(D(a)) != D(a)) fail(i8, a, a);
  }

  LawResult& i9 = item("9");
  LawResult& i10 = item("10");
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (P(a, b) == a) {
        if (P(L(a), L(b)) != L(a)) fail(i9, a, b);
        if (P(D(a), D(b)) != D(a)) fail(i10, a, b);
      }
      if (T(a, b) == a) {
        if (T(L(a), L(b)) != L(a)) fail(i9, a, b);
        if (T(D(a), D(b)) != D(a)) fail(i10, a, b);
      }
    }

  LawResult& i11 = item("11");
  for (std::size_t a = 0; a < c; ++a) {
    auto na = q.neg_class(a);
    if (!na) continue;  // partiality guard
    auto nla = q.neg_class(L(a));
    auto nda = q.neg_class(D(a));
    if (nla && *nla != D(*na)) fail(i11, a, a);
    if (nda && *nda != L(*na)) fail(i11, a, a);
  }

  LawResult& i12 = item("12");
  if (L(q.bottom()) != q.bottom() || L(q.top()) != q.top()) fail(i12, q.bottom(), q.top());
  if (D(q.bottom()) != q.bottom() || D(q.top()) != q.top()) fail(i12, q.bottom(), q.top());

  LawResult& i13 = item("13");
  LawResult& i14 = item("14");
  for (std::size_t a = 0; a < c; ++a) {
    std::size_t da = D(a), la = L(a);
    if (P(L(da), da) != da || T(L(da), da) != L(da)) fail(i13, a, a);
    if (P(la, D(la)) != D(la) || T(la, D(la)) != la) fail(i14, a, a);
  }

  return rep;
}

std::vector<std::size_t> minimal_granule_classes(const QuotientPoset& q) {
  const std::size_t c = q.class_count();
  std::vector<std::size_t> with_lower;
  for (std::size_t a = 0; a < c; ++a)
    if (q.l_class(a) != q.bottom()) with_lower.push_back(a);
  std::vector<std::size_t> out;
  for (std::size_t a : with_lower) {
    bool minimal = true;
    for (std::size_t b : with_lower)
      if (b != a && q.leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

ReconstructionReport reconstruction_probe(const QuotientPoset& q,
                                          const std::vector<SgbaModel>& models) {
  ReconstructionReport rep;
  rep.models = models.size();
  rep.block_uniqueness = "not established";
  if (models.empty()) return rep;

  const std::size_t c = q.class_count();
  // a <= b exactly when a + b = b under every coherent choice.
  bool matches_order = true;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      bool forced = true;
      for (const auto& m : models)
        if (m.plus[a][b] != b) {
          forced = false;
          break;
        }
      if (forced) rep.recovered_leq.emplace_back(a, b);
      if (forced != q.leq(a, b)) matches_order = false;
    }
  rep.order_recovered = matches_order;

  rep.minimal_classes = minimal_granule_classes(q);
  for (std::size_t a : rep.minimal_classes) rep.block_candidates.push_back(q.cls(a).lower);

  // Regenerate a tolerance from the candidates and compare block families.
  const Universe& u = q.universe();
  Mask covered = 0;
  for (Mask b : rep.block_candidates) covered |= b;
  if (covered == u.full_mask()) {
    std::vector<Mask> nbr(u.size(), 0);
    for (Mask b : rep.block_candidates)
      for (std::size_t i = 0; i < u.size(); ++i)
        if (b >> i & 1) nbr[i] |= b;
    ToleranceRelation t(u, nbr);
    auto bs = blocks(t);
    std::vector<Mask> bm;
    for (const auto& b : bs) bm.push_back(b.mask);
    std::vector<Mask> cand = rep.block_candidates;
    std::sort(cand.begin(), cand.end());
    rep.blocks_consistent = bm == cand;
  }
  return rep;
}

}  // namespace bitten
