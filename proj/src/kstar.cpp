#include "bitten/kstar.hpp"

#include <algorithm>
#include <set>

namespace bitten {

KStar::KStar(Poset k, std::size_t cap) : k_(std::move(k)) {
  maps_ = enumerate_upsets(k_, cap);
  for (std::size_t i = 0; i < maps_.size(); ++i) index_.emplace(maps_[i], static_cast<int>(i));
  const std::size_t n = k_.size();
  up_at_.assign(n, Bits(maps_.size()));
  lo_at_.assign(n, Bits(maps_.size()));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < maps_.size(); ++i)
      (maps_[i].test(p) ? up_at_[p] : lo_at_[p]).set(i);
}

int KStar::index_of(const Bits& upset) const {
  auto it = index_.find(upset);
  return it == index_.end() ? -1 : it->second;
}

Bits KStar::family_without_constants() const {
  Bits fam = full_family();
  int zero = index_of(Bits(k_.size()));
  int one = index_of(Bits(k_.size(), true));
  if (zero >= 0) fam.reset(static_cast<std::size_t>(zero));
  if (one >= 0) fam.reset(static_cast<std::size_t>(one));
  return fam;
}

KStar enumerate_kstar(Poset k, std::size_t cap) { return KStar(std::move(k), cap); }

namespace {

Bits zeros_of(const KStar& ks, const Bits& a) {
  Bits f(ks.poset().size(), true);
  a.for_each([&](std::size_t i) { f -= ks.map_upset(i); });
  return f;
}

Bits ones_of(const KStar& ks, const Bits& a) {
  Bits f(ks.poset().size(), true);
  a.for_each([&](std::size_t i) { f &= ks.map_upset(i); });
  return f;
}

}  // namespace

bool is_A_ideal(const KStar& ks, const Bits& f, const Bits& a) {
  return f == zeros_of(ks, a);
}

bool is_A_filter(const KStar& ks, const Bits& f, const Bits& a) {
  return f == ones_of(ks, a);
}

bool is_full(const KStar& ks, const Bits& a) {
  const Poset& k = ks.poset();
  for (std::size_t p = 0; p < k.size(); ++p)
    for (std::size_t q = 0; q < k.size(); ++q) {
      if (k.leq(p, q)) continue;
      Bits witness = ks.up(p) & ks.lo(q) & a;
      if (witness.none()) return false;
    }
  return true;
}

bool is_separating(const KStar& ks, const Bits& a) {
  // Ideals are complements of up-sets; a disjoint pair (I, F) with
  // I = K \ U is exactly an up-set pair F <= U. The witness must satisfy
  // F <= x^{-1}(1) <= U.
  const std::size_t d = ks.size();
  const std::size_t n = ks.poset().size();
  for (std::size_t ui = 0; ui < d; ++ui) {
    const Bits& u = ks.map_upset(ui);
    if (u.count() == n) continue;  // I empty
    for (std::size_t fi = 0; fi < d; ++fi) {
      const Bits& f = ks.map_upset(fi);
      if (f.none()) continue;
      if (!f.is_subset_of(u)) continue;
      if (a.test(fi)) continue;  // x with x^{-1}(1) = F is its own witness
      bool found = false;
      a.for_each([&](std::size_t i) {
        if (found) return;
        const Bits& m = ks.map_upset(i);
        if (f.is_subset_of(m) && m.is_subset_of(u)) found = true;
      });
      if (!found) return false;
    }
  }
  return true;
}

Bits cl1(const KStar& ks, const Bits& x, const Bits& a) {
  Bits r = a;
  for (std::size_t p = 0; p < ks.poset().size(); ++p)
    if (x.is_subset_of(ks.up(p))) r &= ks.up(p);
  return r;
}

Bits cl2(const KStar& ks, const Bits& x, const Bits& a) {
  Bits r = a;
  for (std::size_t p = 0; p < ks.poset().size(); ++p)
    if (x.is_subset_of(ks.lo(p))) r &= ks.lo(p);
  return r;
}

bool is_c1o2(const KStar& ks, const Bits& x, const Bits& a) {
  if (!x.is_subset_of(a)) return false;
  if (cl1(ks, x, a) != x) return false;
  Bits open = a - x;
  return cl2(ks, open, a) == open;
}

std::vector<Bits> c1o2_sets(const KStar& ks, const Bits& a) {
  // C1-closed sets are the intersections of the UP(p) /\ A; generate them
  // by closing under intersections, then keep the C2-open ones.
  std::set<Bits> closed{a};
  for (std::size_t p = 0; p < ks.poset().size(); ++p) {
    std::vector<Bits> snapshot(closed.begin(), closed.end());
    Bits g = ks.up(p) & a;
    for (const Bits& c : snapshot) closed.insert(c & g);
  }
  std::vector<Bits> out;
  for (const Bits& c : closed)
    if (is_c1o2(ks, c, a)) out.push_back(c);
  return out;
}

Bits sigma(const KStar& ks, std::size_t p, const Bits& a) { return ks.up(p) & a; }

RepresentationReport representation_check(const KStar& ks, const Bits& a) {
  const Poset& k = ks.poset();
  RepresentationReport rep;
  rep.full = is_full(ks, a);
  rep.separating = is_separating(ks, a);

  std::vector<Bits> sig;
  for (std::size_t p = 0; p < k.size(); ++p) sig.push_back(sigma(ks, p, a));

  for (std::size_t p = 0; p < k.size(); ++p)
    for (std::size_t q = 0; q < k.size(); ++q) {
      if (k.leq(p, q) && !sig[p].is_subset_of(sig[q])) {
        rep.isotone = false;
        rep.notes.push_back("sigma not isotone at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      if (p != q && sig[p] == sig[q]) {
        rep.injective = false;
        rep.notes.push_back("sigma identifies " + std::to_string(p) + " and " + std::to_string(q));
      }
      if (sig[p].is_subset_of(sig[q]) && !k.leq(p, q)) {
        rep.order_embedding = false;
        rep.notes.push_back("sigma does not reflect order at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }

  auto c1o2 = c1o2_sets(ks, a);
  rep.c1o2_count = c1o2.size();
  for (const Bits& c : c1o2) {
    bool hit = false;
    for (const Bits& s : sig)
      if (s == c) {
        hit = true;
        break;
      }
    if (!hit) {
      rep.surjective = false;
      rep.notes.push_back("a C1O2 set is not a sigma image");
    }
  }
  return rep;
}

}  // namespace bitten
