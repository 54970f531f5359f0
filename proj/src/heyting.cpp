#include "bitten/heyting.hpp"

#include <algorithm>
#include <set>

namespace bitten {

DefinableLattice::DefinableLattice(const ToleranceRelation& t, std::size_t max_universe)
    : u_(&t.universe()) {
  if (u_->size() > max_universe) throw CapError("universe too large for definable lattice");
  granules_ = block_intersections(t);

  std::set<Mask> closure{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(closure.begin(), closure.end());
    for (Mask m : snapshot)
      for (Mask a : granules_)
        if (closure.insert(m | a).second) grew = true;
  }
  carrier_.assign(closure.begin(), closure.end());

  // Union closure of an intersection-closed family is a sublattice.
  for (Mask a : carrier_)
    for (Mask b : carrier_) {
      if (!closure.count(a & b) || !closure.count(a | b))
        throw InputError("definable carrier not closed under set operations");
    }
}

bool DefinableLattice::is_member(Mask x) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), x);
}

void DefinableLattice::require_member(Mask x) const {
  if (!is_member(x)) throw InputError("operand is not a definable set: " + u_->render(x));
}

Mask DefinableLattice::implies(Mask x, Mask y) const {
  require_member(x);
  require_member(y);
  Mask r = 0;
  for (Mask a : granules_)
    if (((x & a) & ~y) == 0) r |= a;
  return r;
}

Mask DefinableLattice::subtract(Mask x, Mask y) const {
  require_member(x);
  require_member(y);
  Mask r = u_->full_mask();
  for (Mask z : carrier_)
    if ((x & ~(y | z)) == 0) r &= z;
  return r;
}

DefinableLattice definable_sets(const ToleranceRelation& t, std::size_t max_universe) {
  return DefinableLattice(t, max_universe);
}

HeytingReport double_heyting_report(const DefinableLattice& d) {
  HeytingReport rep;
  const Universe& u = d.universe();
  const auto& cs = d.carrier();
  auto law = [&](const std::string& id) -> LawResult& {
    rep.laws.push_back(LawResult{id, true, {}});
    return rep.laws.back();
  };
  auto fail = [&](LawResult& l, Mask x, Mask y) {
    l.holds = false;
    if (l.counterexamples.size() < 4)
      l.counterexamples.push_back(u.render(x) + "," + u.render(y));
  };

  LawResult& res = law("residuation");
  for (Mask x : cs)
    for (Mask y : cs) {
      Mask impl = d.implies(x, y);
      for (Mask z : cs) {
        bool lhs = ((z & x) & ~y) == 0;
        bool rhs = (z & ~impl) == 0;
        if (lhs != rhs) fail(res, x, y);
      }
    }

  LawResult& a1 = law("x-x=0");
  LawResult& a2 = law("x\\/(x-y)=x");
  LawResult& a3 = law("(x-y)\\/y=x\\/y");
  LawResult& a4 = law("(x\\/y)-z=(x-z)\\/(y-z)");
  LawResult& a5 = law("z-(x/\\y)=(z-x)\\/(z-y)");
  for (Mask x : cs) {
    if (d.subtract(x, x) != 0) fail(a1, x, x);
    for (Mask y : cs) {
      Mask s = d.subtract(x, y);
      if ((x | s) != x) fail(a2, x, y);
      if ((s | y) != (x | y)) fail(a3, x, y);
      for (Mask z : cs) {
        if (d.subtract(x | y, z) != (d.subtract(x, z) | d.subtract(y, z))) fail(a4, x, y);
        if (d.subtract(z, x & y) != (d.subtract(z, x) | d.subtract(z, y))) fail(a5, x, y);
      }
    }
  }

  LawResult& dist = law("distributivity");
  for (Mask x : cs)
    for (Mask y : cs)
      for (Mask z : cs)
        if ((x & (y | z)) != ((x & y) | (x & z))) fail(dist, x, y);

  LawResult& atom = law("atomicity");
  std::vector<Mask> atoms;
  for (Mask x : cs) {
    if (x == 0) continue;
    bool is_atom = true;
    for (Mask y : cs)
      if (y != 0 && y != x && (y & ~x) == 0) {
        is_atom = false;
        break;
      }
    if (is_atom) atoms.push_back(x);
  }
  for (Mask x : cs) {
    if (x == 0) continue;
    bool dominates = false;
    for (Mask a : atoms)
      if ((a & ~x) == 0) {
        dominates = true;
        break;
      }
    if (!dominates) fail(atom, x, x);
  }

  return rep;
}

}  // namespace bitten
