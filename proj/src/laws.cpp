#include "bitten/laws.hpp"

namespace bitten {

Term tvar(int i) {
  Term t;
  t.op = Sym::Var;
  t.var = i;
  return t;
}

Term t0(Sym s) {
  Term t;
  t.op = s;
  return t;
}

Term t1(Sym s, Term a) {
  Term t;
  t.op = s;
  t.args.push_back(std::move(a));
  return t;
}

Term t2(Sym s, Term a, Term b) {
  Term t;
  t.op = s;
  t.args.push_back(std::move(a));
  t.args.push_back(std::move(b));
  return t;
}

std::string render_term(const Term& t) {
  switch (t.op) {
    case Sym::Var: return std::string(1, static_cast<char>('x' + t.var));
    case Sym::Bot: return "bot";
    case Sym::One: return "one";
    case Sym::Top: return "top";
    case Sym::Compl: return render_term(t.args[0]) + "'";
    case Sym::Cl1: return "cl1(" + render_term(t.args[0]) + ")";
    case Sym::Cl2: return "cl2(" + render_term(t.args[0]) + ")";
    case Sym::QNeg: return "~" + render_term(t.args[0]);
    case Sym::QLower: return "L(" + render_term(t.args[0]) + ")";
    case Sym::QDiamond: return "dia(" + render_term(t.args[0]) + ")";
    case Sym::Join: return "(" + render_term(t.args[0]) + " v " + render_term(t.args[1]) + ")";
    case Sym::Meet: return "(" + render_term(t.args[0]) + " ^ " + render_term(t.args[1]) + ")";
    case Sym::QJoin: return "(" + render_term(t.args[0]) + " qj " + render_term(t.args[1]) + ")";
    case Sym::QMeet: return "(" + render_term(t.args[0]) + " qm " + render_term(t.args[1]) + ")";
    case Sym::Union: return "(" + render_term(t.args[0]) + " U " + render_term(t.args[1]) + ")";
    case Sym::Inter: return "(" + render_term(t.args[0]) + " & " + render_term(t.args[1]) + ")";
  }
  return "?";
}

namespace {

std::string mode_tag(LawMode m) {
  switch (m) {
    case LawMode::Weak: return " =w= ";
    case LawMode::Strong: return " =w*= ";
    case LawMode::Conditional: return " = ";
  }
  return " = ";
}

Law make_law(std::string id, int nvars, LawMode mode, std::vector<int> xi_pre,
             std::vector<std::pair<Term, Term>> pre_eqs,
             std::vector<std::pair<Term, Term>> eqs, std::vector<int> xi_conc = {}) {
  Law l;
  l.id = std::move(id);
  l.nvars = nvars;
  l.mode = mode;
  l.xi_premises = std::move(xi_pre);
  l.premise_eqs = std::move(pre_eqs);
  l.eqs = std::move(eqs);
  l.xi_conclusions = std::move(xi_conc);
  std::string text;
  bool first = true;
  auto sep = [&](std::string& s) {
    if (!first) s += ", ";
    first = false;
  };
  std::string prem;
  for (int v : l.xi_premises) {
    sep(prem);
    prem += "xi(" + std::string(1, static_cast<char>('x' + v)) + ")";
  }
  for (const auto& [a, b] : l.premise_eqs) {
    sep(prem);
    prem += render_term(a) + " = " + render_term(b);
  }
  first = true;
  std::string conc;
  for (const auto& [a, b] : l.eqs) {
    sep(conc);
    conc += render_term(a) + mode_tag(l.mode) + render_term(b);
  }
  for (int v : l.xi_conclusions) {
    sep(conc);
    conc += "xi(" + std::string(1, static_cast<char>('x' + v)) + ")";
  }
  l.text = prem.empty() ? conc : prem + " -> " + conc;
  return l;
}

const Term X = tvar(0);
const Term Y = tvar(1);
const Term Z = tvar(2);

std::vector<Law> shared_pack_core(bool strong_equalities, PackVariant variant) {
  // Items 2..23 are common to both packs up to the strength of the plain
  // equalities (strong in the concrete theorem, weak in the abstract one),
  // except item 4 whose premise differs; the caller supplies item 4.
  const LawMode plain = strong_equalities ? LawMode::Strong : LawMode::Weak;
  std::vector<Law> laws;

  laws.push_back(make_law("2", 2, plain, {}, {},
                          {{t2(Sym::Join, X, Y), t2(Sym::Join, Y, X)}}));
  laws.push_back(make_law("3", 3, LawMode::Weak, {}, {},
                          {{t2(Sym::Join, X, t2(Sym::Join, Y, Z)),
                            t2(Sym::Join, t2(Sym::Join, X, Y), Z)}}));
  // item 4 inserted by caller
  laws.push_back(make_law("5", 3, LawMode::Conditional, {},
                          {{t2(Sym::Join, X, Y), Z}},
                          {{t1(Sym::Cl1, Z), Z},
                           {t1(Sym::Cl2, t1(Sym::Compl, Z)), t1(Sym::Compl, Z)}}));
  laws.push_back(make_law("6", 2, LawMode::Conditional, {},
                          {{t2(Sym::Join, X, X), Y}},
                          {{t1(Sym::Cl2, t1(Sym::Compl, X)), t1(Sym::Compl, X)},
                           {Y, t1(Sym::Cl1, X)},
                           {t1(Sym::Cl1, X), t2(Sym::Meet, X, X)}}));
  laws.push_back(make_law("7", 1, LawMode::Strong, {}, {},
                          {{t2(Sym::Inter, t1(Sym::Cl1, X), X), X},
                           {t2(Sym::Inter, t1(Sym::Cl2, X), X), X},
                           {t1(Sym::Cl1, t1(Sym::Cl1, X)), t1(Sym::Cl1, X)},
                           {t1(Sym::Cl2, t1(Sym::Cl2, X)), t1(Sym::Cl2, X)}}));
  laws.push_back(make_law("8", 2, LawMode::Conditional, {},
                          {{t2(Sym::Inter, X, Y), X}},
                          {{t2(Sym::Inter, t1(Sym::Cl1, X), t1(Sym::Cl1, Y)), t1(Sym::Cl1, X)},
                           {t2(Sym::Inter, t1(Sym::Cl2, X), t1(Sym::Cl2, Y)), t1(Sym::Cl2, X)}}));
  laws.push_back(make_law("9", 2, plain, {}, {},
                          {{t2(Sym::Meet, X, Y), t2(Sym::Meet, Y, X)}}));
  // item 10: the as-printed right side ends in Join; corrected in Meet.
  laws.push_back(make_law("10", 3, LawMode::Weak, {}, {},
                          {{t2(Sym::Meet, X, t2(Sym::Meet, Y, Z)),
                            t2(variant == PackVariant::Corrected ? Sym::Meet : Sym::Join,
                               t2(Sym::Meet, X, Y), Z)}}));
  laws.push_back(make_law("11", 2, LawMode::Conditional, {},
                          {{t2(Sym::Meet, X, X), Y}},
                          {{t1(Sym::Cl2, t1(Sym::Compl, X)), t1(Sym::Compl, X)},
                           {Y, t1(Sym::Cl1, X)}}));
  laws.push_back(make_law("12", 1, LawMode::Conditional, {},
                          {{t1(Sym::Cl2, t1(Sym::Compl, t1(Sym::Cl1, X))),
                            t1(Sym::Compl, t1(Sym::Cl1, X))}},
                          {{t2(Sym::Meet, X, X), t1(Sym::Cl1, X)}}));
  laws.push_back(make_law("13", 3, LawMode::Conditional, {},
                          {{t2(Sym::Meet, X, Y), Z}},
                          {{t1(Sym::Cl1, Z), Z},
                           {t1(Sym::Cl2, t1(Sym::Compl, Z)), t1(Sym::Compl, Z)}}));
  laws.push_back(make_law("14", 3, LawMode::Conditional, {},
                          {{t2(Sym::Join, t2(Sym::Meet, X, Y), X), Z}},
                          {{Z, t1(Sym::Cl1, X)}}));
  laws.push_back(make_law("15", 2, plain, {}, {},
                          {{t2(Sym::Join, t2(Sym::Meet, X, Y), X),
                            t2(Sym::Meet, X, t2(Sym::Join, Y, X))}}));
  laws.push_back(make_law("16", 1, LawMode::Strong, {}, {},
                          {{t1(Sym::QLower, t0(Sym::Bot)), t0(Sym::Bot)},
                           {t1(Sym::QLower, t0(Sym::One)), t0(Sym::One)}}));
  laws.push_back(make_law("17", 1, LawMode::Conditional, {},
                          {{t1(Sym::Cl1, X), X},
                           {t1(Sym::Cl2, t1(Sym::Compl, X)), t1(Sym::Compl, X)}},
                          {{t2(Sym::Join, X, t1(Sym::QLower, X)), X},
                           {t1(Sym::QLower, t1(Sym::QLower, X)), t1(Sym::QLower, X)}}));
  laws.push_back(make_law("18", 3, LawMode::Conditional, {},
                          {{t2(Sym::QMeet, X, Y), Z}}, {}, {0, 1, 2}));
  laws.push_back(make_law("19", 3, LawMode::Conditional, {},
                          {{t2(Sym::QJoin, X, Y), Z}}, {}, {0, 1, 2}));
  laws.push_back(make_law("20", 2, plain, {}, {},
                          {{t2(Sym::QMeet, X, Y), t2(Sym::QMeet, Y, X)}}));
  laws.push_back(make_law("21", 3, LawMode::Weak, {}, {},
                          {{t2(Sym::QMeet, X, t2(Sym::QMeet, Y, Z)),
                            t2(Sym::QMeet, t2(Sym::QMeet, X, Y), Z)}}));
  laws.push_back(make_law("22", 2, plain, {}, {},
                          {{t2(Sym::QJoin, X, Y), t2(Sym::QJoin, Y, X)}}));
  laws.push_back(make_law("23", 3, LawMode::Weak, {}, {},
                          {{t2(Sym::QJoin, X, t2(Sym::QJoin, Y, Z)),
                            t2(Sym::QJoin, t2(Sym::QJoin, X, Y), Z)}}));
  return laws;
}

Law xi_diamond_join_law(const std::string& id) {
  Term lhs = t2(Sym::Inter, t1(Sym::QDiamond, t2(Sym::QJoin, X, Y)),
                t2(Sym::QJoin, t1(Sym::QDiamond, X), t1(Sym::QDiamond, Y)));
  Term rhs = t2(Sym::QJoin, t1(Sym::QDiamond, X), t1(Sym::QDiamond, Y));
  return make_law(id, 2, LawMode::Conditional, {0, 1}, {}, {{lhs, rhs}});
}

Law xi_diamond_meet_law(const std::string& id, PackVariant variant) {
  Term lhs = t2(Sym::Inter, t1(Sym::QDiamond, t2(Sym::QMeet, X, Y)),
                t2(Sym::QMeet, t1(Sym::QDiamond, X), t1(Sym::QDiamond, Y)));
  Term rhs = t1(Sym::QDiamond,
                t2(variant == PackVariant::Corrected ? Sym::QMeet : Sym::QJoin, X, Y));
  return make_law(id, 2, LawMode::Conditional, {0, 1}, {}, {{lhs, rhs}});
}

Law xi_lower_join_law(const std::string& id) {
  Term lhs = t2(Sym::Inter, t1(Sym::QLower, t2(Sym::QJoin, X, Y)),
                t2(Sym::QJoin, t1(Sym::QLower, X), t1(Sym::QLower, Y)));
  Term rhs = t2(Sym::QJoin, t1(Sym::QLower, X), t1(Sym::QLower, Y));
  return make_law(id, 2, LawMode::Conditional, {0, 1}, {}, {{lhs, rhs}});
}

Law xi_l_meet_dia_l(const std::string& id) {
  return make_law(id, 1, LawMode::Conditional, {0}, {},
                  {{t2(Sym::QMeet, t1(Sym::QLower, X), t1(Sym::QDiamond, t1(Sym::QLower, X))),
                    t1(Sym::QLower, X)}});
}

Law xi_dia_join_l_dia(const std::string& id) {
  return make_law(id, 1, LawMode::Conditional, {0}, {},
                  {{t2(Sym::QJoin, t1(Sym::QDiamond, X), t1(Sym::QLower, t1(Sym::QDiamond, X))),
                    t1(Sym::QDiamond, X)}});
}

Law xi_neg_dia(const std::string& id) {
  return make_law(id, 1, LawMode::Conditional, {0}, {},
                  {{t1(Sym::QNeg, t1(Sym::QDiamond, X)), t1(Sym::QLower, t1(Sym::QNeg, X))}});
}

Law xi_neg_lower(const std::string& id) {
  return make_law(id, 1, LawMode::Conditional, {0}, {},
                  {{t1(Sym::QNeg, t1(Sym::QLower, X)), t1(Sym::QDiamond, t1(Sym::QNeg, X))}});
}

Law boolean_algebra_law(const std::string& id) {
  Law l;
  l.id = id;
  l.nvars = 3;
  l.mode = LawMode::Strong;
  l.boolean_algebra = true;
  l.text = "carrier with U, &, ', bot, top is a Boolean algebra";
  return l;
}

}  // namespace

std::vector<Law> concrete_law_pack(PackVariant v) {
  std::vector<Law> pack;
  pack.push_back(boolean_algebra_law("c1"));
  auto core = shared_pack_core(/*strong_equalities=*/true, v);
  // item 4 has the xi premise in the concrete theorem
  Law item4 = make_law("4", 1, LawMode::Conditional, {0}, {},
                       {{t2(Sym::Join, X, X), t1(Sym::Cl1, X)}});
  for (const Law& l : core) {
    pack.push_back(l);
    pack.back().id = "c" + pack.back().id;
    if (l.id == "3") {
      pack.push_back(item4);
      pack.back().id = "c4";
    }
  }
  pack.push_back(xi_diamond_join_law("c24"));
  pack.push_back(make_law("c25", 1, LawMode::Conditional, {0}, {},
                          {{t2(Sym::QMeet, X, t1(Sym::QDiamond, X)), X},
                           {t1(Sym::QDiamond, t1(Sym::QDiamond, X)), t1(Sym::QDiamond, X)}}));
  pack.push_back(xi_diamond_meet_law("c26", v));
  pack.push_back(xi_lower_join_law("c27"));
  pack.push_back(xi_l_meet_dia_l("c28"));
  pack.push_back(xi_dia_join_l_dia("c29"));
  pack.push_back(xi_neg_dia("c30"));
  pack.push_back(xi_neg_lower("c31"));
  pack.push_back(make_law("c32", 2, LawMode::Conditional, {},
                          {{t2(Sym::QMeet, X, Y), X}},
                          {{t2(Sym::QJoin, X, Y), Y}}));
  return pack;
}

std::vector<Law> abstract_law_pack(PackVariant v) {
  std::vector<Law> pack;
  pack.push_back(boolean_algebra_law("a1"));
  auto core = shared_pack_core(/*strong_equalities=*/false, v);
  Law item4 = make_law("4", 1, LawMode::Conditional, {},
                       {{t1(Sym::Cl2, t1(Sym::Compl, t1(Sym::Cl1, X))),
                         t1(Sym::Compl, t1(Sym::Cl1, X))}},
                       {{t2(Sym::Join, X, X), t1(Sym::Cl1, X)}});
  for (const Law& l : core) {
    pack.push_back(l);
    pack.back().id = "a" + pack.back().id;
    if (l.id == "3") {
      pack.push_back(item4);
      pack.back().id = "a4";
    }
  }
  pack.push_back(xi_diamond_join_law("a24"));
  pack.push_back(xi_diamond_meet_law("a25", v));
  pack.push_back(xi_lower_join_law("a26"));
  pack.push_back(xi_l_meet_dia_l("a27"));
  pack.push_back(xi_dia_join_l_dia("a28"));
  pack.push_back(xi_neg_dia("a29"));
  pack.push_back(xi_neg_lower("a30"));
  return pack;
}

}  // namespace bitten
