#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bitten/approx.hpp"

namespace bitten {

// Operation symbols of the bitten signature.
enum class Sym {
  Var,
  Join,      // v: closure of union, partial
  Meet,      // ^: closure of intersection, partial
  QMeet,     // quotient infimum transported, partial
  QJoin,     // quotient supremum transported, partial
  Union,     // Boolean union, total
  Inter,     // Boolean intersection, total
  Compl,     // Boolean complement, total
  Cl1,
  Cl2,
  QNeg,      // ~, partial
  QLower,    // L, partial except at bottom
  QDiamond,  // <>, partial
  Bot,
  One,
  Top,
};

struct Term {
  Sym op = Sym::Var;
  int var = -1;
  std::vector<Term> args;
};

Term tvar(int i);
Term t0(Sym s);
Term t1(Sym s, Term a);
Term t2(Sym s, Term a, Term b);
std::string render_term(const Term& t);

enum class LawMode { Weak, Strong, Conditional };

struct Law {
  std::string id;
  int nvars = 1;
  LawMode mode = LawMode::Weak;
  std::vector<int> xi_premises;                    // xi(x_i) hypotheses
  std::vector<std::pair<Term, Term>> premise_eqs;  // existence-equal hypotheses
  std::vector<std::pair<Term, Term>> eqs;          // equations to check
  std::vector<int> xi_conclusions;                 // xi(x_i) conclusions
  bool boolean_algebra = false;                    // carrier forms a Boolean algebra
  std::string text;                                // printable form
};

enum class PackVariant { AsPrinted, Corrected };

std::vector<Law> concrete_law_pack(PackVariant v = PackVariant::Corrected);
std::vector<Law> abstract_law_pack(PackVariant v = PackVariant::Corrected);

struct LawEvalResult {
  std::string id;
  std::string text;
  bool holds = true;
  std::vector<std::string> counterexamples;
};

struct LawPackReport {
  std::vector<LawEvalResult> results;
  bool all_hold() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }
  const LawEvalResult* find(const std::string& id) const {
    for (const auto& r : results)
      if (r.id == id) return &r;
    return nullptr;
  }
};

// Model concept: Value copyable+equality-comparable, carrier() gives the
// quantification range, op0/op1/op2 evaluate symbols (nullopt =
// undefined), xi(v) the definability predicate, render(v) for messages.
template <class Model>
std::optional<typename Model::Value> eval_term(const Model& m, const Term& t,
                                               const std::vector<typename Model::Value>& assign) {
  using V = typename Model::Value;
  switch (t.op) {
    case Sym::Var:
      return assign[static_cast<std::size_t>(t.var)];
    case Sym::Bot:
    case Sym::One:
    case Sym::Top:
      return m.op0(t.op);
    default:
      break;
  }
  if (t.args.size() == 1) {
    auto a = eval_term(m, t.args[0], assign);
    if (!a) return std::nullopt;
    return m.op1(t.op, *a);
  }
  auto a = eval_term(m, t.args[0], assign);
  if (!a) return std::nullopt;
  auto b = eval_term(m, t.args[1], assign);
  if (!b) return std::nullopt;
  return m.op2(t.op, *a, *b);
}

template <class Model>
LawEvalResult eval_law(const Model& m, const Law& law, std::size_t max_counterexamples = 3) {
  using V = typename Model::Value;
  LawEvalResult res{law.id, law.text, true, {}};
  const auto& carrier = m.carrier();
  const std::size_t c = carrier.size();

  auto record = [&](const std::vector<V>& assign, const std::string& why) {
    res.holds = false;
    if (res.counterexamples.size() >= max_counterexamples) return;
    std::string s = why + " at";
    for (int i = 0; i < law.nvars; ++i)
      s += std::string(" ") + char('x' + i) + "=" + m.render(assign[static_cast<std::size_t>(i)]);
    res.counterexamples.push_back(s);
  };

  if (law.boolean_algebra) {
    // Union/intersection/complement with bottom and top form a Boolean
    // algebra; spot-check the defining identities over the carrier.
    auto u = [&](V a, V b) { return *m.op2(Sym::Union, a, b); };
    auto iv = [&](V a, V b) { return *m.op2(Sym::Inter, a, b); };
    auto cp = [&](V a) { return *m.op1(Sym::Compl, a); };
    V bot = *m.op0(Sym::Bot), top = *m.op0(Sym::Top);
    for (std::size_t i = 0; i < c; ++i) {
      V x = carrier[i];
      if (!(u(x, cp(x)) == top) || !(iv(x, cp(x)) == bot) || !(u(x, bot) == x) ||
          !(iv(x, top) == x))
        record({x, x, x}, "complement/identity");
      for (std::size_t j = 0; j < c; ++j) {
        V y = carrier[j];
        if (!(u(x, y) == u(y, x)) || !(iv(x, y) == iv(y, x))) record({x, y, y}, "commutativity");
        for (std::size_t k = 0; k < c; ++k) {
          V z = carrier[k];
          if (!(iv(x, u(y, z)) == u(iv(x, y), iv(x, z)))) {
            record({x, y, z}, "distributivity");
            if (res.counterexamples.size() >= max_counterexamples) return res;
          }
        }
      }
    }
    return res;
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(law.nvars), 0);
  std::vector<V> assign(static_cast<std::size_t>(law.nvars), carrier[0]);
  bool done = false;
  while (!done) {
    for (int i = 0; i < law.nvars; ++i)
      assign[static_cast<std::size_t>(i)] = carrier[idx[static_cast<std::size_t>(i)]];

    bool premises_hold = true;
    for (int v : law.xi_premises)
      if (!m.xi(assign[static_cast<std::size_t>(v)])) {
        premises_hold = false;
        break;
      }
    if (premises_hold)
      for (const auto& [lhs, rhs] : law.premise_eqs) {
        auto a = eval_term(m, lhs, assign);
        auto b = eval_term(m, rhs, assign);
        if (!a || !b || !(*a == *b)) {
          premises_hold = false;
          break;
        }
      }

    if (premises_hold) {
      for (const auto& [lhs, rhs] : law.eqs) {
        auto a = eval_term(m, lhs, assign);
        auto b = eval_term(m, rhs, assign);
        switch (law.mode) {
          case LawMode::Weak:
          case LawMode::Conditional:
            if (a && b && !(*a == *b)) record(assign, "values differ");
            break;
          case LawMode::Strong:
            if (a.has_value() != b.has_value())
              record(assign, "definedness differs");
            else if (a && b && !(*a == *b))
              record(assign, "values differ");
            break;
        }
        if (res.counterexamples.size() >= max_counterexamples && !res.holds) break;
      }
      for (int v : law.xi_conclusions)
        if (!m.xi(assign[static_cast<std::size_t>(v)])) record(assign, "xi conclusion fails");
    }

    // next assignment
    int pos = 0;
    while (pos < law.nvars) {
      if (++idx[static_cast<std::size_t>(pos)] < c) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == law.nvars) done = true;
  }
  return res;
}

template <class Model>
LawPackReport eval_pack(const Model& m, const std::vector<Law>& pack) {
  LawPackReport rep;
  for (const Law& law : pack) rep.results.push_back(eval_law(m, law));
  return rep;
}

}  // namespace bitten
