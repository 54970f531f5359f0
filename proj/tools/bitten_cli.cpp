// bitten: approximation operators and algebraic law suites over finite
// tolerance spaces. Exit codes: 0 all checks pass, 1 a counterexample was
// found, 2 usage/input error or a cap was exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bitten/bite.hpp"
#include "bitten/format.hpp"
#include "bitten/heyting.hpp"
#include "bitten/instance.hpp"
#include "bitten/ortho.hpp"
#include "bitten/sgba.hpp"

using namespace bitten;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalFlags {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t max_universe = 20;
  std::size_t max_kstar = std::size_t{1} << 20;
  std::size_t max_cover_subfamilies = 131072;
  std::size_t max_carrier = 48;
  bool json = false;
};

std::uint64_t effective_seed(const GlobalFlags& g) {
  if (const char* env = std::getenv("BITTEN_SEED")) return std::strtoull(env, nullptr, 10);
  return g.seed;
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return InstanceDocument::from_json_text(ss.str());
}

Mask parse_subset(const Universe& u, const std::string& expr) {
  std::string s = expr;
  if (!s.empty() && s.front() == '{') s.erase(s.begin());
  if (!s.empty() && s.back() == '}') s.pop_back();
  Mask m = 0;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) m |= Mask{1} << u.index(tok);
  }
  return m;
}

ordered_json law_results_json(const std::vector<LawResult>& laws) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : laws) {
    ordered_json e;
    e["law"] = l.id;
    e["status"] = l.holds ? "holds" : "fails";
    e["counterexamples"] = l.counterexamples;
    arr.push_back(e);
  }
  return arr;
}

ordered_json law_results_json(const std::vector<LawEvalResult>& laws) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : laws) {
    ordered_json e;
    e["law"] = l.id;
    e["text"] = l.text;
    e["status"] = l.holds ? "holds" : "fails";
    e["counterexamples"] = l.counterexamples;
    arr.push_back(e);
  }
  return arr;
}

int emit_report(const GlobalFlags& g, const std::string& command, const std::string& digest,
                ordered_json results, bool pass, std::int64_t ms,
                const std::vector<std::string>& plain_lines) {
  if (g.json) {
    ordered_json rep;
    rep["report_version"] = 1;
    rep["command"] = command;
    rep["instance_digest"] = digest;
    rep["seed"] = effective_seed(g);
    rep["results"] = std::move(results);
    rep["status"] = pass ? "pass" : "fail";
    rep["timing_ms"] = ms;
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const auto& line : plain_lines) std::cout << line << "\n";
    std::cout << (pass ? "status: pass" : "status: fail") << "\n";
  }
  return pass ? 0 : 1;
}

GranulationKind kind_of(const std::string& tag) {
  if (tag == "t-relateds") return GranulationKind::TRelateds;
  if (tag == "blocks") return GranulationKind::Blocks;
  if (tag == "block-intersections") return GranulationKind::BlockIntersections;
  throw InputError("unknown granulation kind: " + tag);
}

int cmd_approx(const GlobalFlags& g, const std::string& file,
               const std::vector<std::string>& sets, bool all, bool auai) {
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  const Universe& u = *inst.universe;

  std::vector<Mask> subjects;
  if (all) {
    if (u.size() > g.max_universe) throw CapError("universe too large for --all sweep");
    for (Mask m = 0; m < (Mask{1} << u.size()); ++m) subjects.push_back(m);
  }
  for (const auto& s : sets) subjects.push_back(parse_subset(u, s));

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"X", "lower", "upper", "negative", "bitten", "boundary"};
  if (auai) {
    head.insert(head.end(), {"l1", "l2", "u1", "u2"});
  }
  rows.push_back(head);
  for (Mask m : subjects) {
    ApproximationProfile p = profile(*inst.gran, Subset(u, m));
    std::vector<std::string> row{u.render(m),          p.lower.render(),
                                 p.upper.render(),     p.negative.render(),
                                 p.bitten_upper.render(), p.boundary.render()};
    if (auai) {
      row.push_back(u.render(l1(*inst.cover, m)));
      row.push_back(u.render(l2(*inst.cover, m)));
      row.push_back(u.render(u1(*inst.cover, m)));
      row.push_back(u.render(u2(*inst.cover, m)));
    }
    rows.push_back(row);
  }
  std::cout << render_table(rows);
  return 0;
}

int cmd_example() {
  InstanceDocument doc = example_instance();
  BuiltInstance inst = build_instance(doc);
  QuotientPoset q(*inst.gran);
  ExampleTable t = example_table(q);
  std::cout << render_table(t.rows);
  std::cout << "\n";
  std::cout << hasse_dot(q, [&](std::size_t c) {
    return t.class_label[c] + ":(" + inst.universe->render(q.cls(c).lower) + "|" +
           inst.universe->render(q.cls(c).bitten) + ")";
  });
  return 0;
}

int cmd_laws(const GlobalFlags& g, const std::string& file, const std::string& pack,
             const std::string& variant_name, bool exhaustive, std::size_t samples) {
  auto start = std::chrono::steady_clock::now();
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  PackVariant variant =
      variant_name == "as-printed" ? PackVariant::AsPrinted : PackVariant::Corrected;

  ordered_json results;
  std::vector<std::string> lines;
  bool pass = true;

  auto add_lines = [&](const std::vector<LawResult>& laws) {
    for (const auto& l : laws) {
      lines.push_back((l.holds ? "holds  " : "FAILS  ") + l.id +
                      (l.counterexamples.empty() ? "" : "  e.g. " + l.counterexamples.front()));
      if (!l.holds) pass = false;
    }
  };
  auto add_eval_lines = [&](const std::vector<LawEvalResult>& laws) {
    for (const auto& l : laws) {
      lines.push_back((l.holds ? "holds  " : "FAILS  ") + l.id + "  " + l.text +
                      (l.counterexamples.empty() ? "" : "  e.g. " + l.counterexamples.front()));
      if (!l.holds) pass = false;
    }
  };

  if (pack == "bitten-properties") {
    PropertyCheckOptions opt;
    opt.exhaustive = exhaustive;
    opt.samples = samples;
    opt.seed = effective_seed(g);
    opt.max_universe = g.max_universe;
    PropertyReport rep = property_report(*inst.gran, opt);
    results = law_results_json(rep.laws);
    add_lines(rep.laws);
  } else if (pack == "quotient-theorem") {
    QuotientPoset q(*inst.gran, {g.max_universe, 4096});
    auto rep = quotient_theorem_report(q);
    results = law_results_json(rep.items);
    add_lines(rep.items);
  } else if (pack == "heyting") {
    DefinableLattice d(*inst.tolerance, g.max_universe);
    auto rep = double_heyting_report(d);
    results = law_results_json(rep.laws);
    add_lines(rep.laws);
  } else if (pack == "concrete" || pack == "abstract") {
    QuotientPoset q(*inst.gran, {g.max_universe, 4096});
    BiteOptions bo;
    bo.max_kstar = g.max_kstar;
    bo.carrier_cap = g.max_carrier;
    BiteModel model(q, bo);
    auto laws = pack == "concrete" ? concrete_law_pack(variant) : abstract_law_pack(variant);
    auto rep = eval_pack(model, laws);
    results = law_results_json(rep.results);
    add_eval_lines(rep.results);
  } else if (pack == "sgba") {
    QuotientPoset q(*inst.gran, {g.max_universe, 4096});
    auto lambda = make_choice(q, ChoiceRule::Seeded, effective_seed(g));
    auto model = build_sgba(q, lambda);
    auto rep = sgba_law_report(model);
    results = law_results_json(rep.items);
    add_lines(rep.items);
  } else {
    throw InputError("unknown law pack: " + pack);
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return emit_report(g, "laws", doc.digest(), std::move(results), pass, ms, lines);
}

int cmd_random(const GlobalFlags& g, std::size_t size, std::size_t count, double density) {
  std::uint64_t seed = effective_seed(g);
  for (std::size_t i = 0; i < count; ++i)
    std::cout << random_instance(size, density, seed + i).to_json_text();
  return 0;
}

int cmd_represent(const GlobalFlags& g, const std::string& file, int search_bound) {
  auto start = std::chrono::steady_clock::now();
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  QuotientPoset q(*inst.gran, {g.max_universe, 4096});
  BiteOptions bo;
  bo.max_kstar = g.max_kstar;
  bo.carrier_cap = g.max_carrier;
  BiteModel model(q, bo);
  const KStar& ks = model.kstar();

  RepresentationReport full_rep = representation_check(ks, ks.full_family());
  RepresentationReport trimmed_rep = representation_check(ks, ks.family_without_constants());

  bool pass = full_rep.full && full_rep.separating && full_rep.isomorphism() &&
              trimmed_rep.full && trimmed_rep.separating;

  std::vector<std::string> lines;
  ordered_json results = ordered_json::array();
  auto add = [&](const std::string& name, const RepresentationReport& r) {
    ordered_json e;
    e["family"] = name;
    e["full"] = r.full;
    e["separating"] = r.separating;
    e["isotone"] = r.isotone;
    e["injective"] = r.injective;
    e["surjective"] = r.surjective;
    e["order_embedding"] = r.order_embedding;
    e["isomorphism"] = r.isomorphism();
    e["c1o2_count"] = r.c1o2_count;
    results.push_back(e);
    lines.push_back(name + ": full=" + (r.full ? "yes" : "no") +
                    " separating=" + (r.separating ? "yes" : "no") +
                    " isomorphism=" + (r.isomorphism() ? "yes" : "no") +
                    " c1o2=" + std::to_string(r.c1o2_count));
  };
  add("kstar", full_rep);
  add("kstar-minus-constants", trimmed_rep);

  if (search_bound > 0) {
    RefinedCheckReport rc = refined_check(model, static_cast<std::size_t>(search_bound));
    ordered_json e;
    e["family"] = "refined-search";
    e["h0"] = rc.h0_size;
    e["h"] = rc.h_size;
    e["witness_found"] = rc.witness_found;
    e["note"] = rc.note;
    if (rc.witness_found) {
      ordered_json w = ordered_json::array();
      for (Mask m : rc.witness_neighbours) w.push_back(m);
      e["witness_neighbour_masks"] = w;
    }
    results.push_back(e);
    lines.push_back("refined-search: " + rc.note);
    // a bound or an empty H is a reported outcome; only an exhausted
    // search without witness counts against the run
    if (!rc.witness_found && !rc.vacuous && !rc.bound_exceeded) pass = false;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return emit_report(g, "represent", doc.digest(), std::move(results), pass, ms, lines);
}

int cmd_quotient(const GlobalFlags& g, const std::string& file) {
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  const Universe& u = *inst.universe;
  QuotientPoset q(*inst.gran, {g.max_universe, 4096});
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class", "lower", "bitten", "members", "L", "dia", "neg"});
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    auto n = q.neg_class(c);
    rows.push_back({"C" + std::to_string(c), u.render(q.cls(c).lower), u.render(q.cls(c).bitten),
                    std::to_string(q.cls(c).members.size()), "C" + std::to_string(q.l_class(c)),
                    "C" + std::to_string(q.diamond_class(c)),
                    n ? "C" + std::to_string(*n) : "undef"});
  }
  std::cout << render_table(rows);
  std::cout << "classes: " << q.class_count() << "\n";
  return 0;
}

int cmd_hasse(const GlobalFlags& g, const std::string& file) {
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  const Universe& u = *inst.universe;
  QuotientPoset q(*inst.gran, {g.max_universe, 4096});
  std::cout << hasse_dot(q, [&](std::size_t c) {
    return "C" + std::to_string(c) + ":(" + u.render(q.cls(c).lower) + "|" +
           u.render(q.cls(c).bitten) + ")";
  });
  return 0;
}

int cmd_sgba(const GlobalFlags& g, const std::string& file, std::size_t seeds) {
  auto start = std::chrono::steady_clock::now();
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  QuotientPoset q(*inst.gran, {g.max_universe, 4096});
  std::uint64_t base = effective_seed(g);
  bool pass = true;
  std::vector<std::string> lines;
  ordered_json results = ordered_json::array();
  for (std::size_t s = 0; s < seeds; ++s) {
    auto lambda = make_choice(q, s == 0 ? ChoiceRule::LexMin : ChoiceRule::Seeded, base + s);
    auto model = build_sgba(q, lambda);
    auto rep = sgba_law_report(model);
    bool ok = rep.all_hold();
    pass = pass && ok;
    ordered_json e;
    e["seed"] = base + s;
    e["rule"] = s == 0 ? "lexicographic-min" : "seeded";
    e["laws"] = law_results_json(rep.items);
    e["status"] = ok ? "pass" : "fail";
    results.push_back(e);
    lines.push_back("lambda seed " + std::to_string(base + s) + ": " +
                    (ok ? "all laws hold" : "FAILURES"));
  }
  auto mgc = minimal_granule_classes(q);
  std::string mg = "minimal granule classes:";
  for (auto c : mgc) mg += " C" + std::to_string(c);
  lines.push_back(mg);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return emit_report(g, "sgba", doc.digest(), std::move(results), pass, ms, lines);
}

int cmd_auai(const GlobalFlags& g, const std::string& file, const std::vector<std::string>& sets,
             bool all, bool bridge) {
  InstanceDocument doc = load_instance(file);
  BuiltInstance inst = build_instance(doc);
  const Universe& u = *inst.universe;
  std::vector<Mask> subjects;
  if (all) {
    if (u.size() > g.max_universe) throw CapError("universe too large for --all sweep");
    for (Mask m = 0; m < (Mask{1} << u.size()); ++m) subjects.push_back(m);
  }
  for (const auto& s : sets) subjects.push_back(parse_subset(u, s));
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"X", "l1", "l2", "u1", "u2"});
  for (Mask m : subjects)
    rows.push_back({u.render(m), u.render(l1(*inst.cover, m)), u.render(l2(*inst.cover, m)),
                    u.render(u1(*inst.cover, m)), u.render(u2(*inst.cover, m))});
  std::cout << render_table(rows);
  if (bridge) {
    BridgeOptions opt;
    opt.max_universe = g.max_universe;
    BridgeReport rep = bridge_check(*inst.gran, opt);
    std::cout << "bridge: " << (rep.all_hold() ? "all claims hold" : "FAILURES") << "\n";
    for (const auto& cx : rep.counterexamples) std::cout << "  " << cx << "\n";
    return rep.all_hold() ? 0 : 1;
  }
  return 0;
}

int cmd_packs(const std::string& pack, const std::string& variant_name) {
  PackVariant variant =
      variant_name == "as-printed" ? PackVariant::AsPrinted : PackVariant::Corrected;
  auto laws = pack == "concrete" ? concrete_law_pack(variant) : abstract_law_pack(variant);
  ordered_json arr = ordered_json::array();
  for (const auto& l : laws) {
    ordered_json e;
    e["name"] = l.id;
    e["variant"] = variant_name;
    e["mode"] = l.mode == LawMode::Weak ? "omega"
                : l.mode == LawMode::Strong ? "omega-star"
                                            : "conditional";
    ordered_json prem = ordered_json::array();
    for (int v : l.xi_premises) prem.push_back("xi(" + std::string(1, char('x' + v)) + ")");
    for (const auto& [a, b] : l.premise_eqs)
      prem.push_back(render_term(a) + " = " + render_term(b));
    e["premises"] = prem;
    ordered_json eqs = ordered_json::array();
    for (const auto& [a, b] : l.eqs) eqs.push_back({render_term(a), render_term(b)});
    e["equations"] = eqs;
    ordered_json xc = ordered_json::array();
    for (int v : l.xi_conclusions) xc.push_back("xi(" + std::string(1, char('x' + v)) + ")");
    e["xi_conclusions"] = xc;
    e["text"] = l.text;
    arr.push_back(e);
  }
  ordered_json out;
  out["report_version"] = 1;
  out["pack"] = pack;
  out["variant"] = variant_name;
  out["laws"] = arr;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximation operators and algebraic law suites over finite tolerance spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalFlags g;
  app.add_option("--seed", g.seed, "random seed (env BITTEN_SEED overrides)");
  app.add_option("--max-universe", g.max_universe, "cap for power-set sweeps");
  app.add_option("--max-kstar", g.max_kstar, "cap for isotone-map enumeration");
  app.add_option("--max-cover-subfamilies", g.max_cover_subfamilies,
                 "cap for cover subfamily enumeration");
  app.add_option("--max-carrier", g.max_carrier, "cap for bitten-algebra carriers");
  app.add_flag("--json", g.json, "emit a JSON report");

  std::string file, pack = "bitten-properties", variant = "corrected";
  std::vector<std::string> sets;
  bool all = false, auai = false, bridge = false;
  std::size_t size = 4, count = 1, samples = 1024, seeds = 1;
  double density = 0.5;
  int search_bound = 0;
  bool exhaustive = true;

  auto* ap = app.add_subcommand("approx", "approximation regions for subsets");
  ap->add_option("--file", file)->required();
  ap->add_option("--set", sets, "subset expression like {x1,x2}; repeatable");
  ap->add_flag("--all", all, "sweep the power set");
  ap->add_flag("--auai", auai, "include the cover approximation quadruple");

  app.add_subcommand("example", "golden table and Hasse diagram of the built-in space");

  auto* lw = app.add_subcommand("laws", "run a law suite");
  lw->add_option("--file", file)->required();
  lw->add_option("--pack", pack,
                 "bitten-properties|quotient-theorem|heyting|concrete|abstract|sgba");
  lw->add_option("--variant", variant, "as-printed|corrected");
  lw->add_flag("--exhaustive,!--sampled", exhaustive, "exhaustive subset sweeps");
  lw->add_option("--samples", samples, "sample count in sampled mode");

  auto* rnd = app.add_subcommand("random", "emit seeded random instances");
  rnd->add_option("--size", size, "universe size");
  rnd->add_option("--count", count, "number of instances");
  rnd->add_option("--density", density, "pair probability");

  auto* rp = app.add_subcommand("represent", "representation checks for the quotient");
  rp->add_option("--file", file)->required();
  rp->add_option("--search-bound", search_bound, "run the refined search up to this size");

  auto* qt = app.add_subcommand("quotient", "quotient classes and operator tables");
  qt->add_option("--file", file)->required();

  auto* hs = app.add_subcommand("hasse", "quotient Hasse diagram as DOT");
  hs->add_option("--file", file)->required();

  auto* sg = app.add_subcommand("sgba", "choice-function law suite");
  sg->add_option("--file", file)->required();
  sg->add_option("--seeds", seeds, "number of choice functions");

  auto* au = app.add_subcommand("auai", "cover approximation quadruples");
  au->add_option("--file", file)->required();
  au->add_option("--set", sets)->description("subset expression; repeatable");
  au->add_flag("--all", all);
  au->add_flag("--bridge", bridge, "verify the bridge claims");

  auto* pk = app.add_subcommand("packs", "emit a law pack as JSON");
  pk->add_option("--pack", pack, "concrete|abstract")->required();
  pk->add_option("--variant", variant, "as-printed|corrected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ap->parsed()) return cmd_approx(g, file, sets, all, auai);
    if (app.got_subcommand("example")) return cmd_example();
    if (lw->parsed()) return cmd_laws(g, file, pack, variant, exhaustive, samples);
    if (rnd->parsed()) return cmd_random(g, size, count, density);
    if (rp->parsed()) return cmd_represent(g, file, search_bound);
    if (qt->parsed()) return cmd_quotient(g, file);
    if (hs->parsed()) return cmd_hasse(g, file);
    if (sg->parsed()) return cmd_sgba(g, file, seeds);
    if (au->parsed()) return cmd_auai(g, file, sets, all, bridge);
    if (pk->parsed()) return cmd_packs(pack, variant);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
