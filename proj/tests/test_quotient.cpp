#include <doctest.h>

#include <map>

#include "bitten/quotient.hpp"
#include "test_helpers.hpp"

using namespace bitten;
using namespace bitten::testing;

namespace {

// Published labels for the golden quotient, recovered through class_of.
struct GoldenQuotient {
  BuiltInstance inst;
  QuotientPoset q;
  std::map<std::string, std::size_t> b;  // "B1".."B14" -> class id

  GoldenQuotient() : inst(example()), q(*inst.gran) {
    const Universe& u = *inst.universe;
    auto at = [&](std::initializer_list<const char*> names) { return q.class_of(mask(u, names)); };
    b["B1"] = at({"x1"});
    b["B2"] = at({"x2"});
    b["B3"] = at({"x3"});
    b["B4"] = at({"x4"});
    b["B5"] = at({"x1", "x2"});
    b["B6"] = at({"x1", "x4"});
    b["B7"] = at({"x2", "x3"});
    b["B8"] = at({"x2", "x4"});
    b["B9"] = at({"x3", "x4"});
    b["B10"] = at({"x1", "x2", "x3"});
    b["B11"] = at({"x1", "x2", "x4"});
    b["B12"] = at({"x2", "x3", "x4"});
    b["B13"] = at({});
    b["B14"] = at({"x1", "x2", "x3", "x4"});
  }
};

}  // namespace

TEST_CASE("golden quotient has 14 classes with the published sharing") {
  GoldenQuotient g;
  const Universe& u = *g.inst.universe;
  CHECK(g.q.class_count() == 14);
  CHECK(g.q.class_of(mask(u, {"x1", "x3"})) == g.b["B2"]);
  CHECK(g.q.class_of(mask(u, {"x1", "x3", "x4"})) == g.b["B8"]);

  // the members partition the power set
  std::size_t total = 0;
  for (std::size_t c = 0; c < g.q.class_count(); ++c) total += g.q.cls(c).members.size();
  CHECK(total == 16);

  CHECK(g.q.bottom() == g.b["B13"]);
  CHECK(g.q.top() == g.b["B14"]);
}

TEST_CASE("golden quotient operator values") {
  GoldenQuotient g;
  CHECK(g.q.l_class(g.b["B2"]) == g.b["B13"]);
  CHECK(g.q.diamond_class(g.b["B4"]) == g.b["B4"]);
  REQUIRE(g.q.neg_class(g.b["B1"]).has_value());
  CHECK(*g.q.neg_class(g.b["B1"]) == g.b["B12"]);

  CHECK(g.q.leq(g.b["B1"], g.b["B5"]));
  CHECK(g.q.leq(g.b["B1"], g.b["B1"]));
  CHECK_FALSE(g.q.leq(g.b["B4"], g.b["B1"]));

  REQUIRE(g.q.meet(g.b["B2"], g.b["B4"]).has_value());
  CHECK(*g.q.meet(g.b["B2"], g.b["B4"]) == g.b["B13"]);
  REQUIRE(g.q.join(g.b["B1"], g.b["B3"]).has_value());
  CHECK(*g.q.join(g.b["B1"], g.b["B3"]) == g.b["B2"]);
  CHECK(*g.q.join(g.b["B7"], g.b["B7"]) == g.b["B7"]);

  auto edges = g.q.hasse_edges();
  bool found = false;
  for (auto [a, bb] : edges)
    if (a == g.b["B13"] && bb == g.b["B1"]) found = true;
  CHECK(found);
  for (auto [a, bb] : edges) {
    CHECK(g.q.leq(a, bb));
    CHECK(a != bb);
  }

  auto ub = g.q.ub_min(g.b["B1"], g.b["B3"]);
  REQUIRE(ub.size() == 1);
  CHECK(ub[0] == g.b["B2"]);
  auto lb = g.q.lb_max(g.b["B2"], g.b["B4"]);
  REQUIRE(lb.size() == 1);
  CHECK(lb[0] == g.b["B13"]);
}

TEST_CASE("trivial quotient of a one-point space is a two-chain") {
  Universe u({"a"});
  auto t = identity_tolerance(u);
  QuotientPoset q(granulation(t, GranulationKind::TRelateds));
  CHECK(q.class_count() == 2);
  CHECK(q.hasse_edges().size() == 1);
}

TEST_CASE("operators are class-invariant") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto inst = build_instance(random_instance(2 + seed % 5, 0.4, seed + 3));
    const Universe& u = *inst.universe;
    const Granulation& g = *inst.gran;
    QuotientPoset q(g);
    for (std::size_t c = 0; c < q.class_count(); ++c) {
      for (Mask m : q.cls(c).members) {
        CHECK(q.class_of(gr_lower(g, m)) == q.l_class(c));
        CHECK(q.class_of(bitten_upper(g, m)) == q.diamond_class(c));
        REQUIRE(q.neg_class(c).has_value());
        CHECK(q.class_of(~m & u.full_mask()) == *q.neg_class(c));
      }
    }
  }
}

TEST_CASE("diamond is inflationary and idempotent; negation is antitone") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = build_instance(random_instance(2 + seed % 4, 0.5, seed + 11));
    QuotientPoset q(*inst.gran);
    for (std::size_t a = 0; a < q.class_count(); ++a) {
      CHECK(q.leq(a, q.diamond_class(a)));
      CHECK(q.diamond_class(q.diamond_class(a)) == q.diamond_class(a));
      for (std::size_t b = 0; b < q.class_count(); ++b) {
        if (!q.leq(a, b)) continue;
        auto na = q.neg_class(a), nb = q.neg_class(b);
        if (na && nb) CHECK(q.leq(*nb, *na));
      }
    }
  }
}

TEST_CASE("meets and joins are order-theoretic bounds") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto inst = build_instance(random_instance(4, 0.5, seed + 23));
    QuotientPoset q(*inst.gran);
    for (std::size_t a = 0; a < q.class_count(); ++a)
      for (std::size_t b = 0; b < q.class_count(); ++b) {
        auto m = q.meet(a, b);
        if (m) {
          CHECK(q.leq(*m, a));
          CHECK(q.leq(*m, b));
          for (std::size_t w = 0; w < q.class_count(); ++w)
            if (q.leq(w, a) && q.leq(w, b)) CHECK(q.leq(w, *m));
        }
        auto j = q.join(a, b);
        if (j) {
          CHECK(q.leq(a, *j));
          CHECK(q.leq(b, *j));
          for (std::size_t w = 0; w < q.class_count(); ++w)
            if (q.leq(a, w) && q.leq(b, w)) CHECK(q.leq(*j, w));
        }
      }
  }
}

TEST_CASE("quotient theorem holds on the golden instance and small spaces") {
  GoldenQuotient g;
  auto rep = quotient_theorem_report(g.q);
  CHECK(rep.all_hold());

  // x qmeet dia x = x, spelled out
  for (std::size_t c = 0; c < g.q.class_count(); ++c) {
    auto m = g.q.meet(c, g.q.diamond_class(c));
    REQUIRE(m.has_value());
    CHECK(*m == c);
  }

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = build_instance(random_instance(2 + seed % 4, 0.45, seed + 31));
    QuotientPoset q(*inst.gran);
    auto r = quotient_theorem_report(q);
    CAPTURE(seed);
    CHECK(r.all_hold());
  }
}
