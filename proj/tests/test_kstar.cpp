#include <doctest.h>

#include <random>
#include "bitten/kstar.hpp"
#include "test_helpers.hpp"

using namespace bitten;
using namespace bitten::testing;

namespace {

Bits family_of(const KStar& ks, std::initializer_list<int> idx) {
  Bits f(ks.size());
  for (int i : idx) f.set(static_cast<std::size_t>(i));
  return f;
}

}  // namespace

TEST_CASE("isotone map counts on tiny posets") {
  CHECK(enumerate_kstar(Poset::chain(2)).size() == 3);
  CHECK(enumerate_kstar(Poset::antichain(2)).size() == 4);
  CHECK(enumerate_kstar(Poset::chain(1)).size() == 2);
}

TEST_CASE("up and lo partition the map family") {
  auto ks = enumerate_kstar(Poset::chain(2));
  // maps over the chain a < b: {}, {b}, {a,b}
  int ia = ks.index_of([&] {
    Bits m(2);
    m.set(0);
    m.set(1);
    return m;
  }());
  int ib = ks.index_of([&] {
    Bits m(2);
    m.set(1);
    return m;
  }());
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);
  CHECK(ks.up(0) == family_of(ks, {ia}));
  CHECK(ks.up(1) == family_of(ks, {ib, ia}));
  for (std::size_t p = 0; p < 2; ++p) {
    CHECK((ks.up(p) & ks.lo(p)).none());
    CHECK((ks.up(p) | ks.lo(p)) == ks.full_family());
  }
}

TEST_CASE("A-ideals and A-filters") {
  auto ks = enumerate_kstar(Poset::chain(2));
  Bits b_only(2);
  b_only.set(1);
  int ib = ks.index_of(b_only);
  Bits a = family_of(ks, {ib});

  Bits ideal(2);
  ideal.set(0);
  Bits filter(2);
  filter.set(1);
  CHECK(is_A_ideal(ks, ideal, a));
  CHECK(is_A_filter(ks, filter, a));
  CHECK_FALSE(is_A_ideal(ks, filter, a));

  // empty family forces K on both sides
  Bits empty(ks.size());
  Bits full_k(2, true);
  CHECK(is_A_ideal(ks, full_k, empty));
  CHECK(is_A_filter(ks, full_k, empty));
}

TEST_CASE("A-ideals are order ideals") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Poset k = random_poset(2 + seed % 4, 0.5, seed);
    auto ks = enumerate_kstar(k);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      Bits a(ks.size());
      for (std::size_t i = 0; i < ks.size(); ++i)
        if (rng() & 1) a.set(i);
      Bits zeros(k.size(), true);
      a.for_each([&](std::size_t i) { zeros -= ks.map_upset(i); });
      // downward closed
      for (std::size_t p = 0; p < k.size(); ++p)
        if (zeros.test(p))
          for (std::size_t q = 0; q < k.size(); ++q)
            if (k.leq(q, p)) CHECK(zeros.test(q));
    }
  }
}

TEST_CASE("full and separating families") {
  auto ks = enumerate_kstar(Poset::chain(2));
  CHECK(is_full(ks, ks.full_family()));
  CHECK(is_separating(ks, ks.full_family()));
  CHECK(is_full(ks, ks.family_without_constants()));
  CHECK(is_separating(ks, ks.family_without_constants()));
  CHECK_FALSE(is_full(ks, Bits(ks.size())));
}

TEST_CASE("closure operators behave as closures") {
  auto ks2 = enumerate_kstar(Poset::chain(2));
  Bits b_only(2);
  b_only.set(1);
  int ib = ks2.index_of(b_only);
  Bits x = family_of(ks2, {ib});
  CHECK(cl1(ks2, x, ks2.full_family()) == ks2.up(1));

  Bits empty(ks2.size());
  Bits inter = ks2.up(0) & ks2.up(1);
  CHECK(cl1(ks2, empty, ks2.full_family()) == inter);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Poset k = random_poset(2 + seed % 3, 0.5, seed + 40);
    auto ks = enumerate_kstar(k);
    if (ks.size() > 12) continue;
    Bits a = ks.full_family();
    for (std::uint64_t m = 0; m < (1ull << ks.size()); ++m) {
      Bits x(ks.size());
      for (std::size_t i = 0; i < ks.size(); ++i)
        if (m >> i & 1) x.set(i);
      for (auto cl : {&cl1, &cl2}) {
        Bits c = (*cl)(ks, x, a);
        CHECK(x.is_subset_of(c));
        CHECK((*cl)(ks, c, a) == c);
      }
      // monotone in x
      Bits y = x;
      if (!x.test(0)) {
        y.set(0);
        CHECK(cl1(ks, x, a).is_subset_of(cl1(ks, y, a)));
        CHECK(cl2(ks, x, a).is_subset_of(cl2(ks, y, a)));
      }
    }
  }
}

TEST_CASE("C1O2 sets of the two-chain are the two up families") {
  auto ks = enumerate_kstar(Poset::chain(2));
  auto sets = c1o2_sets(ks, ks.full_family());
  REQUIRE(sets.size() == 2);
  bool has_up0 = false, has_up1 = false;
  for (const Bits& s : sets) {
    if (s == ks.up(0)) has_up0 = true;
    if (s == ks.up(1)) has_up1 = true;
  }
  CHECK(has_up0);
  CHECK(has_up1);
  for (std::size_t p = 0; p < 2; ++p) CHECK(is_c1o2(ks, ks.up(p), ks.full_family()));
}

TEST_CASE("one-element poset has a single C1O2 set") {
  auto ks = enumerate_kstar(Poset::chain(1));
  CHECK(c1o2_sets(ks, ks.full_family()).size() == 1);
  CHECK(sigma(ks, 0, ks.full_family()) == ks.up(0));
  auto rep = representation_check(ks, ks.full_family());
  CHECK(rep.isomorphism());
}

TEST_CASE("representation theorem on random posets") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Poset k = random_poset(2 + seed % 5, 0.4, seed + 17);
    auto ks = enumerate_kstar(k);
    auto rep = representation_check(ks, ks.full_family());
    CAPTURE(seed);
    CHECK(rep.full);
    CHECK(rep.separating);
    CHECK(rep.isomorphism());
    CHECK(rep.c1o2_count == k.size());
    auto trimmed = representation_check(ks, ks.family_without_constants());
    CHECK(trimmed.full);
    CHECK(trimmed.separating);
  }
}

TEST_CASE("sigma properties for arbitrary subfamilies") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Poset k = random_poset(2, 0.5, seed);
    auto ks = enumerate_kstar(k);
    REQUIRE(ks.size() <= 5);
    int zero = ks.index_of(Bits(k.size()));
    int one = ks.index_of(Bits(k.size(), true));
    for (std::uint64_t m = 0; m < (1ull << ks.size()); ++m) {
      Bits a(ks.size());
      for (std::size_t i = 0; i < ks.size(); ++i)
        if (m >> i & 1) a.set(i);
      auto rep = representation_check(ks, a);
      CHECK(rep.isotone);
      if (rep.full) CHECK(rep.injective);
      // surjectivity needs the constant maps inside the family; without
      // them A (resp. the empty family) joins the C1O2 sets unclaimed.
      bool constants_in = a.test(static_cast<std::size_t>(zero)) &&
                          a.test(static_cast<std::size_t>(one));
      if (rep.separating && constants_in) CHECK(rep.surjective);
    }
  }
}
