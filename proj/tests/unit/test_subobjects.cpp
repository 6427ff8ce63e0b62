#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "subobjects.hpp"

using namespace ringprob;
using namespace testing_helpers;

namespace {

std::vector<std::uint64_t> ids(const AdditiveSubgroup& a) {
  return {a.members().begin(), a.members().end()};
}

std::vector<std::uint64_t> ids(const std::set<std::uint64_t>& s) { return {s.begin(), s.end()}; }

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> out;
  for (const auto& r : sample_rings())
    if (r.cardinality() <= 16) out.push_back(r);
  return out;
}

oracle::Kind to_oracle(IdealKind k) {
  switch (k) {
    case IdealKind::left: return oracle::Kind::left;
    case IdealKind::right: return oracle::Kind::right;
    case IdealKind::two_sided: return oracle::Kind::two_sided;
    case IdealKind::lie: return oracle::Kind::lie;
  }
  return oracle::Kind::lie;
}

}  // namespace

TEST_CASE("spans and indices") {
  const FiniteRing z4 = build_family("Z:4");
  const AdditiveSubgroup two = additive_span(z4, ElementSet({2}));
  CHECK(two.members() == std::vector<ElementId>{0, 2});
  CHECK(index(z4, two) == 2);
  CHECK(additive_span(z4, ElementSet()).members() == std::vector<ElementId>{0});
  CHECK(index(z4, whole_ring(z4)) == 1);
  const FiniteRing v4 = build_family("zero:4");
  CHECK(additive_span(v4, ElementSet({1, 2})).order() == 4);
  CHECK(index(build_family("M2:2"), zero_subgroup(build_family("M2:2"))) == 16);
}

TEST_CASE("span matches the closure oracle") {
  for (const auto& r : sample_rings()) {
    const oracle::Naive n(r);
    for (int i = 0; i < 20; ++i) {
      std::vector<ElementId> seed;
      std::vector<std::uint64_t> seed64;
      for (int j = 0; j < 1 + i % 3; ++j) {
        seed.push_back(random_element(r));
        seed64.push_back(seed.back());
      }
      const AdditiveSubgroup s = additive_span(r, ElementSet(seed));
      CHECK(ids(s) == ids(oracle::span(n, seed64)));
      CHECK(r.cardinality() % s.order() == 0);
      for (ElementId g : s.generators()) CHECK(s.contains(g));
    }
  }
}

TEST_CASE("sum and intersection") {
  const FiniteRing z12 = build_family("Z:12");
  const auto a = additive_span(z12, ElementSet({4}));
  const auto b = additive_span(z12, ElementSet({6}));
  CHECK(sum(z12, a, b).members() == std::vector<ElementId>{0, 2, 4, 6, 8, 10});
  CHECK(intersect(z12, a, b).members() == std::vector<ElementId>{0});
  CHECK(intersect(z12, sum(z12, a, b), b).same_members(b));
}

TEST_CASE("centralizers and commutator sets in M2(F2)") {
  const FiniteRing m = build_family("M2:2");
  const oracle::Naive n(m);
  const auto c = centralizer(m, ElementSet({1}));
  CHECK(c.order() == 4);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t y = 0; y < 16; ++y)
    if (n.br(1, y) == 0) expect.push_back(y);
  CHECK(ids(c) == expect);
  CHECK(commutator_set(m, 2).size() == 4);
  CHECK(centralizer(m, ElementSet()).order() == 16);
  for (ElementId a = 0; a < 16; ++a)
    CHECK(commutator_set(m, a).size() == index(m, centralizer(m, ElementSet({a}))));
}

TEST_CASE("commutative rings are their own centralizers") {
  const FiniteRing z6 = build_family("Z:6");
  for (ElementId a = 0; a < 6; ++a) {
    CHECK(centralizer(z6, ElementSet({a})).order() == 6);
    CHECK(commutator_set(z6, a).ids() == std::vector<ElementId>{0});
  }
}

TEST_CASE("annihilators and multiples") {
  const FiniteRing z6 = build_family("Z:6");
  CHECK(right_annihilator(z6, ElementSet({2})).members() == std::vector<ElementId>{0, 3});
  CHECK(right_annihilator(z6, ElementSet({0})).order() == 6);
  CHECK(right_multiples(z6, 2).ids() == std::vector<ElementId>{0, 2, 4});
  const FiniteRing zero = build_family("zero:8");
  for (ElementId x = 0; x < 8; ++x) {
    CHECK(right_annihilator(zero, ElementSet({x})).order() == 8);
    CHECK(right_multiples(zero, x).ids() == std::vector<ElementId>{0});
  }
  CHECK_THROWS_AS(right_annihilator(associated_lie_ring(build_family("M2:2")), ElementSet({1})),
                  FlavorMismatch);
  for (const auto& r : sample_rings()) {
    if (r.flavor() != Flavor::associative) continue;
    const FiniteRing op = opposite_ring(r);
    for (int i = 0; i < 10; ++i) {
      const ElementId a = random_element(r);
      const auto ra = right_annihilator(r, ElementSet({a}));
      CHECK(left_annihilator(r, ElementSet({a})).same_members(right_annihilator(op, ElementSet({a}))));
      CHECK(right_multiples(r, a).size() == index(r, ra));
      CHECK(left_multiples(r, a).size() == index(r, left_annihilator(r, ElementSet({a}))));
    }
  }
}

TEST_CASE("product and bracket sets") {
  const FiniteRing z4 = build_family("Z:4");
  CHECK(product_set(z4, ElementSet({2}), ElementSet({0, 1, 2, 3})).ids() == std::vector<ElementId>{0, 2});
  const FiniteRing m = build_family("M2:2");
  const oracle::Naive n(m);
  std::set<std::uint64_t> all;
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) all.insert(n.br(x, y));
  const ElementSet whole = whole_ring(m).as_set();
  const ElementSet brackets = bracket_set(m, whole, whole);
  CHECK(std::vector<std::uint64_t>(brackets.begin(), brackets.end()) == ids(all));
}

TEST_CASE("ideal check with counterexample") {
  const FiniteRing m = build_family("M2:2");
  const auto e11 = additive_span(m, ElementSet({1}));
  const IdealCheck left = is_ideal(m, e11, IdealKind::left);
  CHECK_FALSE(left.ok);
  REQUIRE(left.counterexample);
  CHECK(left.counterexample->first == 4);
  CHECK(left.counterexample->second == 1);
  CHECK(is_ideal(m, whole_ring(m), IdealKind::two_sided).ok);
  CHECK(is_ideal(m, zero_subgroup(m), IdealKind::lie).ok);
  // First column E11, E21 is a left ideal, not a right one.
  const auto col = additive_span(m, ElementSet({1, 4}));
  CHECK(is_ideal(m, col, IdealKind::left).ok);
  CHECK_FALSE(is_ideal(m, col, IdealKind::right).ok);
}

TEST_CASE("subgroup enumeration and ideal checks match the oracle") {
  for (const auto& r : small_rings()) {
    const oracle::Naive n(r);
    const auto expect = oracle::subgroups(n);
    const auto got = enumerate_subgroups(r);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(ids(got[i]) == expect[i]);
      for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided, IdealKind::lie}) {
        if (k != IdealKind::lie && r.flavor() != Flavor::associative) continue;
        CHECK(is_ideal(r, got[i], k).ok == oracle::is_ideal(n, expect[i], to_oracle(k)));
      }
    }
  }
}

TEST_CASE("closures are the least ideals containing the seed") {
  for (const auto& r : small_rings()) {
    const oracle::Naive n(r);
    const auto groups = oracle::subgroups(n);
    for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided, IdealKind::lie}) {
      if (k != IdealKind::lie && r.flavor() != Flavor::associative) continue;
      for (int i = 0; i < 6; ++i) {
        const ElementId s = random_element(r);
        const IdealClosure c = closure(r, ElementSet({s}), k);
        // Least = intersection of every ideal of this kind containing s.
        std::set<std::uint64_t> meet;
        bool first = true;
        for (const auto& g : groups) {
          if (!std::binary_search(g.begin(), g.end(), std::uint64_t{s})) continue;
          if (!oracle::is_ideal(n, g, to_oracle(k))) continue;
          if (first) {
            meet.insert(g.begin(), g.end());
            first = false;
          } else {
            std::set<std::uint64_t> keep;
            for (auto x : g)
              if (meet.count(x)) keep.insert(x);
            meet = keep;
          }
        }
        CHECK(ids(c.ideal) == ids(meet));
        // ideal = span(seed) + sum of one-step images of the witnesses
        AdditiveSubgroup acc = additive_span(r, ElementSet({s}));
        for (ElementId w : c.witnesses) acc = sum(r, acc, ideal_step_image(r, w, k));
        CHECK(acc.same_members(c.ideal));
      }
    }
  }
}

TEST_CASE("transversals") {
  for (const auto& r : small_rings()) {
    for (const auto& g : enumerate_subgroups(r)) {
      const auto t = transversal(r, g);
      REQUIRE(t.size() == index(r, g));
      CHECK(t.front() == 0);
      CHECK(std::is_sorted(t.begin(), t.end()));
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) CHECK_FALSE(g.contains(r.sub(t[i], t[j])));
    }
  }
}

TEST_CASE("subgroup enumeration is capped") {
  CHECK_THROWS_AS(enumerate_subgroups(build_family("T2:7")), CapExceeded);
}
