#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ringprob;
using namespace testing_helpers;

namespace {

IllFormedReason reason_of(const GroupShape& s, const ProductTable& t, Flavor f) {
  try {
    FiniteRing::make(s, t, f);
  } catch (const IllFormed& e) {
    return e.reason();
  }
  FAIL("expected IllFormed");
  return IllFormedReason::syntax;
}

std::vector<std::size_t> witness_of(const GroupShape& s, const ProductTable& t, Flavor f) {
  try {
    FiniteRing::make(s, t, f);
  } catch (const IllFormed& e) {
    return e.witness();
  }
  return {};
}

}  // namespace

TEST_CASE("Z_4 arithmetic") {
  const FiniteRing z4 = FiniteRing::make(GroupShape({4}), {{{1}}}, Flavor::associative);
  CHECK(z4.cardinality() == 4);
  CHECK(z4.add(3, 2) == 1);
  CHECK(z4.neg(1) == 3);
  CHECK(z4.mul(2, 2) == 0);
  CHECK(z4.mul(3, 3) == 1);
  const FiniteRing z6 = build_family("Z:6");
  CHECK(z6.mul(2, 3) == 0);
}

TEST_CASE("scalar multiple in Z_2 + Z_2") {
  const GroupShape g({2, 2});
  const ElementId x = g.encode(std::vector<std::uint32_t>{1, 1});
  CHECK(x == 3);
  CHECK(g.smul(2, x) == 0);
  CHECK(g.smul(-1, x) == x);
  CHECK(g.decode(2) == Coords{0, 1});
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(GroupShape({1}), IllFormed);
  CHECK_THROWS_AS(GroupShape({4, 2}), IllFormed);
  const auto ns = normalize_orders({4, 2, 3});
  CHECK(ns.shape.orders() == std::vector<std::uint32_t>{2, 3, 4});
  CHECK(ns.permutation == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("two-dimensional table from the census is associative") {
  const auto t = table_of(2, {{0, 0, {1, 0}}, {0, 1, {0, 1}}});
  const FiniteRing r = FiniteRing::make(GroupShape({2, 2}), t, Flavor::associative);
  CHECK(oracle::associative_all(oracle::Naive(r)));
}

TEST_CASE("validation failures name the reason and basis indices") {
  SUBCASE("antisymmetry") {
    CHECK(reason_of(GroupShape({3}), {{{1}}}, Flavor::lie) == IllFormedReason::antisymmetry);
    CHECK(witness_of(GroupShape({3}), {{{1}}}, Flavor::lie) == std::vector<std::size_t>{0, 0});
  }
  SUBCASE("well-definedness") {
    // e1 has order 2 but e1 e1 = e2 has order 4.
    const auto t = table_of(2, {{0, 0, {0, 1}}});
    CHECK(reason_of(GroupShape({2, 4}), t, Flavor::associative) == IllFormedReason::well_definedness);
    CHECK(witness_of(GroupShape({2, 4}), t, Flavor::associative) == std::vector<std::size_t>{0, 0});
  }
  SUBCASE("associativity") {
    // e1 e1 = e2, everything else 0 except e2 e1 = e1.
    const auto t = table_of(2, {{0, 0, {0, 1}}, {1, 0, {1, 0}}});
    CHECK(reason_of(GroupShape({2, 2}), t, Flavor::associative) == IllFormedReason::associativity);
    CHECK(witness_of(GroupShape({2, 2}), t, Flavor::associative) == std::vector<std::size_t>{0, 0, 0});
  }
  SUBCASE("jacobi") {
    // [e1,e2] = e3, [e2,e3] = e2 over F_2.
    const auto t = table_of(3, {{0, 1, {0, 0, 1}}, {1, 0, {0, 0, 1}}, {1, 2, {0, 1, 0}}, {2, 1, {0, 1, 0}}});
    CHECK(reason_of(GroupShape({2, 2, 2}), t, Flavor::lie) == IllFormedReason::jacobi);
  }
  SUBCASE("range and arity") {
    CHECK(reason_of(GroupShape({2}), {{{2}}}, Flavor::associative) == IllFormedReason::coefficient_range);
    CHECK(reason_of(GroupShape({2}), {{{1, 0}}}, Flavor::associative) == IllFormedReason::arity);
  }
}

TEST_CASE("multiplication on a Lie ring is a flavor mismatch") {
  const FiniteRing lie = associated_lie_ring(build_family("M2:2"));
  CHECK_THROWS_AS(lie.mul(1, 2), FlavorMismatch);
  CHECK_NOTHROW(lie.bracket(1, 2));
  CHECK_THROWS_AS(opposite_ring(lie), FlavorMismatch);
}

TEST_CASE("bracket in M2(F2)") {
  const FiniteRing m = build_family("M2:2");
  // Basis E11, E12, E21, E22 has ids 1, 2, 4, 8.
  CHECK(m.bracket(1, 2) == 2);
  CHECK(m.bracket(2, 1) == 2);
  CHECK(m.mul(1, 2) == 2);
  CHECK(m.mul(2, 1) == 0);
  CHECK(m.mul(2, 4) == 1);
}

TEST_CASE("associated Lie rings") {
  const FiniteRing z4 = build_family("Z:4");
  const FiniteRing l = associated_lie_ring(z4);
  CHECK(l.flavor() == Flavor::lie);
  for (const auto& row : l.table())
    for (const auto& e : row) CHECK(std::all_of(e.begin(), e.end(), [](auto c) { return c == 0; }));
  const FiniteRing m = build_family("M2:2");
  const FiniteRing lm = associated_lie_ring(m);
  CHECK(lm.cardinality() == 16);
  bool nonabelian = false;
  for (ElementId x = 0; x < 16; ++x)
    for (ElementId y = 0; y < 16; ++y) {
      CHECK(lm.bracket(x, y) == m.sub(m.mul(x, y), m.mul(y, x)));
      nonabelian = nonabelian || lm.bracket(x, y) != 0;
    }
  CHECK(nonabelian);
}

TEST_CASE("opposite rings") {
  const FiniteRing z6 = build_family("Z:6");
  CHECK(opposite_ring(z6).table() == z6.table());
  for (const auto& r : sample_rings()) {
    if (r.flavor() != Flavor::associative) continue;
    const FiniteRing op = opposite_ring(r);
    CHECK(opposite_ring(op) == r);
    for (int n = 0; n < 200; ++n) {
      const ElementId x = random_element(r), y = random_element(r);
      CHECK(op.mul(x, y) == r.mul(y, x));
    }
  }
}

TEST_CASE("products agree with the coordinate oracle") {
  for (const auto& r : sample_rings()) {
    const oracle::Naive n(r);
    for (int i = 0; i < 300; ++i) {
      const ElementId x = random_element(r), y = random_element(r);
      CHECK(r.product(x, y) == n.tmul(x, y));
      CHECK(r.add(x, y) == n.add(x, y));
      CHECK(r.bracket(x, y) == n.br(x, y));
    }
  }
  // Beyond the cached-table size.
  const FiniteRing big = build_family("T2:7");
  CHECK(big.cardinality() == 343);
  const oracle::Naive n(big);
  for (int i = 0; i < 300; ++i) {
    const ElementId x = random_element(big), y = random_element(big);
    CHECK(big.product(x, y) == n.tmul(x, y));
  }
}

TEST_CASE("ring axioms on random triples") {
  for (const auto& r : sample_rings()) {
    for (int i = 0; i < 300; ++i) {
      const ElementId x = random_element(r), y = random_element(r), z = random_element(r);
      CHECK(r.product(x, r.add(y, z)) == r.add(r.product(x, y), r.product(x, z)));
      CHECK(r.product(r.add(x, y), z) == r.add(r.product(x, z), r.product(y, z)));
      if (r.flavor() == Flavor::associative) {
        CHECK(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
      } else {
        CHECK(r.bracket(x, y) == r.neg(r.bracket(y, x)));
        CHECK(r.bracket(x, x) == 0);
        const ElementId j = r.add(r.add(r.bracket(r.bracket(x, y), z), r.bracket(r.bracket(y, z), x)),
                                  r.bracket(r.bracket(z, x), y));
        CHECK(j == 0);
      }
    }
  }
}

TEST_CASE("content hash is stable and sensitive") {
  const FiniteRing a = build_family("T2:2");
  CHECK(a.content_hash() == build_family("T2:2").content_hash());
  CHECK(a.content_hash() != opposite_ring(a).content_hash());
  CHECK(a.content_hash() == a.renamed("other").content_hash());
}
