#include <doctest.h>

#include "helpers.hpp"
#include "neumann.hpp"
#include "oracles.hpp"
#include "probability.hpp"
#include "report_json.hpp"

using namespace ringprob;
using namespace testing_helpers;

namespace {

std::vector<std::uint64_t> ids(const AdditiveSubgroup& a) {
  return {a.members().begin(), a.members().end()};
}

// k-fold sumset of x by repeated pairwise addition.
std::set<std::uint64_t> fold_sum(const oracle::Naive& g, const std::set<std::uint64_t>& x,
                                 std::uint64_t k) {
  std::set<std::uint64_t> cur = x;
  for (std::uint64_t i = 1; i < k; ++i) {
    std::set<std::uint64_t> next;
    for (auto a : cur)
      for (auto b : x) next.insert(g.add(a, b));
    cur = std::move(next);
  }
  return cur;
}

std::vector<FiniteRing> pipeline_rings() {
  std::vector<FiniteRing> out;
  for (const char* s : {"Z:1", "Z:2", "Z:4", "Z:12", "zero:1", "zero:16", "T2:2", "T2:3", "M2:2",
                        "sum(T2:2,Z:2)", "sum(M2:2,zero:2)"})
    out.push_back(build_family(s));
  for (const auto& e : enumerate_shape({2, 2}).rings) out.push_back(e.ring);
  out.push_back(opposite_ring(build_family("T2:3")));
  return out;
}

}  // namespace

TEST_CASE("sumset generation: spec instances") {
  const EberhardResult a = eberhard_generation(GroupShape({5}), ElementSet({0, 1, 4}));
  CHECK(a.r == 1);
  CHECK(a.fold == 3);
  CHECK(a.verified);
  const EberhardResult b = eberhard_generation(GroupShape({7}), ElementSet({0, 1, 6}));
  CHECK(b.r == 2);
  CHECK(b.fold == 6);
  CHECK(b.span_order == 7);
  CHECK(b.verified);
  CHECK(b.stable_at == 3);
}

TEST_CASE("sumset generation rejects asymmetric sets") {
  CHECK_THROWS_AS(eberhard_generation(GroupShape({5}), ElementSet({0, 1})), Error);
  CHECK_THROWS_AS(eberhard_generation(GroupShape({5}), ElementSet({1, 4})), Error);
}

TEST_CASE("sumset generation agrees with repeated addition") {
  std::mt19937_64 g(7);
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{12}, {2, 6}, {3, 3}, {2, 2, 4}, {16}}) {
    const FiniteRing z = FiniteRing::make(
        GroupShape(orders),
        ProductTable(orders.size(), std::vector<Coords>(orders.size(), Coords(orders.size(), 0))),
        Flavor::associative);
    const oracle::Naive n(z);
    for (int t = 0; t < 40; ++t) {
      std::set<std::uint64_t> x{0};
      for (std::uint64_t e = 1; e < n.n; ++e)
        if (g() % 5 == 0) {
          x.insert(e);
          x.insert(n.neg(e));
        }
      std::vector<ElementId> xv(x.begin(), x.end());
      const EberhardResult r = eberhard_generation(z.shape(), ElementSet(xv));
      std::uint64_t rr = 1;
      while ((rr + 1) * x.size() <= n.n) ++rr;
      CHECK(r.r == rr);
      const auto s = fold_sum(n, x, 3 * rr);
      const auto sp = oracle::span(n, std::vector<std::uint64_t>(x.begin(), x.end()));
      CHECK(s == sp);
      CHECK(r.verified);
      CHECK(r.span_order == sp.size());
    }
  }
}

TEST_CASE("x sets") {
  const FiniteRing m = build_family("M2:2");
  const oracle::Naive n(m);
  const Rational eps = commuting_probability(m);
  std::vector<ElementId> expect;
  for (std::uint64_t x = 0; x < 16; ++x) {
    std::set<std::uint64_t> orbit;
    for (std::uint64_t y = 0; y < 16; ++y) orbit.insert(n.br(y, x));
    if (Rational(orbit.size()) <= Rational(2) / eps) expect.push_back(static_cast<ElementId>(x));
  }
  CHECK(x_set(m, eps, Mode::cp).ids() == expect);
  CHECK_THROWS_AS(x_set(m, Rational(0), Mode::cp), Error);
}

TEST_CASE("extraction yields valid reports with ideals of the right kind") {
  for (const auto& r : pipeline_rings()) {
    CAPTURE(r.name());
    const oracle::Naive n(r);
    for (Mode mode : {Mode::cp, Mode::zp}) {
      const ExtractionReport rep = extract(r, mode);
      if (const auto* f = rep.log.first_failure()) FAIL_CHECK(f->name << " " << f->witness);
      CHECK(rep.valid());
      const auto d = ids(rep.d);
      CHECK(oracle::is_ideal(n, d, mode == Mode::cp ? oracle::Kind::lie : oracle::Kind::two_sided));
      CHECK(rep.index_d == n.n / d.size());
      CHECK(rep.square_or_bracket_span_size == oracle::square_span(n, d, mode == Mode::cp));
      CHECK(Rational(rep.index_d) <= rep.threshold);
    }
  }
}

TEST_CASE("commutative rings take the fast path") {
  const ExtractionReport rep = extract(build_family("Z:12"), Mode::cp);
  CHECK(rep.valid());
  CHECK(rep.fast_path);
  CHECK(rep.index_d == 1);
  CHECK(rep.converted_to_lie);
}

TEST_CASE("epsilon override") {
  const FiniteRing m = build_family("M2:2");
  const ExtractionReport rep = extract(m, Mode::cp, make_rational(1, 4));
  CHECK(rep.epsilon_overridden);
  CHECK(rep.epsilon == make_rational(1, 4));
  // A stated epsilon above the true probability breaks the density step.
  const ExtractionReport bad = extract(m, Mode::cp, make_rational(9, 10));
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS(extract(m, Mode::cp, Rational(0)), Error);
}

TEST_CASE("bounded orbit constructions") {
  for (const auto& r : pipeline_rings()) {
    CAPTURE(r.name());
    const oracle::Naive n(r);
    const ConstructionReport c = bounded_commutator_construction(r);
    if (const auto* f = c.log.first_failure()) FAIL_CHECK(f->name << " " << f->witness);
    std::vector<std::uint64_t> all(n.n);
    for (std::uint64_t i = 0; i < n.n; ++i) all[i] = i;
    CHECK(c.span_size == oracle::square_span(n, all, true));
    CHECK(BigInt(c.span_size) <= c.product_bound);
    const ConstructionReport s = bounded_square_construction(r);
    if (const auto* f = s.log.first_failure()) FAIL_CHECK(f->name << " " << f->witness);
    CHECK(s.span_size == oracle::square_span(n, all, false));
    CHECK(BigInt(s.s) <= s.index_bound);
  }
}

TEST_CASE("square construction needs the left annihilator of the b_i") {
  // e1 e1 = e1, e2 e1 = e2: every right annihilator has index 2 but R^2 = R.
  const FiniteRing r = FiniteRing::make(GroupShape({2, 2}),
                                        table_of(2, {{0, 0, {1, 0}}, {1, 0, {0, 1}}}),
                                        Flavor::associative);
  const ConstructionReport s = bounded_square_construction(r);
  CHECK(s.valid());
  // With C taken as the right annihilator of the b_i, C R is not inside a R.
  const auto rc = right_annihilator(r, ElementSet(s.b_list));
  const ElementSet ar = right_multiples(r, s.a);
  bool contained = true;
  for (ElementId x : rc.members())
    for (ElementId y = 0; y < 4; ++y) contained = contained && ar.contains(r.mul(x, y));
  CHECK_FALSE(contained);
  // Left annihilators of single elements are not bounded in the same way.
  std::uint64_t max_right = 0, max_left = 0;
  for (ElementId x = 0; x < 4; ++x) {
    max_right = std::max<std::uint64_t>(max_right, index(r, right_annihilator(r, ElementSet({x}))));
    max_left = std::max<std::uint64_t>(max_left, index(r, left_annihilator(r, ElementSet({x}))));
  }
  CHECK(max_right == 2);
  CHECK(max_left == 4);
}

TEST_CASE("one-sided ideals descend to two-sided ideals") {
  std::size_t cases = 0;
  for (const auto& r : pipeline_rings()) {
    if (r.cardinality() > 16) continue;
    const oracle::Naive n(r);
    for (const auto& g : enumerate_subgroups(r)) {
      const bool left = is_ideal(r, g, IdealKind::left).ok;
      const bool right = is_ideal(r, g, IdealKind::right).ok;
      if (left == right) continue;
      ++cases;
      const DescentResult d = one_sided_to_two_sided(r, g, left ? Side::left : Side::right);
      if (const auto* f = d.log.first_failure()) FAIL_CHECK(f->name << " " << f->witness);
      CHECK(oracle::is_ideal(n, ids(d.ideal), oracle::Kind::two_sided));
      CHECK(g.is_subset_of(d.ideal));
      for (const auto& s : d.trace) CHECK(s.index_after < s.index_before);
    }
  }
  CHECK(cases > 0);
  const FiniteRing m = build_family("M2:2");
  CHECK_THROWS_AS(one_sided_to_two_sided(m, additive_span(m, ElementSet({1})), Side::left), Error);
}

TEST_CASE("converse bound") {
  const FiniteRing m = build_family("M2:2");
  const ConverseResult whole = converse_lower_bound(m, whole_ring(m), Mode::cp);
  CHECK(whole.m == 1);
  // [M, M] spans the trace-zero matrices.
  CHECK(whole.k == 8);
  CHECK(whole.bound == make_rational(1, 8));
  CHECK(whole.holds);
  const ConverseResult zero = converse_lower_bound(m, zero_subgroup(m), Mode::zp);
  CHECK(zero.m == 16);
  CHECK(zero.k == 1);
  CHECK(zero.bound == make_rational(1, 256));
  CHECK(zero.holds);
}

TEST_CASE("oracle optimum") {
  const FiniteRing z4 = build_family("Z:4");
  const OracleResult o = brute_force_optimal_ideal(z4, Mode::zp);
  CHECK(o.best.members() == std::vector<ElementId>{0, 2});
  const FiniteRing zero = build_family("zero:8");
  CHECK(brute_force_optimal_ideal(zero, Mode::zp).best.order() == 8);
  CHECK(brute_force_optimal_ideal(zero, Mode::cp).best.order() == 8);
  for (const auto& r : pipeline_rings()) {
    if (r.cardinality() > 16) continue;
    const oracle::Naive n(r);
    for (Mode mode : {Mode::cp, Mode::zp}) {
      const OracleResult got = brute_force_optimal_ideal(r, mode, Objective::max);
      const oracle::Best want = oracle::optimal_ideal(
          n, mode == Mode::cp ? oracle::Kind::lie : oracle::Kind::two_sided, mode == Mode::cp);
      CHECK(ids(got.best) == want.members);
      CHECK(got.index == want.index);
      CHECK(got.span_size == want.span);
    }
  }
}

TEST_CASE("objectives") {
  CHECK(objective_value(Objective::max, 4, 2) == ObjectiveValue{4, 0});
  CHECK(objective_value(Objective::sum, 4, 2).primary == 6);
  CHECK(objective_value(Objective::lex, 4, 2) == ObjectiveValue{4, 2});
  CHECK(objective_value(Objective::max, 2, 3) == objective_value(Objective::max, 3, 1));
  CHECK(objective_value(Objective::lex, 2, 3) < objective_value(Objective::lex, 3, 1));
}

TEST_CASE("extraction reports serialize deterministically") {
  const FiniteRing m = build_family("M2:2");
  const std::string a = to_json(extract(m, Mode::zp)).dump();
  const std::string b = to_json(extract(m, Mode::zp)).dump();
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["status"] == "VALID");
  CHECK(j["assertion_log"].size() > 10);
}
