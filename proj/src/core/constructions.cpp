#include <algorithm>
#include <functional>

#include "neumann.hpp"

namespace ringprob {

namespace {

bool subset(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string id_list(const std::vector<ElementId>& ids, std::size_t limit = 16) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  if (ids.size() > limit) out += ",...";
  return out + "]";
}

struct ConstructionOps {
  // Orbit of x over the domain: [D, x] or xD.
  std::function<ElementSet(ElementId)> orbit;
  // The value of the orbit map at y: [y, a] or a y.
  std::function<ElementId(ElementId y, ElementId a)> orbit_map;
  // Membership test for C: [b, x] = 0 or x b = 0.
  std::function<bool(ElementId b, ElementId x)> kills;
  // All brackets [D, D] or products D D.
  std::function<ElementSet(const ElementSet&)> square;
};

ConstructionReport run_construction(const FiniteRing& ring, const AdditiveSubgroup& domain,
                                    Mode mode, const ConstructionOps& ops,
                                    std::uint64_t coset_base) {
  ConstructionReport rep;
  rep.mode = mode;
  rep.domain_order = domain.order();

  // a: least id with the largest orbit.
  std::uint64_t n = 0;
  ElementId a = 0;
  for (ElementId x : domain.members()) {
    const std::uint64_t o = ops.orbit(x).size();
    if (o > n) {
      n = o;
      a = x;
    }
  }
  rep.a = a;
  rep.n = n;
  const ElementSet orbit_a = ops.orbit(a);

  std::vector<char> seen(ring.cardinality(), 0);
  for (ElementId y : domain.members()) {
    const ElementId v = ops.orbit_map(y, a);
    if (!seen[v]) {
      seen[v] = 1;
      rep.b_list.push_back(y);
    }
  }
  {
    std::vector<ElementId> realized;
    for (ElementId b : rep.b_list) realized.push_back(ops.orbit_map(b, a));
    rep.log.check("b_list_realizes_orbit",
                  ElementSet(realized) == orbit_a && rep.b_list.size() == n,
                  "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                      " b=" + id_list(rep.b_list));
  }

  std::vector<char> cmask(ring.cardinality(), 0);
  for (ElementId x : domain.members())
    if (std::all_of(rep.b_list.begin(), rep.b_list.end(),
                    [&](ElementId b) { return ops.kills(b, x); }))
      cmask[x] = 1;
  rep.c = closed_mask_subgroup(ring, std::move(cmask));

  // For x in C the orbit of a + x contains every orbit_map(b_i, a), and by
  // maximality cannot be larger, so it equals orbit(a); then orbit(x) is
  // inside orbit(a) + orbit(a + x) = orbit(a).
  std::optional<ElementId> shift_failure, containment_failure;
  for (ElementId x : rep.c.members()) {
    if (!shift_failure && ops.orbit(ring.add(a, x)) != orbit_a) shift_failure = x;
    if (!containment_failure && !subset(ops.orbit(x), orbit_a)) containment_failure = x;
  }
  rep.log.check("shifted_orbit_equal", !shift_failure,
                shift_failure ? "x=" + std::to_string(*shift_failure)
                              : "|C|=" + std::to_string(rep.c.order()));
  rep.log.check("orbit_contained_in_orbit_of_a", !containment_failure,
                containment_failure ? "x=" + std::to_string(*containment_failure)
                                    : "|orbit(a)|=" + std::to_string(orbit_a.size()));

  rep.transversal = transversal(ring, rep.c, &domain);
  rep.s = rep.transversal.size();
  rep.log.check("coset_count_is_index", rep.s * rep.c.order() == domain.order(),
                "s=" + std::to_string(rep.s));

  rep.index_bound = boost::multiprecision::pow(BigInt(coset_base), static_cast<unsigned>(coset_base));
  rep.log.check("coset_count_bound", BigInt(rep.s) <= rep.index_bound,
                "s=" + std::to_string(rep.s) + " n=" + std::to_string(coset_base));

  const ElementSet sq = ops.square(domain.as_set());
  const AdditiveSubgroup sq_span = additive_span(ring, sq);
  rep.set_size = sq.size();
  rep.span_size = sq_span.order();

  std::vector<ElementId> union_gens(orbit_a.begin(), orbit_a.end());
  rep.product_bound = BigInt(orbit_a.size());
  for (ElementId rep_i : rep.transversal) {
    const ElementSet o = ops.orbit(rep_i);
    union_gens.insert(union_gens.end(), o.begin(), o.end());
    rep.product_bound *= o.size();
  }
  const AdditiveSubgroup orbit_span = additive_span(ring, union_gens);
  rep.log.check("span_contained_in_orbit_sum", sq_span.is_subset_of(orbit_span),
                "span=" + std::to_string(sq_span.order()) +
                    " orbit_sum=" + std::to_string(orbit_span.order()));
  rep.log.check("span_within_product_bound", BigInt(rep.span_size) <= rep.product_bound,
                "span=" + std::to_string(rep.span_size));
  return rep;
}

}  // namespace

ConstructionReport bounded_commutator_construction(const FiniteRing& ring,
                                                   const AdditiveSubgroup* domain) {
  require_enumerable(ring, "bounded_commutator_construction");
  const AdditiveSubgroup whole = domain ? AdditiveSubgroup{} : whole_ring(ring);
  const AdditiveSubgroup& dom = domain ? *domain : whole;
  ConstructionOps ops;
  ops.orbit = [&](ElementId x) { return commutator_set(ring, x, &dom); };
  ops.orbit_map = [&](ElementId y, ElementId a) { return ring.bracket(y, a); };
  ops.kills = [&](ElementId b, ElementId x) { return ring.bracket(b, x) == 0; };
  ops.square = [&](const ElementSet& s) { return bracket_set(ring, s, s); };
  std::uint64_t n = 0;
  for (ElementId x : dom.members()) n = std::max<std::uint64_t>(n, ops.orbit(x).size());
  return run_construction(ring, dom, Mode::cp, ops, n);
}

ConstructionReport bounded_square_construction(const FiniteRing& ring,
                                               const AdditiveSubgroup* domain) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("bounded_square_construction");
  require_enumerable(ring, "bounded_square_construction");
  const AdditiveSubgroup whole = domain ? AdditiveSubgroup{} : whole_ring(ring);
  const AdditiveSubgroup& dom = domain ? *domain : whole;
  ConstructionOps ops;
  ops.orbit = [&](ElementId x) { return right_multiples(ring, x, &dom); };
  ops.orbit_map = [&](ElementId y, ElementId a) { return ring.product(a, y); };
  // (a + x) b = a b needs x b = 0: C is the left annihilator of the b_i.
  ops.kills = [&](ElementId b, ElementId x) { return ring.product(x, b) == 0; };
  ops.square = [&](const ElementSet& s) { return product_set(ring, s, s); };
  std::uint64_t n_right = 0, n_left = 0;
  for (ElementId x : dom.members()) {
    n_right = std::max<std::uint64_t>(n_right, ops.orbit(x).size());
    n_left = std::max<std::uint64_t>(n_left, left_multiples(ring, x, &dom).size());
  }
  ConstructionReport rep = run_construction(ring, dom, Mode::zp, ops, std::max(n_right, n_left));
  rep.n_left = n_left;
  return rep;
}

}  // namespace ringprob
