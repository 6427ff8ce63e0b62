#include "subobjects.hpp"

#include <algorithm>
#include <set>

namespace ringprob {

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ElementSet::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool AdditiveSubgroup::is_subset_of(const AdditiveSubgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElementId m) { return other.contains(m); });
}

namespace {

// Grows a closed member list by the cyclic subgroup <g>.
void extend_by(const FiniteRing& ring, std::vector<char>& mask, std::vector<ElementId>& members,
               ElementId g) {
  const std::size_t base = members.size();
  ElementId c = g;
  while (!mask[c]) {
    for (std::size_t i = 0; i < base; ++i) {
      const ElementId x = ring.add(members[i], c);
      mask[x] = 1;
      members.push_back(x);
    }
    c = ring.add(c, g);
  }
}

std::vector<ElementId> members_of(const std::vector<char>& mask) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<ElementId>(i));
  return out;
}

}  // namespace

AdditiveSubgroup subgroup_from_mask(const FiniteRing& ring, std::vector<char> mask,
                                    std::vector<ElementId> generators) {
  (void)ring;
  AdditiveSubgroup out;
  out.members_ = members_of(mask);
  out.mask_ = std::move(mask);
  out.generators_ = std::move(generators);
  return out;
}

AdditiveSubgroup additive_span(const FiniteRing& ring, std::span<const ElementId> seed) {
  require_enumerable(ring, "additive_span");
  std::vector<char> mask(ring.cardinality(), 0);
  std::vector<ElementId> members{0};
  mask[0] = 1;
  for (ElementId g : seed) extend_by(ring, mask, members, g);
  AdditiveSubgroup out;
  std::sort(members.begin(), members.end());
  out.members_ = std::move(members);
  out.mask_ = std::move(mask);
  out.generators_.assign(seed.begin(), seed.end());
  return out;
}

AdditiveSubgroup whole_ring(const FiniteRing& ring) {
  require_enumerable(ring, "whole_ring");
  std::vector<ElementId> gens;
  for (std::size_t i = 0; i < ring.rank(); ++i) gens.push_back(ring.shape().basis(i));
  return subgroup_from_mask(ring, std::vector<char>(ring.cardinality(), 1), std::move(gens));
}

AdditiveSubgroup zero_subgroup(const FiniteRing& ring) {
  return additive_span(ring, std::span<const ElementId>{});
}

AdditiveSubgroup closed_mask_subgroup(const FiniteRing& ring, std::vector<char> mask) {
  AdditiveSubgroup tmp = subgroup_from_mask(ring, mask, {});
  std::vector<ElementId> gens = reduced_generators(ring, tmp);
  return subgroup_from_mask(ring, std::move(mask), std::move(gens));
}

std::vector<ElementId> reduced_generators(const FiniteRing& ring, const AdditiveSubgroup& a) {
  std::vector<char> mask(ring.cardinality(), 0);
  std::vector<ElementId> members{0};
  mask[0] = 1;
  std::vector<ElementId> gens;
  // Try recorded generators first, then members, always least id first.
  std::vector<ElementId> candidates = a.generators();
  std::sort(candidates.begin(), candidates.end());
  candidates.insert(candidates.end(), a.members().begin(), a.members().end());
  for (ElementId g : candidates) {
    if (members.size() == a.order()) break;
    if (mask[g]) continue;
    extend_by(ring, mask, members, g);
    gens.push_back(g);
  }
  return gens;
}

AdditiveSubgroup sum(const FiniteRing& ring, const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  std::vector<char> mask(ring.cardinality(), 0);
  std::vector<ElementId> members{0};
  mask[0] = 1;
  std::vector<ElementId> gens;
  for (ElementId g : reduced_generators(ring, a)) {
    extend_by(ring, mask, members, g);
    gens.push_back(g);
  }
  for (ElementId g : reduced_generators(ring, b)) {
    if (mask[g]) continue;
    extend_by(ring, mask, members, g);
    gens.push_back(g);
  }
  return subgroup_from_mask(ring, std::move(mask), std::move(gens));
}

AdditiveSubgroup intersect(const FiniteRing& ring, const AdditiveSubgroup& a,
                           const AdditiveSubgroup& b) {
  std::vector<char> mask(ring.cardinality(), 0);
  for (ElementId m : a.members())
    if (b.contains(m)) mask[m] = 1;
  return closed_mask_subgroup(ring, std::move(mask));
}

std::uint64_t index(const FiniteRing& ring, const AdditiveSubgroup& a) {
  return ring.cardinality() / a.order();
}

namespace {

// Least-id generating list for span(s).
std::vector<ElementId> span_generators(const FiniteRing& ring, const ElementSet& s) {
  return reduced_generators(ring, additive_span(ring, s));
}

template <typename Pred>
AdditiveSubgroup filter_ring(const FiniteRing& ring, Pred&& keep) {
  std::vector<char> mask(ring.cardinality(), 0);
  for (std::uint64_t y = 0; y < ring.cardinality(); ++y)
    if (keep(static_cast<ElementId>(y))) mask[y] = 1;
  return closed_mask_subgroup(ring, std::move(mask));
}

}  // namespace

AdditiveSubgroup centralizer(const FiniteRing& ring, const ElementSet& s) {
  require_enumerable(ring, "centralizer");
  const auto gens = span_generators(ring, s);
  return filter_ring(ring, [&](ElementId y) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](ElementId g) { return ring.bracket(g, y) == 0; });
  });
}

AdditiveSubgroup right_annihilator(const FiniteRing& ring, const ElementSet& s) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("right_annihilator");
  require_enumerable(ring, "right_annihilator");
  const auto gens = span_generators(ring, s);
  return filter_ring(ring, [&](ElementId y) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](ElementId g) { return ring.product(g, y) == 0; });
  });
}

AdditiveSubgroup left_annihilator(const FiniteRing& ring, const ElementSet& s) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("left_annihilator");
  require_enumerable(ring, "left_annihilator");
  const auto gens = span_generators(ring, s);
  return filter_ring(ring, [&](ElementId y) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](ElementId g) { return ring.product(y, g) == 0; });
  });
}

namespace {

template <typename Op>
ElementSet image_over(const FiniteRing& ring, const AdditiveSubgroup* domain, Op&& op) {
  std::vector<char> seen(ring.cardinality(), 0);
  std::vector<ElementId> out;
  auto visit = [&](ElementId y) {
    const ElementId v = op(y);
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  };
  if (domain) {
    for (ElementId y : domain->members()) visit(y);
  } else {
    for (std::uint64_t y = 0; y < ring.cardinality(); ++y) visit(static_cast<ElementId>(y));
  }
  return ElementSet(std::move(out));
}

}  // namespace

ElementSet commutator_set(const FiniteRing& ring, ElementId a, const AdditiveSubgroup* domain) {
  require_enumerable(ring, "commutator_set");
  return image_over(ring, domain, [&](ElementId y) { return ring.bracket(y, a); });
}

ElementSet right_multiples(const FiniteRing& ring, ElementId a, const AdditiveSubgroup* domain) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("right_multiples");
  require_enumerable(ring, "right_multiples");
  return image_over(ring, domain, [&](ElementId y) { return ring.product(a, y); });
}

ElementSet left_multiples(const FiniteRing& ring, ElementId a, const AdditiveSubgroup* domain) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("left_multiples");
  require_enumerable(ring, "left_multiples");
  return image_over(ring, domain, [&](ElementId y) { return ring.product(y, a); });
}

namespace {

template <typename Op>
ElementSet pairwise(const FiniteRing& ring, const ElementSet& a, const ElementSet& b, Op&& op) {
  std::vector<char> seen(ring.cardinality(), 0);
  std::vector<ElementId> out;
  for (ElementId x : a)
    for (ElementId y : b) {
      const ElementId v = op(x, y);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
  return ElementSet(std::move(out));
}

}  // namespace

ElementSet product_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("product_set");
  require_enumerable(ring, "product_set");
  return pairwise(ring, a, b, [&](ElementId x, ElementId y) { return ring.product(x, y); });
}

ElementSet bracket_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  require_enumerable(ring, "bracket_set");
  return pairwise(ring, a, b, [&](ElementId x, ElementId y) { return ring.bracket(x, y); });
}

const char* to_string(IdealKind kind) noexcept {
  switch (kind) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two_sided";
    case IdealKind::lie: return "lie";
  }
  return "unknown";
}

namespace {

void require_kind(const FiniteRing& ring, IdealKind kind, const char* op) {
  if (kind != IdealKind::lie && ring.flavor() != Flavor::associative) throw FlavorMismatch(op);
}

// Generators of the one-step image of w: products with basis elements.
std::vector<ElementId> step_image_generators(const FiniteRing& ring, ElementId w, IdealKind kind) {
  std::vector<ElementId> out;
  const std::size_t k = ring.rank();
  for (std::size_t i = 0; i < k; ++i) {
    const ElementId e = ring.shape().basis(i);
    switch (kind) {
      case IdealKind::left: out.push_back(ring.product(e, w)); break;
      case IdealKind::right: out.push_back(ring.product(w, e)); break;
      case IdealKind::lie: out.push_back(ring.bracket(e, w)); break;
      case IdealKind::two_sided: {
        const ElementId ew = ring.product(e, w);
        out.push_back(ew);
        out.push_back(ring.product(w, e));
        for (std::size_t j = 0; j < k; ++j)
          out.push_back(ring.product(ew, ring.shape().basis(j)));
        break;
      }
    }
  }
  return out;
}

}  // namespace

AdditiveSubgroup ideal_step_image(const FiniteRing& ring, ElementId w, IdealKind kind) {
  require_kind(ring, kind, "ideal_step_image");
  return additive_span(ring, step_image_generators(ring, w, kind));
}

IdealClosure closure(const FiniteRing& ring, const ElementSet& seed, IdealKind kind) {
  require_kind(ring, kind, "closure");
  require_enumerable(ring, "closure");

  const AdditiveSubgroup base = additive_span(ring, seed);

  // Fixed point: multiply the current generators by the basis, span, repeat.
  std::vector<char> mask(ring.cardinality(), 0);
  std::vector<ElementId> members{0};
  mask[0] = 1;
  std::vector<ElementId> gens;
  for (ElementId g : reduced_generators(ring, base)) {
    extend_by(ring, mask, members, g);
    gens.push_back(g);
  }
  std::size_t processed = 0;
  while (processed < gens.size()) {
    const std::size_t round_end = gens.size();
    std::vector<ElementId> fresh;
    for (; processed < round_end; ++processed)
      for (ElementId v : step_image_generators(ring, gens[processed], kind))
        if (!mask[v]) fresh.push_back(v);
    std::sort(fresh.begin(), fresh.end());
    for (ElementId v : fresh) {
      if (mask[v]) continue;
      extend_by(ring, mask, members, v);
      gens.push_back(v);
    }
  }

  IdealClosure out;
  out.ideal = subgroup_from_mask(ring, mask, seed.ids());

  // Witnesses: least-id elements whose images enlarge seed + ..., first from
  // span(seed), then (Lie case) from the ideal itself.
  std::vector<char> wmask(ring.cardinality(), 0);
  std::vector<ElementId> wmembers{0};
  wmask[0] = 1;
  for (ElementId g : reduced_generators(ring, base)) extend_by(ring, wmask, wmembers, g);
  auto absorb = [&](ElementId c) {
    bool grew = false;
    for (ElementId v : step_image_generators(ring, c, kind)) {
      if (wmask[v]) continue;
      extend_by(ring, wmask, wmembers, v);
      grew = true;
    }
    if (grew) out.witnesses.push_back(c);
  };
  for (ElementId c : base.members()) {
    if (wmembers.size() == out.ideal.order()) break;
    absorb(c);
  }
  if (wmembers.size() != out.ideal.order()) {
    out.witnesses_in_seed = false;
    for (ElementId c : out.ideal.members()) {
      if (wmembers.size() == out.ideal.order()) break;
      absorb(c);
    }
  }
  return out;
}

IdealCheck is_ideal(const FiniteRing& ring, const AdditiveSubgroup& a, IdealKind kind) {
  require_kind(ring, kind, "is_ideal");
  auto fails = [&](ElementId r, ElementId x) {
    switch (kind) {
      case IdealKind::left: return !a.contains(ring.product(r, x));
      case IdealKind::right: return !a.contains(ring.product(x, r));
      case IdealKind::lie: return !a.contains(ring.bracket(r, x));
      case IdealKind::two_sided:
        return !a.contains(ring.product(r, x)) || !a.contains(ring.product(x, r));
    }
    return false;
  };
  // Bilinearity: basis times generators decides it.
  bool ok = true;
  const auto gens = reduced_generators(ring, a);
  for (std::size_t i = 0; i < ring.rank() && ok; ++i)
    for (ElementId g : gens)
      if (fails(ring.shape().basis(i), g)) {
        ok = false;
        break;
      }
  IdealCheck out;
  if (ok) return out;
  out.ok = false;
  for (std::uint64_t r = 0; r < ring.cardinality(); ++r)
    for (ElementId x : a.members())
      if (fails(static_cast<ElementId>(r), x)) {
        out.counterexample = std::make_pair(static_cast<ElementId>(r), x);
        return out;
      }
  return out;
}

std::vector<ElementId> transversal(const FiniteRing& ring, const AdditiveSubgroup& a,
                                   const AdditiveSubgroup* domain) {
  std::vector<char> covered(ring.cardinality(), 0);
  std::vector<ElementId> reps;
  auto visit = [&](ElementId x) {
    if (covered[x]) return;
    reps.push_back(x);
    for (ElementId m : a.members()) covered[ring.add(x, m)] = 1;
  };
  if (domain) {
    for (ElementId x : domain->members()) visit(x);
  } else {
    for (std::uint64_t x = 0; x < ring.cardinality(); ++x) visit(static_cast<ElementId>(x));
  }
  return reps;
}

std::vector<AdditiveSubgroup> enumerate_subgroups(const FiniteRing& ring) {
  require_enumerable(ring, "enumerate_subgroups", kSubgroupEnumerationCap);
  std::set<std::vector<ElementId>> seen;
  std::vector<AdditiveSubgroup> found;
  found.push_back(zero_subgroup(ring));
  seen.insert(found.front().members());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const AdditiveSubgroup current = found[i];
    const auto base_gens = reduced_generators(ring, current);
    for (ElementId rep : transversal(ring, current)) {
      if (rep == 0) continue;
      std::vector<ElementId> gens = base_gens;
      gens.push_back(rep);
      AdditiveSubgroup next = additive_span(ring, gens);
      if (seen.insert(next.members()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const AdditiveSubgroup& x, const AdditiveSubgroup& y) {
    return x.members() < y.members();
  });
  for (auto& s : found) {
    std::vector<char> m(ring.cardinality(), 0);
    for (ElementId id : s.members()) m[id] = 1;
    s = closed_mask_subgroup(ring, std::move(m));
  }
  return found;
}

}  // namespace ringprob
