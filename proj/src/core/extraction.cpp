#include <algorithm>
#include <deque>

#include "neumann.hpp"
#include "probability.hpp"

namespace ringprob {

const char* to_string(Mode mode) noexcept { return mode == Mode::cp ? "cp" : "zp"; }

bool AssertionLog::check(std::string name, bool passed, std::string witness) {
  entries_.push_back({std::move(name), passed, std::move(witness)});
  return passed;
}

void AssertionLog::append(const AssertionLog& other, const std::string& prefix) {
  for (const auto& e : other.entries_) entries_.push_back({prefix + e.name, e.passed, e.witness});
}

bool AssertionLog::all_passed() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const AssertionRecord& e) { return e.passed; });
}

const AssertionRecord* AssertionLog::first_failure() const noexcept {
  for (const auto& e : entries_)
    if (!e.passed) return &e;
  return nullptr;
}

std::uint64_t orbit_size(const FiniteRing& ring, ElementId x, Mode mode,
                         const AdditiveSubgroup* domain) {
  return mode == Mode::cp ? commutator_set(ring, x, domain).size()
                          : right_multiples(ring, x, domain).size();
}

ElementSet x_set(const FiniteRing& ring, const Rational& epsilon, Mode mode) {
  if (epsilon <= 0) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  require_enumerable(ring, "x_set");
  std::vector<ElementId> out;
  for (std::uint64_t x = 0; x < ring.cardinality(); ++x) {
    const auto id = static_cast<ElementId>(x);
    // |orbit| <= 2/eps  <=>  |orbit| * eps <= 2
    if (Rational(orbit_size(ring, id, mode)) * epsilon <= 2) out.push_back(id);
  }
  return ElementSet(std::move(out));
}

namespace {

BigInt product_of(const std::vector<std::uint64_t>& xs) {
  BigInt p = 1;
  for (auto x : xs) p *= x;
  return p;
}

// Steps shared by both pipelines: epsilon, X, B, the sumset check and the
// orbit bound over B. `ring` is the ring the orbits live in.
void common_prefix(const FiniteRing& ring, Mode mode, const Rational& probability,
                   const std::optional<Rational>& override_eps, ExtractionReport& rep) {
  rep.epsilon = override_eps ? *override_eps : probability;
  rep.epsilon_overridden = override_eps.has_value();
  if (rep.epsilon <= 0) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  rep.threshold = Rational(2) / rep.epsilon;
  rep.length_bound = floor_of(Rational(6) / rep.epsilon);
  if (rep.epsilon_overridden)
    rep.notes.push_back("epsilon overridden; computed value is " + to_string(probability));

  const std::uint64_t card = ring.cardinality();
  rep.x_set = x_set(ring, rep.epsilon, mode);
  const std::uint64_t xs = rep.x_set.size();

  rep.log.check("x_contains_zero", rep.x_set.contains(0));
  std::optional<ElementId> asym;
  for (ElementId v : rep.x_set)
    if (!rep.x_set.contains(ring.neg(v))) {
      asym = v;
      break;
    }
  rep.log.check("x_symmetric", !asym, asym ? "x=" + std::to_string(*asym) : "");
  rep.log.check("x_density", rep.epsilon / 2 * card < Rational(xs),
                "eps/2*|R|=" + to_string(rep.epsilon / 2 * card) + " |X|=" + std::to_string(xs));

  rep.b = additive_span(ring, rep.x_set);
  rep.index_b = index(ring, rep.b);
  rep.fast_path = rep.index_b == 1;
  rep.log.check("index_b_within_threshold", Rational(rep.index_b) <= rep.threshold,
                "index=" + std::to_string(rep.index_b) + " 2/eps=" + to_string(rep.threshold));

  if (!asym && rep.x_set.contains(0)) {
    rep.eberhard = eberhard_generation(ring.shape(), rep.x_set);
    rep.log.check("eberhard_sumset_equals_span", rep.eberhard.verified,
                  "r=" + std::to_string(rep.eberhard.r) +
                      " stable_at=" + std::to_string(rep.eberhard.stable_at));
    rep.log.check("eberhard_length_within_6_over_eps",
                  BigInt(rep.eberhard.fold) <= rep.length_bound,
                  "3r=" + std::to_string(rep.eberhard.fold) +
                      " floor(6/eps)=" + rep.length_bound.str());
  } else {
    rep.log.check("eberhard_sumset_equals_span", false, "X is not symmetric with 0");
  }

  for (ElementId b : rep.b.members())
    rep.max_orbit_over_b = std::max(rep.max_orbit_over_b, orbit_size(ring, b, mode));
  const Rational bound = saturating_pow(rep.threshold,
                                        static_cast<std::uint64_t>(rep.length_bound),
                                        Rational(card));
  rep.log.check("orbit_bound_over_b", Rational(rep.max_orbit_over_b) <= bound,
                "max=" + std::to_string(rep.max_orbit_over_b) +
                    " bound=(2/eps)^floor(6/eps)");
}

void common_suffix(const FiniteRing& ring, Mode mode, ExtractionReport& rep) {
  rep.index_d = index(ring, rep.d);
  rep.log.check("d_contains_b", rep.b.is_subset_of(rep.d));
  rep.log.check("index_d_le_index_b", rep.index_d <= rep.index_b,
                std::to_string(rep.index_d) + " <= " + std::to_string(rep.index_b));
  rep.log.check("index_d_within_threshold", BigInt(rep.index_d) <= floor_of(rep.threshold));
  const ElementSet dset = rep.d.as_set();
  const ElementSet sq = mode == Mode::cp ? bracket_set(ring, dset, dset)
                                         : product_set(ring, dset, dset);
  rep.square_or_bracket_set_size = sq.size();
  rep.square_or_bracket_span_size = additive_span(ring, sq).order();
  rep.log.check("set_within_span",
                rep.square_or_bracket_set_size <= rep.square_or_bracket_span_size);
}

}  // namespace

ExtractionReport extract_commuting_ideal(const FiniteRing& ring,
                                         const std::optional<Rational>& epsilon) {
  require_enumerable(ring, "extract_commuting_ideal");
  ExtractionReport rep;
  rep.mode = Mode::cp;
  rep.ring_name = ring.name();
  rep.ring_hash = ring.content_hash();
  rep.cardinality = ring.cardinality();
  rep.converted_to_lie = ring.flavor() == Flavor::associative;
  const FiniteRing lie = rep.converted_to_lie ? associated_lie_ring(ring) : ring;

  common_prefix(lie, Mode::cp, commuting_probability(lie), epsilon, rep);

  // D: the Lie ideal generated by B, with D = B + sum [L, w_i].
  const IdealClosure cl = closure_lie_ideal(lie, rep.x_set);
  rep.d = cl.ideal;
  rep.witness_generators = cl.witnesses;
  rep.witnesses_in_b = cl.witnesses_in_seed;
  if (!cl.witnesses_in_seed)
    rep.notes.push_back("B + [L, B] is not an ideal; some witnesses taken from D");

  AdditiveSubgroup rebuilt = rep.b;
  std::vector<std::uint64_t> orbit_orders;
  std::vector<ElementSet> witness_orbits;
  for (ElementId w : cl.witnesses) {
    rebuilt = sum(lie, rebuilt, ideal_step_image(lie, w, IdealKind::lie));
    witness_orbits.push_back(commutator_set(lie, w));
    orbit_orders.push_back(witness_orbits.back().size());
  }
  rep.log.check("closure_decomposition", rebuilt.same_members(rep.d),
                "s=" + std::to_string(cl.witnesses.size()));
  rep.log.check("d_is_lie_ideal", is_ideal(lie, rep.d, IdealKind::lie).ok);

  // K = C_L(w_1..w_s) normalizes each [L, w_i] (Jacobi).
  const AdditiveSubgroup k = centralizer(lie, ElementSet(cl.witnesses));
  const auto k_gens = reduced_generators(lie, k);
  std::optional<std::pair<ElementId, ElementId>> normalize_failure;
  for (std::size_t i = 0; i < witness_orbits.size() && !normalize_failure; ++i)
    for (ElementId c : k_gens) {
      for (ElementId u : witness_orbits[i])
        if (!witness_orbits[i].contains(lie.bracket(c, u))) {
          normalize_failure = std::make_pair(c, u);
          break;
        }
      if (normalize_failure) break;
    }
  rep.log.check("witness_centralizer_normalizes_orbits", !normalize_failure,
                normalize_failure ? "c=" + std::to_string(normalize_failure->first) +
                                        " u=" + std::to_string(normalize_failure->second)
                                  : "");
  const BigInt k_bound = product_of(orbit_orders);
  rep.log.check("witness_centralizer_index", BigInt(index(lie, k)) <= k_bound,
                "index=" + std::to_string(index(lie, k)) + " bound=" + k_bound.str());

  // C_L(S), S = span of the witness orbits: K acts on each orbit by
  // endomorphisms, so [K : K cap C_L(S)] <= prod m_i^m_i.
  std::vector<ElementId> s_gens;
  for (const auto& o : witness_orbits) s_gens.insert(s_gens.end(), o.begin(), o.end());
  const AdditiveSubgroup cs = centralizer(lie, ElementSet(s_gens));
  rep.centralizer_index = index(lie, cs);
  BigInt end_bound = 1;
  for (auto m : orbit_orders) end_bound *= boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(m));
  const AdditiveSubgroup ks = intersect(lie, k, cs);
  rep.log.check("centralizer_chain_endomorphism_bound", BigInt(k.order() / ks.order()) <= end_bound,
                "[K:K_S]=" + std::to_string(k.order() / ks.order()));
  rep.log.check("sum_centralizer_index", BigInt(rep.centralizer_index) <= k_bound * end_bound,
                "index=" + std::to_string(rep.centralizer_index));

  // d = b + u with u in S: C_L(d) contains C_L(b) cap C_L(S).
  for (ElementId d : rep.d.members())
    rep.max_orbit_over_d = std::max(rep.max_orbit_over_d, orbit_size(lie, d, Mode::cp));
  rep.log.check("orbit_bound_over_d",
                BigInt(rep.max_orbit_over_d) <=
                    BigInt(rep.max_orbit_over_b) * BigInt(rep.centralizer_index),
                "max=" + std::to_string(rep.max_orbit_over_d));

  rep.construction = bounded_commutator_construction(lie, &rep.d);
  rep.log.append(rep.construction->log, "construction.");

  common_suffix(lie, Mode::cp, rep);
  rep.log.check("bracket_span_within_construction_bound",
                BigInt(rep.square_or_bracket_span_size) <= rep.construction->product_bound);
  return rep;
}

ExtractionReport extract_zero_ideal(const FiniteRing& ring, const std::optional<Rational>& epsilon) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("extract_zero_ideal");
  require_enumerable(ring, "extract_zero_ideal");
  ExtractionReport rep;
  rep.mode = Mode::zp;
  rep.ring_name = ring.name();
  rep.ring_hash = ring.content_hash();
  rep.cardinality = ring.cardinality();

  common_prefix(ring, Mode::zp, zero_probability(ring), epsilon, rep);

  // D0: the left ideal generated by B, D0 = B + sum R b_i with b_i in B.
  const IdealClosure cl = closure_left_ideal(ring, rep.x_set);
  const AdditiveSubgroup& d0 = cl.ideal;
  rep.d0 = d0;
  rep.witness_generators = cl.witnesses;
  rep.witnesses_in_b = cl.witnesses_in_seed;
  rep.log.check("witnesses_in_b", cl.witnesses_in_seed);
  rep.log.check("d0_is_left_ideal", is_ideal(ring, d0, IdealKind::left).ok);

  const std::vector<ElementId>& w = cl.witnesses;
  const std::size_t s = w.size();
  AdditiveSubgroup rebuilt = rep.b;
  std::vector<std::uint64_t> orbit_orders;
  for (ElementId b : w) {
    rebuilt = sum(ring, rebuilt, ideal_step_image(ring, b, IdealKind::left));
    orbit_orders.push_back(right_multiples(ring, b).size());
  }
  rep.log.check("closure_decomposition", rebuilt.same_members(d0), "s=" + std::to_string(s));

  // C = Ann(b_1..b_s) kills every a_i b_i.
  const AdditiveSubgroup c = right_annihilator(ring, ElementSet(w));
  rep.centralizer_index = index(ring, c);
  rep.log.check("annihilator_index", BigInt(rep.centralizer_index) <= product_of(orbit_orders),
                "index=" + std::to_string(rep.centralizer_index));
  const auto c_gens = reduced_generators(ring, c);
  bool kills = true;
  for (ElementId b : w)
    for (std::size_t j = 0; j < ring.rank() && kills; ++j) {
      const ElementId ab = ring.product(ring.shape().basis(j), b);
      for (ElementId g : c_gens)
        if (ring.product(ab, g) != 0) kills = false;
    }
  rep.log.check("annihilator_kills_witness_multiples", kills);

  // Derivations y = b + sum a_i b_i recorded while sweeping D0.
  const std::uint64_t card = ring.cardinality();
  std::vector<char> seen(card, 0);
  std::vector<ElementId> base(card, 0);
  std::vector<std::vector<ElementId>> coeff(card);
  std::deque<ElementId> queue;
  for (ElementId b : rep.b.members()) {
    seen[b] = 1;
    base[b] = b;
    coeff[b].assign(s, 0);
    queue.push_back(b);
  }
  std::size_t visited = rep.b.order();
  while (!queue.empty()) {
    const ElementId y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < ring.rank(); ++j) {
        const ElementId e = ring.shape().basis(j);
        const ElementId next = ring.add(y, ring.product(e, w[i]));
        if (seen[next]) continue;
        seen[next] = 1;
        ++visited;
        base[next] = base[y];
        coeff[next] = coeff[y];
        coeff[next][i] = ring.add(coeff[next][i], e);
        queue.push_back(next);
      }
  }
  rep.log.check("derivations_cover_d0", visited == d0.order(),
                std::to_string(visited) + " of " + std::to_string(d0.order()));

  std::vector<std::optional<AdditiveSubgroup>> ann_cap_c(card);
  std::optional<ElementId> derivation_failure, yc_failure, ann_failure;
  std::uint64_t max_ann_index = 0;
  for (ElementId y : d0.members()) {
    if (!seen[y]) continue;
    ElementId recon = base[y];
    for (std::size_t i = 0; i < s; ++i) recon = ring.add(recon, ring.product(coeff[y][i], w[i]));
    if (recon != y && !derivation_failure) derivation_failure = y;
    // yC = bC
    for (ElementId g : c_gens)
      if (ring.product(y, g) != ring.product(base[y], g) && !yc_failure) yc_failure = y;
    // Ann(y) contains Ann(b) cap C
    auto& cap = ann_cap_c[base[y]];
    if (!cap) cap = intersect(ring, right_annihilator(ring, ElementSet({base[y]})), c);
    for (ElementId g : reduced_generators(ring, *cap))
      if (ring.product(y, g) != 0 && !ann_failure) ann_failure = y;
    max_ann_index = std::max<std::uint64_t>(max_ann_index, right_multiples(ring, y).size());
  }
  auto y_str = [](const std::optional<ElementId>& v) {
    return v ? "y=" + std::to_string(*v) : std::string{};
  };
  rep.log.check("derivations_consistent", !derivation_failure, y_str(derivation_failure));
  rep.log.check("yC_equals_bC", !yc_failure, y_str(yc_failure));
  rep.log.check("annihilator_contains_ann_b_cap_c", !ann_failure, y_str(ann_failure));
  rep.max_orbit_over_d = max_ann_index;
  rep.log.check("annihilator_index_over_d0",
                BigInt(max_ann_index) <= BigInt(rep.max_orbit_over_b) * rep.centralizer_index,
                "max=" + std::to_string(max_ann_index));

  rep.construction = bounded_square_construction(ring, &d0);
  rep.log.append(rep.construction->log, "construction.");

  rep.descent = one_sided_to_two_sided(ring, d0, Side::left);
  rep.log.append(rep.descent->log, "descent.");
  rep.d = rep.descent->ideal;
  rep.log.check("d_is_two_sided_ideal", is_ideal(ring, rep.d, IdealKind::two_sided).ok);
  rep.log.check("d_contains_d0", d0.is_subset_of(rep.d));

  common_suffix(ring, Mode::zp, rep);
  return rep;
}

ConverseResult converse_lower_bound(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode) {
  if (!is_feasible(ring, d, mode))
    throw Error(ErrorCode::non_ideal_input,
                std::string("not a ") + to_string(feasible_kind(ring, mode)) + " ideal");
  ConverseResult out;
  out.m = index(ring, d);
  out.k = square_span_size(ring, d, mode);
  out.bound = make_rational(1, out.k * out.m * out.m);
  out.probability = mode == Mode::cp ? commuting_probability(ring) : zero_probability(ring);
  out.holds = out.probability >= out.bound;
  return out;
}

}  // namespace ringprob
