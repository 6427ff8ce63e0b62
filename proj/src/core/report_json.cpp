#include "report_json.hpp"

#include <cstdio>

namespace ringprob {

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Json to_json(const ElementSet& set) { return set.ids(); }

Json to_json(const AdditiveSubgroup& group) {
  Json j;
  j["order"] = group.order();
  j["generators"] = group.generators();
  j["members"] = group.members();
  return j;
}

Json to_json(const AssertionLog& log) {
  Json arr = Json::array();
  for (const auto& e : log.entries())
    arr.push_back({{"name", e.name}, {"status", e.passed ? "pass" : "fail"}, {"witness", e.witness}});
  return arr;
}

Json to_json(const EberhardResult& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["set_size"] = r.set_size;
  j["r"] = r.r;
  j["fold"] = r.fold;
  j["span_order"] = r.span_order;
  j["sumset_sizes"] = r.sumset_sizes;
  j["stable_at"] = r.stable_at;
  j["verified"] = r.verified;
  return j;
}

Json to_json(const ConstructionReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["valid"] = r.valid();
  j["domain_order"] = r.domain_order;
  j["a"] = r.a;
  j["n"] = r.n;
  if (r.mode == Mode::zp) j["n_left"] = r.n_left;
  j["b"] = r.b_list;
  j["c"] = to_json(r.c);
  j["transversal"] = r.transversal;
  j["s"] = r.s;
  j["index_bound"] = to_string(r.index_bound);
  j["set_size"] = r.set_size;
  j["span_size"] = r.span_size;
  j["product_bound"] = to_string(r.product_bound);
  j["assertion_log"] = to_json(r.log);
  return j;
}

Json to_json(const DescentResult& r) {
  Json j;
  j["side"] = to_string(r.side);
  j["valid"] = r.valid();
  j["ideal"] = to_json(r.ideal);
  Json steps = Json::array();
  for (const auto& s : r.trace)
    steps.push_back({{"y", s.y},
                     {"index_before", s.index_before},
                     {"index_after", s.index_after},
                     {"n", s.n},
                     {"square_size_after", s.square_size_after},
                     {"max_annihilator_index", s.max_annihilator_index},
                     {"sampled_pairs", s.sampled_pairs}});
  j["steps"] = std::move(steps);
  j["assertion_log"] = to_json(r.log);
  return j;
}

Json to_json(const ExtractionReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "extraction";
  j["mode"] = to_string(r.mode);
  j["status"] = r.valid() ? "VALID" : "INVALID";
  j["ring"] = {{"name", r.ring_name}, {"hash", hash_hex(r.ring_hash)}, {"cardinality", r.cardinality}};
  j["converted_to_lie"] = r.converted_to_lie;
  j["epsilon"] = to_string(r.epsilon);
  j["epsilon_overridden"] = r.epsilon_overridden;
  j["threshold"] = to_string(r.threshold);
  j["length_bound"] = to_string(r.length_bound);
  j["x_set"] = to_json(r.x_set);
  j["b"] = to_json(r.b);
  j["index_b"] = r.index_b;
  j["eberhard"] = to_json(r.eberhard);
  j["max_orbit_over_b"] = r.max_orbit_over_b;
  if (r.d0) j["d0"] = to_json(*r.d0);
  j["d"] = to_json(r.d);
  j["witness_generators"] = r.witness_generators;
  j["witnesses_in_b"] = r.witnesses_in_b;
  j["centralizer_index"] = r.centralizer_index;
  j["max_orbit_over_d"] = r.max_orbit_over_d;
  j["index_d"] = r.index_d;
  j["square_set_size"] = r.square_or_bracket_set_size;
  j["square_span_size"] = r.square_or_bracket_span_size;
  j["fast_path"] = r.fast_path;
  if (r.construction) j["construction"] = to_json(*r.construction);
  if (r.descent) j["descent"] = to_json(*r.descent);
  j["notes"] = r.notes;
  j["assertion_log"] = to_json(r.log);
  return j;
}

Json to_json(const ConverseResult& r) {
  Json j;
  j["m"] = r.m;
  j["k"] = r.k;
  j["bound"] = to_string(r.bound);
  j["probability"] = to_string(r.probability);
  j["holds"] = r.holds;
  return j;
}

Json to_json(const OracleResult& r) {
  Json j;
  j["best"] = to_json(r.best);
  j["index"] = r.index;
  j["span_size"] = r.span_size;
  j["objective_value"] = {r.value.primary, r.value.secondary};
  j["subgroups"] = r.subgroups;
  j["feasible"] = r.feasible;
  return j;
}

Json ring_header(const FiniteRing& ring) {
  Json j;
  j["name"] = ring.name();
  j["flavor"] = to_string(ring.flavor());
  j["orders"] = ring.shape().orders();
  j["cardinality"] = ring.cardinality();
  j["hash"] = hash_hex(ring.content_hash());
  return j;
}

}  // namespace ringprob
