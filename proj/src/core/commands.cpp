#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "probability.hpp"
#include "report_json.hpp"

namespace ringprob {

namespace {

constexpr int kCsvVersion = 1;

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string decimal(const Rational& q) { return to_decimal(q, 6); }

bool is_commutative(const FiniteRing& ring) {
  const std::size_t k = ring.rank();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (ring.bracket(ring.shape().basis(i), ring.shape().basis(j)) != 0) return false;
  return true;
}

std::string set_text(const std::vector<ElementId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json verify_envelope(const FiniteRing& ring, const std::string& suite, bool passed) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "verify";
  j["suite"] = suite;
  j["ring"] = ring_header(ring);
  j["passed"] = passed;
  return j;
}

std::string failure_text(const AssertionLog& log) {
  const AssertionRecord* f = log.first_failure();
  return f ? "first failure: " + f->name + " (" + f->witness + ")\n" : "";
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + text + "'");
}

Mode parse_mode(const std::string& text) {
  if (text == "cp") return Mode::cp;
  if (text == "zp") return Mode::zp;
  throw Error(ErrorCode::invalid_argument, "unknown mode '" + text + "'");
}

Objective parse_objective(const std::string& text) {
  if (text == "max") return Objective::max;
  if (text == "sum") return Objective::sum;
  if (text == "lex") return Objective::lex;
  throw Error(ErrorCode::invalid_argument, "unknown objective '" + text + "'");
}

std::uint64_t RunConfig::order_cap() const {
  return max_order ? std::min(*max_order, kEnumerationCap) : kEnumerationCap;
}

void validate(const RunConfig& config) {
  if (config.max_order && *config.max_order > kEnumerationCap)
    throw Error(ErrorCode::invalid_argument,
                "--max-order may only lower the default cap of " + std::to_string(kEnumerationCap));
  if (config.oracle_max > kSubgroupEnumerationCap)
    throw Error(ErrorCode::invalid_argument, "oracle cap above " +
                                                 std::to_string(kSubgroupEnumerationCap));
  if (config.epsilon && *config.epsilon <= 0)
    throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
}

// ---------------------------------------------------------------------------

CommandResult cmd_info(const FiniteRing& ring, const RunConfig& config) {
  validate(config);
  require_enumerable(ring, "info", config.order_cap());
  const bool assoc = ring.flavor() == Flavor::associative;
  const Rational cp = commuting_probability(ring);
  std::optional<Rational> zp;
  std::uint64_t max_c = 0, max_r = 0, max_l = 0;
  for (std::uint64_t x = 0; x < ring.cardinality(); ++x) {
    const auto id = static_cast<ElementId>(x);
    max_c = std::max<std::uint64_t>(max_c, commutator_set(ring, id).size());
    if (assoc) {
      max_r = std::max<std::uint64_t>(max_r, right_multiples(ring, id).size());
      max_l = std::max<std::uint64_t>(max_l, left_multiples(ring, id).size());
    }
  }
  if (assoc) zp = zero_probability(ring);
  const bool commutative = cp == 1;

  CommandResult res;
  if (config.format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "info";
    j["ring"] = ring_header(ring);
    j["commutative"] = commutative;
    j["cp"] = to_string(cp);
    j["cp_decimal"] = decimal(cp);
    if (zp) {
      j["zp"] = to_string(*zp);
      j["zp_decimal"] = decimal(*zp);
    }
    j["max_centralizer_index"] = max_c;
    if (assoc) {
      j["max_right_annihilator_index"] = max_r;
      j["max_left_annihilator_index"] = max_l;
    }
    res.output = dump(j);
  } else if (config.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "# ringprob info v" << kCsvVersion << "\n"
       << "name,cardinality,commutative,cp,zp,max_centralizer_index,"
          "max_right_annihilator_index,max_left_annihilator_index\n"
       << csv_field(ring.name()) << "," << ring.cardinality() << "," << (commutative ? 1 : 0)
       << "," << to_string(cp) << "," << (zp ? to_string(*zp) : "") << "," << max_c << ","
       << (assoc ? std::to_string(max_r) : "") << "," << (assoc ? std::to_string(max_l) : "")
       << "\n";
    res.output = os.str();
  } else {
    std::ostringstream os;
    os << "ring: " << ring.name() << " (" << to_string(ring.flavor()) << ", order "
       << ring.cardinality() << ")\n"
       << "commutative: " << (commutative ? "yes" : "no") << "\n"
       << "cp: " << to_string(cp) << " ~ " << decimal(cp) << "\n";
    if (zp) os << "zp: " << to_string(*zp) << " ~ " << decimal(*zp) << "\n";
    os << "max centralizer index: " << max_c << "\n";
    if (assoc)
      os << "max right annihilator index: " << max_r << "\n"
         << "max left annihilator index: " << max_l << "\n";
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_extract(const FiniteRing& ring, const RunConfig& config) {
  validate(config);
  require_enumerable(ring, "extract", config.order_cap());
  const ExtractionReport rep = extract(ring, config.mode, config.epsilon);
  CommandResult res;
  res.passed = rep.valid();
  if (config.format == OutputFormat::text) {
    std::ostringstream os;
    os << "status: " << (rep.valid() ? "VALID" : "INVALID") << "\n"
       << "mode: " << to_string(rep.mode) << (rep.converted_to_lie ? " (associated Lie ring)" : "")
       << "\n"
       << "ring: " << rep.ring_name << " order " << rep.cardinality << "\n"
       << "epsilon: " << to_string(rep.epsilon) << "\n"
       << "|X|: " << rep.x_set.size() << "\n"
       << "index(B): " << rep.index_b << "\n"
       << "index(D): " << rep.index_d << "\n"
       << "D: " << set_text(rep.d.members()) << "\n"
       << (rep.mode == Mode::cp ? "|[D,D]|: " : "|D^2|: ") << rep.square_or_bracket_set_size
       << " span " << rep.square_or_bracket_span_size << "\n"
       << "checks: " << rep.log.entries().size() << "\n"
       << failure_text(rep.log);
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    res.output = os.str();
  } else if (config.format == OutputFormat::json) {
    res.output = dump(to_json(rep));
  } else {
    throw Error(ErrorCode::invalid_argument, "extract supports json and text output");
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

Json lemma32_suite(const FiniteRing& ring, bool& passed) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("verify lemma32");
  Json cases = Json::array();
  passed = true;
  for (const auto& s : enumerate_subgroups(ring)) {
    const bool left = is_ideal(ring, s, IdealKind::left).ok;
    const bool right = is_ideal(ring, s, IdealKind::right).ok;
    if (left == right) continue;
    const Side side = left ? Side::left : Side::right;
    const DescentResult d = one_sided_to_two_sided(ring, s, side);
    passed = passed && d.valid();
    Json c;
    c["input"] = s.members();
    c["side"] = to_string(side);
    c["valid"] = d.valid();
    c["steps"] = d.trace.size();
    c["result_order"] = d.ideal.order();
    if (!d.valid()) c["descent"] = to_json(d);
    cases.push_back(std::move(c));
  }
  return cases;
}

Json eberhard_suite(const FiniteRing& ring, bool& passed) {
  std::vector<ElementSet> sets;
  const Rational cp = commuting_probability(ring);
  sets.push_back(x_set(ring, cp, Mode::cp));
  if (ring.flavor() == Flavor::associative)
    sets.push_back(x_set(ring, zero_probability(ring), Mode::zp));
  // {0, +-1, ..., +-t} by id, t doubling.
  for (std::uint64_t t = 1; t < ring.cardinality(); t *= 2) {
    std::vector<ElementId> ids{0};
    for (std::uint64_t x = 1; x <= t && x < ring.cardinality(); ++x) {
      ids.push_back(static_cast<ElementId>(x));
      ids.push_back(ring.neg(static_cast<ElementId>(x)));
    }
    sets.push_back(ElementSet(std::move(ids)));
  }
  Json cases = Json::array();
  passed = true;
  for (const auto& x : sets) {
    const EberhardResult r = eberhard_generation(ring.shape(), x);
    passed = passed && r.verified;
    Json c = to_json(r);
    c["x"] = x.ids();
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace

CommandResult cmd_verify(const FiniteRing& ring, const std::string& suite, const RunConfig& config) {
  validate(config);
  require_enumerable(ring, "verify", config.order_cap());
  bool passed = false;
  Json result;
  const AssertionLog* log = nullptr;
  std::optional<ExtractionReport> rep;
  std::optional<ConstructionReport> con;

  if (suite == "thm1" || suite == "thm3") {
    rep = extract(ring, suite == "thm1" ? Mode::cp : Mode::zp, config.epsilon);
    passed = rep->valid();
    log = &rep->log;
    result = to_json(*rep);
  } else if (suite == "prop21" || suite == "prop31") {
    con = suite == "prop21" ? bounded_commutator_construction(ring) : bounded_square_construction(ring);
    passed = con->valid();
    log = &con->log;
    result = to_json(*con);
  } else if (suite == "lemma32") {
    require_enumerable(ring, "verify lemma32", kSubgroupEnumerationCap);
    result = lemma32_suite(ring, passed);
  } else if (suite == "converse") {
    rep = extract(ring, config.mode, config.epsilon);
    const ConverseResult c = converse_lower_bound(ring, rep->d, config.mode);
    passed = rep->valid() && c.holds;
    log = &rep->log;
    result["extraction_status"] = rep->valid() ? "VALID" : "INVALID";
    result["mode"] = to_string(config.mode);
    result["d"] = to_json(rep->d);
    result["converse"] = to_json(c);
  } else if (suite == "eberhard") {
    result = eberhard_suite(ring, passed);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
  }

  CommandResult res;
  res.passed = passed;
  if (config.format == OutputFormat::text) {
    res.output = suite + ": " + (passed ? "PASS" : "FAIL") + "\n" + (log ? failure_text(*log) : "");
  } else if (config.format == OutputFormat::json) {
    Json j = verify_envelope(ring, suite, passed);
    j["result"] = std::move(result);
    res.output = dump(j);
  } else {
    throw Error(ErrorCode::invalid_argument, "verify supports json and text output");
  }
  return res;
}

CommandResult cmd_oracle(const FiniteRing& ring, const RunConfig& config) {
  validate(config);
  require_enumerable(ring, "oracle", std::min(config.order_cap(), kSubgroupEnumerationCap));
  const OracleResult best = brute_force_optimal_ideal(ring, config.mode, config.objective);
  const ExtractionReport rep = extract(ring, config.mode, config.epsilon);
  const bool feasible = is_feasible(ring, rep.d, config.mode);
  const ObjectiveValue ev = objective_value(config.objective, rep.index_d, rep.square_or_bracket_span_size);
  const bool dominated = ev >= best.value;

  CommandResult res;
  res.passed = rep.valid() && feasible && dominated;
  const auto gap = static_cast<std::int64_t>(ev.primary) - static_cast<std::int64_t>(best.value.primary);
  if (config.format == OutputFormat::text) {
    std::ostringstream os;
    os << "mode: " << to_string(config.mode) << " objective: " << to_string(config.objective) << "\n"
       << "D*: " << set_text(best.best.members()) << "\n"
       << "index(D*): " << best.index << " span: " << best.span_size << "\n"
       << "feasible subgroups: " << best.feasible << " of " << best.subgroups << "\n"
       << "extracted index: " << rep.index_d << " span: " << rep.square_or_bracket_span_size
       << " feasible: " << (feasible ? "yes" : "no") << " gap: " << gap << "\n";
    res.output = os.str();
  } else if (config.format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "oracle";
    j["mode"] = to_string(config.mode);
    j["objective"] = to_string(config.objective);
    j["ring"] = ring_header(ring);
    j["oracle"] = to_json(best);
    j["extracted"] = {{"status", rep.valid() ? "VALID" : "INVALID"},
                      {"d", rep.d.members()},
                      {"index", rep.index_d},
                      {"span_size", rep.square_or_bracket_span_size},
                      {"objective_value", {ev.primary, ev.secondary}},
                      {"feasible", feasible},
                      {"gap", gap}};
    j["passed"] = res.passed;
    res.output = dump(j);
  } else {
    throw Error(ErrorCode::invalid_argument, "oracle supports json and text output");
  }
  return res;
}

// ---------------------------------------------------------------------------

std::vector<std::string> expand_grid(const std::string& grid) {
  const auto colon = grid.rfind(':');
  const bool plain = grid.rfind("sum", 0) == 0 || colon == std::string::npos ||
                     (grid.find("..", colon) == std::string::npos &&
                      grid.find(',', colon) == std::string::npos);
  if (plain) {
    parse_family_spec(grid);
    return {grid};
  }
  const std::string head = grid.substr(0, colon + 1);
  const Family family = parse_family_name(grid.substr(0, colon));
  const std::string tail = grid.substr(colon + 1);
  auto number = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::invalid_argument, "bad grid '" + grid + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  std::vector<std::uint32_t> params;
  if (const auto dots = tail.find(".."); dots != std::string::npos) {
    const std::uint32_t lo = number(tail.substr(0, dots)), hi = number(tail.substr(dots + 2));
    if (lo > hi) throw Error(ErrorCode::invalid_argument, "empty range in '" + grid + "'");
    // Non-admissible parameters (composite p) are skipped inside ranges.
    for (std::uint32_t v = lo; v <= hi; ++v)
      if (family_parameter_ok(family, v)) params.push_back(v);
  } else {
    std::stringstream ss(tail);
    for (std::string item; std::getline(ss, item, ',');) {
      const std::uint32_t v = number(item);
      if (!family_parameter_ok(family, v))
        throw Error(ErrorCode::invalid_argument, "parameter " + item + " out of range in '" + grid + "'");
      params.push_back(v);
    }
  }
  std::vector<std::string> out;
  for (auto v : params) out.push_back(head + std::to_string(v));
  return out;
}

CommandResult cmd_scan(const std::vector<std::string>& grids, const RunConfig& config) {
  validate(config);
  std::vector<std::string> specs;
  for (const auto& g : grids)
    for (auto& s : expand_grid(g)) specs.push_back(std::move(s));

  struct Row {
    std::vector<std::string> cells;
    bool valid = true;
  };
  const auto rows = parallel_map<Row>(specs.size(), config.jobs, [&](std::size_t i) {
    Row row;
    const FiniteRing ring = build_family(specs[i]);
    auto& c = row.cells;
    c.push_back(specs[i]);
    c.push_back(std::to_string(ring.cardinality()));
    if (ring.cardinality() > config.order_cap()) {
      c.insert(c.end(), {"", "", "", to_string(config.mode), "cap_exceeded", "", "", "", "", "", ""});
      return row;
    }
    const Rational cp = commuting_probability(ring);
    const Rational zp = zero_probability(ring);
    const ExtractionReport rep = extract(ring, config.mode, config.epsilon);
    row.valid = rep.valid();
    c.push_back(cp == 1 ? "1" : "0");
    c.push_back(to_string(cp));
    c.push_back(to_string(zp));
    c.push_back(to_string(config.mode));
    c.push_back(rep.valid() ? "VALID" : "INVALID");
    c.push_back(std::to_string(rep.index_d));
    c.push_back(std::to_string(rep.square_or_bracket_set_size));
    c.push_back(std::to_string(rep.square_or_bracket_span_size));
    if (ring.cardinality() <= config.oracle_max) {
      const OracleResult best = brute_force_optimal_ideal(ring, config.mode, config.objective);
      const ObjectiveValue ev =
          objective_value(config.objective, rep.index_d, rep.square_or_bracket_span_size);
      c.push_back(std::to_string(best.index));
      c.push_back(std::to_string(best.span_size));
      c.push_back(std::to_string(static_cast<std::int64_t>(ev.primary) -
                                 static_cast<std::int64_t>(best.value.primary)));
    } else {
      c.insert(c.end(), {"", "", ""});
    }
    return row;
  });

  static const std::vector<std::string> columns{
      "spec",    "cardinality",     "commutative",     "cp",          "zp",
      "mode",    "status",          "index_d",         "square_set_size", "square_span_size",
      "oracle_index", "oracle_span_size", "oracle_gap"};
  CommandResult res;
  for (const auto& r : rows) res.passed = res.passed && r.valid;
  if (config.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json o;
      for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = r.cells[i];
      arr.push_back(std::move(o));
    }
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "scan";
    j["objective"] = to_string(config.objective);
    j["rows"] = std::move(arr);
    res.output = dump(j);
  } else {
    std::ostringstream os;
    os << "# ringprob scan v" << kCsvVersion << " objective=" << to_string(config.objective) << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.cells.size(); ++i) os << (i ? "," : "") << csv_field(r.cells[i]);
      os << "\n";
    }
    res.output = os.str();
  }
  return res;
}

CommandResult cmd_enumerate(const std::vector<std::uint32_t>& orders, const std::string& out_dir,
                            const RunConfig& config) {
  validate(config);
  const GroupShape shape = normalize_orders(orders).shape;
  if (shape.cardinality() > config.order_cap())
    throw CapExceeded("enumerate", shape.cardinality(), config.order_cap());
  const Census census = enumerate_shape(orders, config.jobs);

  struct Stats {
    bool commutative = false;
    Rational cp, zp;
  };
  const auto stats = parallel_map<Stats>(census.rings.size(), config.jobs, [&](std::size_t i) {
    const FiniteRing& r = census.rings[i].ring;
    return Stats{is_commutative(r), commuting_probability(r), zero_probability(r)};
  });

  std::ostringstream manifest;
  manifest << "# ringprob enumerate v" << kCsvVersion << " candidates=" << census.candidate_count
           << " validated=" << census.rings.size() << "\n"
           << "candidate_index,cardinality,commutative,cp,zp\n";
  for (std::size_t i = 0; i < census.rings.size(); ++i)
    manifest << census.rings[i].candidate_index << "," << shape.cardinality() << ","
             << (stats[i].commutative ? 1 : 0) << "," << to_string(stats[i].cp) << ","
             << to_string(stats[i].zp) << "\n";

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::io, "cannot create " + out_dir + ": " + ec.message());
    const std::filesystem::path dir(out_dir);
    for (const auto& e : census.rings)
      save_ring(e.ring, (dir / ("ring_" + std::to_string(e.candidate_index) + ".json")).string());
    std::ofstream m(dir / "manifest.csv", std::ios::binary);
    m << manifest.str();
    if (!m) throw Error(ErrorCode::io, "cannot write manifest in " + out_dir);
  }

  CommandResult res;
  if (config.format == OutputFormat::csv) {
    res.output = manifest.str();
  } else if (config.format == OutputFormat::json) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "enumerate";
    j["shape"] = shape.orders();
    j["candidate_count"] = census.candidate_count;
    j["validated"] = census.rings.size();
    std::size_t commutative = 0;
    for (const auto& s : stats) commutative += s.commutative;
    j["commutative"] = commutative;
    if (!out_dir.empty()) j["out_dir"] = out_dir;
    res.output = dump(j);
  } else {
    std::ostringstream os;
    os << "shape: " << set_text(std::vector<ElementId>(shape.orders().begin(), shape.orders().end()))
       << "\ncandidates: " << census.candidate_count << "\nvalidated tables: " << census.rings.size()
       << "\n";
    res.output = os.str();
  }
  return res;
}

}  // namespace ringprob
