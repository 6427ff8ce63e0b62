#include <fstream>
#include <sstream>

#include <json.hpp>

#include "catalog.hpp"

namespace ringprob {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(IllFormedReason reason, std::vector<std::size_t> where,
                            const std::string& detail) {
  throw IllFormed(reason, std::move(where), detail);
}

std::uint64_t read_uint(const ordered_json& v, IllFormedReason reason,
                        const std::vector<std::size_t>& where, const std::string& what) {
  if (!v.is_number_integer()) malformed(reason, where, what + " must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) malformed(reason, where, what + " is negative");
  return static_cast<std::uint64_t>(s);
}

}  // namespace

LoadedRing ring_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    malformed(IllFormedReason::syntax, {}, e.what());
  }
  if (!doc.is_object()) malformed(IllFormedReason::syntax, {}, "top level must be an object");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) malformed(IllFormedReason::syntax, {}, "name must be a string");
    name = doc["name"].get<std::string>();
  }
  Flavor flavor = Flavor::associative;
  if (doc.contains("flavor")) {
    const auto& f = doc["flavor"];
    if (f == "associative") flavor = Flavor::associative;
    else if (f == "lie") flavor = Flavor::lie;
    else malformed(IllFormedReason::syntax, {}, "flavor must be \"associative\" or \"lie\"");
  }

  if (!doc.contains("orders") || !doc["orders"].is_array())
    malformed(IllFormedReason::shape, {}, "orders must be an array");
  std::vector<std::uint32_t> orders;
  std::uint64_t card = 1;
  for (std::size_t i = 0; i < doc["orders"].size(); ++i) {
    const std::uint64_t d = read_uint(doc["orders"][i], IllFormedReason::shape, {i}, "order");
    if (d < 2) malformed(IllFormedReason::shape, {i}, "order below 2");
    if (d > kMaxCardinality || card * d > kMaxCardinality)
      malformed(IllFormedReason::shape, {i}, "group too large");
    card *= d;
    orders.push_back(static_cast<std::uint32_t>(d));
  }
  const std::size_t k = orders.size();

  if (!doc.contains("table") || !doc["table"].is_array())
    malformed(IllFormedReason::arity, {}, "table must be an array");
  const auto& rows = doc["table"];
  if (rows.size() != k) malformed(IllFormedReason::arity, {}, "table needs one row per order");
  ProductTable table(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < k; ++i) {
    if (!rows[i].is_array() || rows[i].size() != k)
      malformed(IllFormedReason::arity, {i}, "row needs one entry per order");
    for (std::size_t j = 0; j < k; ++j) {
      const auto& entry = rows[i][j];
      if (!entry.is_array() || entry.size() != k)
        malformed(IllFormedReason::arity, {i, j}, "entry needs one coefficient per order");
      for (std::size_t l = 0; l < k; ++l) {
        const std::uint64_t c =
            read_uint(entry[l], IllFormedReason::coefficient_range, {i, j, l}, "coefficient");
        if (c >= orders[l])
          malformed(IllFormedReason::coefficient_range, {i, j, l},
                    std::to_string(c) + " not below " + std::to_string(orders[l]));
        table[i][j][l] = static_cast<std::uint32_t>(c);
      }
    }
  }
  NormalizedRing n = normalize_ring(orders, table, flavor, std::move(name));
  return {std::move(n.ring), std::move(n.permutation)};
}

LoadedRing load_ring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ring_from_json(buf.str());
}

namespace {

std::string int_list(const std::vector<std::uint32_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

// One table row per line.
std::string ring_to_json(const FiniteRing& ring) {
  std::string out = "{\n";
  out += "  \"name\": " + ordered_json(ring.name()).dump() + ",\n";
  out += "  \"flavor\": \"" + std::string(to_string(ring.flavor())) + "\",\n";
  out += "  \"orders\": " + int_list(ring.shape().orders()) + ",\n";
  out += "  \"table\": [";
  const auto& table = ring.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    for (std::size_t j = 0; j < table[i].size(); ++j) out += (j ? ", " : "") + int_list(table[i][j]);
    out += "]";
  }
  out += table.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_ring(const FiniteRing& ring, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << ring_to_json(ring);
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

}  // namespace ringprob
