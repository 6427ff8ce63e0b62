#pragma once

#include <json.hpp>

#include "neumann.hpp"

namespace ringprob {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::string hash_hex(std::uint64_t hash);

Json to_json(const ElementSet& set);
Json to_json(const AdditiveSubgroup& group);
Json to_json(const AssertionLog& log);
Json to_json(const EberhardResult& result);
Json to_json(const ConstructionReport& report);
Json to_json(const DescentResult& result);
Json to_json(const ExtractionReport& report);
Json to_json(const ConverseResult& result);
Json to_json(const OracleResult& result);

// Ring identity block: name, flavor, orders, hash.
Json ring_header(const FiniteRing& ring);

}  // namespace ringprob
