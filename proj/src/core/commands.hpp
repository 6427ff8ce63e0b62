#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "neumann.hpp"

namespace ringprob {

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& text);
Mode parse_mode(const std::string& text);
Objective parse_objective(const std::string& text);

struct RunConfig {
  Mode mode = Mode::cp;
  OutputFormat format = OutputFormat::json;
  // Lowers the cardinality cap of enumeration-heavy work; never raises it.
  std::optional<std::uint64_t> max_order;
  unsigned jobs = 1;
  Objective objective = Objective::max;
  std::optional<Rational> epsilon;
  // scan: largest cardinality for which the oracle column is filled in.
  std::uint64_t oracle_max = 64;

  std::uint64_t order_cap() const;
};

// Throws Error(invalid_argument) on a cap override above the default.
void validate(const RunConfig& config);

struct CommandResult {
  bool passed = true;
  std::string output;
};

CommandResult cmd_info(const FiniteRing& ring, const RunConfig& config);
CommandResult cmd_extract(const FiniteRing& ring, const RunConfig& config);

// thm1 thm3 prop21 prop31 lemma32 converse eberhard
CommandResult cmd_verify(const FiniteRing& ring, const std::string& suite, const RunConfig& config);
CommandResult cmd_oracle(const FiniteRing& ring, const RunConfig& config);

// Each grid is a family spec whose parameter may be a range "a..b" or a
// list "a,b,c", e.g. "Z:2..64", "M2:2,3", "sum(Z:2,T2:2)".
std::vector<std::string> expand_grid(const std::string& grid);
CommandResult cmd_scan(const std::vector<std::string>& grids, const RunConfig& config);

// Writes ring_<candidate index>.json files and manifest.csv into out_dir.
CommandResult cmd_enumerate(const std::vector<std::uint32_t>& orders, const std::string& out_dir,
                            const RunConfig& config);

}  // namespace ringprob
