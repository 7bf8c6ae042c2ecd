#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "triblock/blocks.hpp"
#include "triblock/chartable.hpp"
#include "triblock/classify.hpp"
#include "triblock/groups.hpp"

namespace triblock {

class bound_error : public error {
public:
  explicit bound_error(const std::string& what) : error(what) {}
};

struct PipelineOptions {
  std::uint64_t seed = 0;
  Int max_order = Int(1000000000);  // refuse to build groups beyond this
  Int max_classes = Int(1000000);   // class-enumeration bound for tables
  std::uint64_t sylow_budget = 100000;
  bool with_table = true;
  bool keep_table = false;  // retain the character table in the result
};

// One corpus entry: the symbolic and the computed leg for a single group.
struct PipelineResult {
  zoo::GroupSpec spec;
  Int order;
  std::uint64_t seed = 0;
  int rank_bruteforce = 0;
  std::optional<int> rank_formula;
  std::string rank_provenance;

  bool table_computed = false;
  std::string table_skipped_reason;
  long k0 = 0;
  long k0_sigma = 0;
  int defect = 0;
  long num_blocks = 0;
  std::vector<long> sigma_orbit_sizes;
  std::optional<Int> k0_formula;
  std::optional<long> k0_sigma_formula;
  std::optional<bool> theorem_a_verdict;

  bool consistent = true;  // conjunction of the available cross-checks
  std::vector<std::string> checks;

  long long ms_build = 0, ms_sylow = 0, ms_table = 0, ms_blocks = 0;

  std::optional<ct::CharacterTable> table;

  nlohmann::json to_json(bool with_timings = false) const;
};

// The symbolic description used for the closed-form leg of a buildable spec.
cls::SymbolicSpec symbolic_of(const zoo::GroupSpec& spec, const std::string& external_label = "");

// Full pipeline: build, Sylow 3-subgroup, Frattini rank, character table,
// block partition and sigma report, with every available cross-check.
PipelineResult run_bruteforce(const zoo::GroupSpec& spec, const PipelineOptions& opt = {});

}  // namespace triblock
