#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "triblock/chartable.hpp"

namespace triblock::blk {

// 3-block partition of the rows of a character table: two characters lie in
// the same block iff their central characters agree on every class after
// reduction modulo a fixed prime over 3.
struct BlockPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  std::size_t principal = 0;  // block containing the trivial character
  int defect = 0;             // v3(|G|)
};

// omega_chi(K) = |K| chi(g_K) / chi(1); always an algebraic integer for a
// correct table (checked).
cyc::Cyclotomic central_character(const ct::CharacterTable& t, std::size_t row, std::size_t cls);

// root_choice selects the canonical primitive root used by the reduction
// modulo 3 (0 = least, 1 = next, ...); the resulting partition must not
// depend on it.
BlockPartition block_partition(const ct::CharacterTable& t, int root_choice = 0);

struct SigmaReport {
  long k0 = 0;
  long k0_sigma = 0;
  std::vector<std::size_t> height_zero_rows;  // 3'-degree rows of the principal block
  std::vector<std::size_t> fixed_rows;        // sigma-fixed among those
  std::vector<long> orbit_sizes;              // sigma-orbit sizes on the height-zero rows
  std::vector<std::size_t> sigma_row_map;     // row permutation induced by sigma
};

SigmaReport sigma_report(const ct::CharacterTable& t, const BlockPartition& p);

struct TheoremACheck {
  int rank = 0;
  bool two_generated = false;
  long k0 = 0;
  long k0_sigma = 0;
  bool consistent = false;  // (rank == 2) iff k0_sigma in {6, 9}
};

TheoremACheck theorem_a_check(int syl3_rank, const SigmaReport& rep);

nlohmann::json report_json(const std::string& group, const Int& order, const BlockPartition& p,
                           const SigmaReport& rep, const TheoremACheck& check);

}  // namespace triblock::blk
