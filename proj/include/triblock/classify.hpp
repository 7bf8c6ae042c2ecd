#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triblock/common.hpp"

namespace triblock::cls {

class not_covered : public error {
public:
  explicit not_covered(const std::string& what) : error(what) {}
};

// base-3 digits, least significant first
std::vector<int> digits3(long long n);

// Frattini rank of a Sylow 3-subgroup of S_n (equally A_n): sum i * a_i over
// the base-3 digits of n.
int rank_sym(long long n);

// Rank for GL_n^eps(q) with 3 | (q - eps), 3 not dividing q:
// sum (i + 1) * a_i over the base-3 digits of n.
int rank_gl(long long n, long long q, int eps);

// Exact ranks where the reductions pin them down; nullopt otherwise (never a
// guess). Both congruences 3 | (q -+ eps) are handled; q must not be a power
// of 3.
std::optional<int> rank_sl(long long n, long long q, int eps);
std::optional<int> rank_psl(long long n, long long q, int eps);

// How an almost simple group sits over its socle: `none` is the simple group
// itself, `three_prime` an extension of order prime to 3; the remaining kinds
// say what generates a (cyclic or not) Sylow 3-subgroup of A/S.
enum class ExtKind { none, three_prime, diagonal, field, diagonal_field, noncyclic3 };

std::string ext_name(ExtKind e);
std::optional<ExtKind> ext_from_name(const std::string& name);

// Symbolic (not necessarily buildable) group description for the closed-form
// layer. Families: sym alt gl sl pgl psl gu su pgu psu sp psp pomega-odd
// pomega-plus pomega-minus g2 3d4 2f4 2b2 2g2 f4 e6 e7 e8 sporadic wreath.
// n is the dimension subscript of the group name; sporadic uses label.
struct SymbolicSpec {
  std::string family;
  long long n = 0;
  long long q = 0;
  int eps = +1;
  std::vector<int> tower;
  std::string label;
  ExtKind ext = ExtKind::none;

  std::string to_string() const;
};

struct TwoGen {
  bool covered = false;
  bool value = false;
  std::string provenance;
  std::string reason;  // set when not covered
};

// 2-generatedness of the Sylow 3-subgroups of the almost simple group
// described by s. Returns covered = false outside the encoded classification
// rather than guessing.
TwoGen two_generated(const SymbolicSpec& s);

struct RankResult {
  std::optional<int> value;
  std::string provenance;
};

// Closed-form Frattini rank where derivable (also for non-simple auxiliary
// families like gl/sl and wreath towers).
RankResult rank_of(const SymbolicSpec& s);

struct K0Result {
  std::optional<Int> k0;
  std::optional<long> k0_sigma;
  std::string provenance;
};

// Exact principal-block counts where stated in closed form.
K0Result k0_formulas(const SymbolicSpec& s);

struct ClassificationRecord {
  SymbolicSpec spec;
  RankResult rank;
  TwoGen two_gen;
  K0Result k0;
  bool prediction = false;  // k0_sigma in {6,9} predicted iff two-generated

  nlohmann::json to_json() const;
};

// Throws not_covered when the spec lies outside the encoded classification.
ClassificationRecord theorem_a_predict(const SymbolicSpec& s);

}  // namespace triblock::cls
