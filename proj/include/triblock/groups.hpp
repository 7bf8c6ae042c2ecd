#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triblock/permgroup.hpp"

namespace triblock::zoo {

enum class Family {
  sym,
  alt,
  gl,
  sl,
  pgl,
  psl,
  gu,
  su,
  pgu,
  psu,
  sp,
  psp,
  wreath_tower,
  external,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Symbolic description of a buildable group. For matrix families n is the
// dimension (sp/psp use the full dimension 2m), q the field size and eps the
// sign (+1 linear, -1 unitary; gu/su/pgu/psu force eps = -1). wreath_tower
// uses `tower` as the exponent list a_1..a_i of C_{3^{a_1}} wr ... wr
// C_{3^{a_i}}; external uses `label` as a generator file path.
struct GroupSpec {
  Family family = Family::sym;
  int n = 0;
  long long q = 0;
  int eps = +1;
  std::vector<int> tower;
  std::string label;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static GroupSpec from_json(const nlohmann::json& j);
};

inline GroupSpec spec_sym(int n) { return GroupSpec{Family::sym, n, 0, +1, {}, ""}; }
inline GroupSpec spec_alt(int n) { return GroupSpec{Family::alt, n, 0, +1, {}, ""}; }
inline GroupSpec spec_matrix(Family f, int n, long long q, int eps = +1) {
  return GroupSpec{f, n, q, eps, {}, ""};
}
inline GroupSpec spec_wreath(std::vector<int> tower) {
  return GroupSpec{Family::wreath_tower, 0, 0, +1, std::move(tower), ""};
}
inline GroupSpec spec_external(std::string path) {
  return GroupSpec{Family::external, 0, 0, +1, {}, std::move(path)};
}

// Order from the standard order polynomial / factorial; unknown (0) for
// external groups.
Int expected_order(const GroupSpec& spec);

// Permutation degree the builder will use; throws for malformed specs.
std::size_t expected_degree(const GroupSpec& spec);

// Faithful permutation representation. Matrix groups act on nonzero vectors,
// projective families on projective points (so the kernel is exactly the
// center); sym/alt act naturally; wreath towers act imprimitively. The
// constructed order is checked against expected_order.
pg::PermGroup build(const GroupSpec& spec);

// A Sylow 3-subgroup of G (which must be build(spec) or equal to it).
// Structural generators are used for sym/alt and for the matrix families in
// the 3 | (q - eps) congruence; wreath towers are their own Sylow subgroup;
// everything else falls back to a seeded randomized ascent with the given
// iteration budget, which reports failure rather than truncating.
pg::PermGroup syl3(const GroupSpec& spec, const pg::PermGroup& G, std::uint64_t seed = 0,
                   std::uint64_t budget = 100000);

pg::PermGroup direct_product(const pg::PermGroup& A, const pg::PermGroup& B);

// A wr B for B a transitive permutation group on its points: the base is one
// copy of A per point of B, permuted by B.
pg::PermGroup wreath_product(const pg::PermGroup& A, const pg::PermGroup& B);

// Generator file: `name <label>` line, `degree <n>` line, then one generator
// per line as n space-separated 0-based images; `#` starts a comment.
pg::PermGroup load_external(const std::string& path, std::string* label_out = nullptr);

}  // namespace triblock::zoo
