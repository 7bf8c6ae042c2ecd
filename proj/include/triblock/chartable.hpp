#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triblock/cyclotomic.hpp"
#include "triblock/partitions.hpp"
#include "triblock/permgroup.hpp"

namespace triblock::ct {

struct ClassDesc {
  std::string name;
  long rep_order = 1;
  Int size = 1;
};

// Exact irreducible character table. Values live in Q(zeta_exponent); rows of
// Dixon tables are sorted by (degree, lexicographic value order), symmetric
// and alternating tables keep their partition indexing.
struct CharacterTable {
  std::string group;
  Int order;
  long exponent = 1;
  std::vector<ClassDesc> classes;
  std::size_t identity_class = 0;
  std::size_t trivial_row = 0;
  std::vector<std::string> row_names;
  std::vector<Int> degrees;
  std::vector<std::vector<cyc::Cyclotomic>> values;  // rows x classes
  std::map<long, std::vector<std::size_t>> power_maps;

  std::size_t rows() const { return values.size(); }
  std::size_t cols() const { return classes.size(); }

  nlohmann::json to_json() const;
};

// Dixon's method over F_ell, ell the least prime with ell = 1 (mod exponent)
// and ell > 2 ceil(sqrt(|G|)); exact lift through the power maps.
CharacterTable dixon_table(const pg::PermGroup& G, const pg::ConjClasses& cc,
                           const std::string& name);
CharacterTable dixon_table(const pg::PermGroup& G, const std::string& name,
                           const Int& max_order = Int(1000000));

// Murnaghan-Nakayama table of S_n, rows and columns indexed by partitions in
// descending lexicographic order.
CharacterTable sn_table(int n);

// A_n table via Clifford restriction from S_n; characters of self-conjugate
// partitions split with quadratic irrationalities on their own split class.
CharacterTable an_table(int n);

// Exact consistency checks: both orthogonality relations, degree
// divisibility, Sum d^2 = |G|, central character integrality. Returns the
// list of violations (empty for a correct table).
std::vector<std::string> validate(const CharacterTable& t);

}  // namespace triblock::ct
