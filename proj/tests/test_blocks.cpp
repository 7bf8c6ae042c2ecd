#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "triblock/blocks.hpp"
#include "triblock/groups.hpp"

using namespace triblock;
using namespace triblock::blk;
using namespace triblock::ct;
using namespace triblock::pg;

TEST_CASE("central characters") {
  CharacterTable s3 = sn_table(3);
  // trivial character: omega = |K| on every class
  for (std::size_t j = 0; j < s3.cols(); ++j) {
    CHECK(central_character(s3, s3.trivial_row, j) ==
          cyc::Cyclotomic::rational(Rat(s3.classes[j].size), s3.exponent));
  }
  // identity class: omega = 1 for every character
  for (std::size_t i = 0; i < s3.rows(); ++i) {
    CHECK(central_character(s3, i, s3.identity_class) ==
          cyc::Cyclotomic::rational(1, s3.exponent));
  }
  // degree-2 character of S_3 on the 3-cycle class: 2 * (-1) / 2 = -1
  std::size_t row2 = 0, col3 = 0;
  for (std::size_t i = 0; i < s3.rows(); ++i) {
    if (s3.degrees[i] == 2) row2 = i;
  }
  for (std::size_t j = 0; j < s3.cols(); ++j) {
    if (s3.classes[j].rep_order == 3) col3 = j;
  }
  CHECK(central_character(s3, row2, col3) == cyc::Cyclotomic::rational(-1, s3.exponent));
}

TEST_CASE("block partitions of small groups") {
  // S_3: a single block containing all three characters
  CharacterTable s3 = sn_table(3);
  BlockPartition p3 = block_partition(s3);
  CHECK(p3.blocks.size() == 1);
  CHECK(p3.defect == 1);
  CHECK(p3.principal == 0);

  // C_3: one block with all three linear characters
  PermGroup c3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CharacterTable tc3 = dixon_table(c3, "C3");
  BlockPartition pc3 = block_partition(tc3);
  CHECK(pc3.blocks.size() == 1);
  CHECK(pc3.blocks[0].size() == 3);

  // a 3'-group: every character is a block of its own (defect zero)
  PermGroup c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CharacterTable tc4 = dixon_table(c4, "C4");
  BlockPartition pc4 = block_partition(tc4);
  CHECK(pc4.defect == 0);
  CHECK(pc4.blocks.size() == tc4.rows());
  CHECK(p3.blocks[p3.principal].front() == s3.trivial_row);
}

TEST_CASE("defect zero characters are singleton blocks") {
  // S_4 at p = 3: the two degree-3 characters have full 3-part, so each is a
  // block on its own
  CharacterTable s4 = sn_table(4);
  BlockPartition p = block_partition(s4);
  for (std::size_t i = 0; i < s4.rows(); ++i) {
    if (s4.degrees[i] % 3 == 0) {
      CHECK(p.blocks[p.block_of[i]].size() == 1);
    }
  }
  // principal block holds the other three characters
  CHECK(p.blocks[p.principal].size() == 3);
}

TEST_CASE("partition does not depend on the canonical root choice") {
  std::vector<CharacterTable> tables;
  tables.push_back(sn_table(6));
  tables.push_back(an_table(6));
  tables.push_back(dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 7)), "psl27"));
  for (const auto& t : tables) {
    BlockPartition a = block_partition(t, 0);
    BlockPartition b = block_partition(t, 1);
    CHECK(a.block_of == b.block_of);
  }
}

TEST_CASE("sigma reports") {
  // PSL(2,7): cyclic Sylow 3-subgroup, k0 = k0_sigma = 3
  {
    CharacterTable t = dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 7)), "psl27");
    BlockPartition p = block_partition(t);
    SigmaReport rep = sigma_report(t, p);
    CHECK(rep.k0 == 3);
    CHECK(rep.k0_sigma == 3);
    TheoremACheck check = theorem_a_check(1, rep);
    CHECK(check.consistent);  // rank 1 and k0_sigma not in {6, 9}
  }
  // S_6: rank 2, so k0_sigma must land in {6, 9}
  {
    CharacterTable t = sn_table(6);
    SigmaReport rep = sigma_report(t, block_partition(t));
    CHECK(rep.k0 == 9);
    CHECK(rep.k0_sigma == 9);  // rational characters are sigma-fixed
    CHECK(theorem_a_check(2, rep).consistent);
  }
  // A_9: every character sigma-fixed, so k0_sigma = k0
  {
    CharacterTable t = an_table(9);
    SigmaReport rep = sigma_report(t, block_partition(t));
    CHECK(rep.k0 == rep.k0_sigma);
    CHECK(theorem_a_check(2, rep).consistent);
  }
  // PSL(2,8): cyclic C_9 Sylow; sigma moves characters, k0 = 6, k0_sigma = 3
  {
    CharacterTable t = dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 8)), "psl28");
    BlockPartition p = block_partition(t);
    SigmaReport rep = sigma_report(t, p);
    CHECK(rep.k0 == 6);
    CHECK(rep.k0_sigma == 3);
    CHECK(theorem_a_check(1, rep).consistent);
    // orbit sizes are 3-powers
    for (long s : rep.orbit_sizes) {
      while (s % 3 == 0) s /= 3;
      CHECK(s == 1);
    }
  }
}

TEST_CASE("3 divides k0_sigma whenever 3 divides the group order") {
  std::vector<CharacterTable> tables;
  tables.push_back(sn_table(5));
  tables.push_back(sn_table(6));
  tables.push_back(an_table(6));
  tables.push_back(dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 7)), "psl27"));
  tables.push_back(dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 8)), "psl28"));
  for (const auto& t : tables) {
    SigmaReport rep = sigma_report(t, block_partition(t));
    CHECK(rep.k0_sigma % 3 == 0);
    CHECK(rep.k0_sigma >= 3);  // the trivial character is always fixed
    bool trivial_fixed = false;
    for (std::size_t i : rep.fixed_rows) {
      if (i == t.trivial_row) trivial_fixed = true;
    }
    CHECK(trivial_fixed);
  }
}

TEST_CASE("report json shape") {
  CharacterTable t = sn_table(6);
  BlockPartition p = block_partition(t);
  SigmaReport rep = sigma_report(t, p);
  TheoremACheck check = theorem_a_check(2, rep);
  nlohmann::json j = report_json("sym(6)", t.order, p, rep, check);
  CHECK(j.at("k0") == 9);
  CHECK(j.at("k0_sigma") == 9);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("two_generated") == true);
  CHECK(j.at("theorem_a_consistent") == true);
  CHECK(j.at("defect") == 2);
}
