#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "triblock/chartable.hpp"
#include "triblock/groups.hpp"

using namespace triblock;
using namespace triblock::ct;
using namespace triblock::pg;

namespace {

std::vector<Int> sorted_degrees(const CharacterTable& t) {
  std::vector<Int> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("hook length formula agrees with the recursive degrees") {
  for (int n = 1; n <= 10; ++n) {
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& lambda : partitions(n)) {
      Int via_hooks = fact / hook_product(lambda);
      Partition ones(static_cast<std::size_t>(n), 1);
      CHECK(via_hooks == sn_character_value(lambda, ones));
    }
  }
}

TEST_CASE("small symmetric tables") {
  CharacterTable s3 = sn_table(3);
  CHECK(sorted_degrees(s3) == std::vector<Int>{1, 1, 2});
  CHECK(validate(s3).empty());
  CharacterTable s4 = sn_table(4);
  // row order (4),(3,1),(2,2),(2,1,1),(1^4)
  CHECK(s4.degrees == std::vector<Int>{1, 3, 2, 3, 1});
  CHECK(validate(s4).empty());
  // trivial partition row is all ones
  for (const auto& v : s4.values[s4.trivial_row]) {
    CHECK(v == cyc::Cyclotomic::rational(1, s4.exponent));
  }
  // second orthogonality recovers the centralizer orders 4,3,8,4,24
  std::vector<Int> centralizers;
  for (const auto& c : s4.classes) centralizers.push_back(s4.order / c.size);
  CHECK(centralizers == std::vector<Int>{4, 3, 8, 4, 24});
  for (int n = 5; n <= 9; ++n) CHECK(validate(sn_table(n)).empty());
}

TEST_CASE("dixon agrees with the combinatorial S_n tables") {
  for (int n = 3; n <= 7; ++n) {
    PermGroup g = zoo::build(zoo::spec_sym(n));
    ConjClasses cc = conjugacy_classes(g);
    CharacterTable dx = dixon_table(g, cc, "sym");
    CHECK(validate(dx).empty());
    CharacterTable sn = sn_table(n);
    REQUIRE(dx.rows() == sn.rows());
    // column bijection via the cycle type of the class representatives
    auto parts = partitions(n);
    std::vector<std::size_t> col_map(dx.cols());
    for (std::size_t j = 0; j < dx.cols(); ++j) {
      Partition type = cc.reps()[j].cycle_type();
      std::size_t hit = static_cast<std::size_t>(
          std::find(parts.begin(), parts.end(), type) - parts.begin());
      REQUIRE(hit != sn.cols());
      CHECK(sn.classes[hit].size == dx.classes[j].size);
      col_map[j] = hit;
    }
    // rows must match as a set after aligning columns
    std::set<std::vector<std::string>> dx_rows, sn_rows;
    for (std::size_t i = 0; i < dx.rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t j = 0; j < dx.cols(); ++j) {
        row.push_back(dx.values[i][j].to_json().dump());
      }
      dx_rows.insert(row);
    }
    for (std::size_t i = 0; i < sn.rows(); ++i) {
      std::vector<std::string> row(sn.cols());
      for (std::size_t j = 0; j < dx.cols(); ++j) {
        row[j] = sn.values[i][col_map[j]].to_json().dump();
      }
      sn_rows.insert(row);
    }
    CHECK(dx_rows == sn_rows);
  }
}

TEST_CASE("dixon on C_3 gives three linear characters over Q(zeta_3)") {
  PermGroup c3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CharacterTable t = dixon_table(c3, "C3");
  CHECK(t.rows() == 3);
  CHECK(t.exponent == 3);
  CHECK(sorted_degrees(t) == std::vector<Int>{1, 1, 1});
  CHECK(validate(t).empty());
  bool has_irrational = false;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!t.values[i][j].is_rational()) has_irrational = true;
    }
  }
  CHECK(has_irrational);
}

TEST_CASE("dixon recomputes the PSL(2,7) table") {
  PermGroup g = zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 7));
  CharacterTable t = dixon_table(g, "psl(2,7)");
  CHECK(t.rows() == 6);
  CHECK(sorted_degrees(t) == std::vector<Int>{1, 3, 3, 6, 7, 8});
  Int sumsq = 0;
  for (const Int& d : t.degrees) sumsq += d * d;
  CHECK(sumsq == 168);
  CHECK(validate(t).empty());
}

TEST_CASE("alternating tables") {
  CharacterTable a5 = an_table(5);
  CHECK(sorted_degrees(a5) == std::vector<Int>{1, 3, 3, 4, 5});
  CHECK(validate(a5).empty());
  // the two degree-3 rows carry the golden-ratio values on the split classes
  {
    bool found = false;
    for (std::size_t i = 0; i < a5.rows(); ++i) {
      if (a5.degrees[i] != 3) continue;
      for (std::size_t j = 0; j < a5.cols(); ++j) {
        cyc::Cyclotomic v = a5.values[i][j];
        if (!v.is_rational()) {
          CHECK(v * v == v + cyc::Cyclotomic::rational(1, a5.exponent));
          found = true;
        }
      }
    }
    CHECK(found);
  }
  CharacterTable a6 = an_table(6);
  CHECK(sorted_degrees(a6) == std::vector<Int>{1, 5, 5, 8, 8, 9, 10});
  CHECK(validate(a6).empty());
  CharacterTable a7 = an_table(7);
  CHECK(validate(a7).empty());
  // restriction of a non-self-conjugate character stays irreducible with the
  // same degree
  {
    CharacterTable s7 = sn_table(7);
    Partition p421{4, 2, 1};
    auto parts = partitions(7);
    auto idx = static_cast<std::size_t>(
        std::find(parts.begin(), parts.end(), p421) - parts.begin());
    Int deg = s7.degrees[idx];
    bool found = false;
    for (std::size_t i = 0; i < a7.rows(); ++i) {
      if (a7.row_names[i] == "[4,2,1]" || a7.row_names[i] == "[3,2,1,1]") {
        CHECK(a7.degrees[i] == deg);
        found = true;
      }
    }
    CHECK(found);
  }
  for (int n = 8; n <= 9; ++n) CHECK(validate(an_table(n)).empty());
}

TEST_CASE("dixon agrees with the alternating tables") {
  for (int n = 5; n <= 6; ++n) {
    PermGroup g = zoo::build(zoo::spec_alt(n));
    CharacterTable dx = dixon_table(g, "alt");
    CharacterTable an = an_table(n);
    CHECK(validate(dx).empty());
    CHECK(sorted_degrees(dx) == sorted_degrees(an));
  }
}

TEST_CASE("validate flags a perturbed table") {
  CharacterTable t = sn_table(4);
  CHECK(validate(t).empty());
  t.values[2][1] = t.values[2][1] + cyc::Cyclotomic::rational(1, t.exponent);
  CHECK(!validate(t).empty());
}

TEST_CASE("galois maps permute the rows of every table") {
  std::vector<CharacterTable> tables;
  tables.push_back(sn_table(5));
  tables.push_back(an_table(5));
  tables.push_back(dixon_table(zoo::build(zoo::spec_matrix(zoo::Family::psl, 2, 7)), "psl27"));
  for (const auto& t : tables) {
    for (long e2 = 2; e2 < std::min(t.exponent, 30L); ++e2) {
      if (std::gcd(e2, t.exponent) != 1) continue;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        std::vector<cyc::Cyclotomic> image;
        for (std::size_t j = 0; j < t.cols(); ++j) image.push_back(t.values[i][j].galois(e2));
        bool matched = false;
        for (std::size_t i2 = 0; i2 < t.rows() && !matched; ++i2) {
          bool same = true;
          for (std::size_t j = 0; j < t.cols() && same; ++j) {
            if (!(image[j] == t.values[i2][j])) same = false;
          }
          matched = same;
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("power maps are consistent") {
  CharacterTable a5 = an_table(5);
  // squaring a 5-cycle lands in the other 5-cycle class
  std::size_t five_a = a5.cols(), five_b = a5.cols();
  for (std::size_t j = 0; j < a5.cols(); ++j) {
    if (a5.classes[j].rep_order == 5) {
      if (five_a == a5.cols()) five_a = j;
      else five_b = j;
    }
  }
  REQUIRE(five_b != a5.cols());
  auto pm2 = a5.power_maps.at(2);
  CHECK(pm2[five_a] == five_b);
  CHECK(pm2[five_b] == five_a);
  // k = -1: 5-cycles are rational classes in A_5 (the inverse stays put)
  auto pm1 = a5.power_maps.at(-1);
  CHECK(pm1[five_a] == five_a);
  // json round trip of the table structure
  nlohmann::json j = a5.to_json();
  CHECK(j.at("classes").size() == a5.cols());
  CHECK(j.at("irreducibles").size() == a5.rows());
}
