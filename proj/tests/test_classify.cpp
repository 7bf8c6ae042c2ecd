#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triblock/classify.hpp"
#include "triblock/groups.hpp"

using namespace triblock;
using namespace triblock::cls;

namespace {

SymbolicSpec lie(const std::string& family, long long n, long long q, int eps = +1,
                 ExtKind ext = ExtKind::none) {
  SymbolicSpec s;
  s.family = family;
  s.n = n;
  s.q = q;
  s.eps = eps;
  s.ext = ext;
  return s;
}

}  // namespace

TEST_CASE("symmetric group ranks from 3-adic digits") {
  CHECK(rank_sym(9) == 2);
  CHECK(rank_sym(3) == 1);
  CHECK(rank_sym(12) == 3);
  CHECK(rank_sym(1) == 0);
  long long p = 1;
  for (int i = 0; i <= 6; ++i) {
    CHECK(rank_sym(p) == i);
    p *= 3;
  }
  for (int n = 3; n <= 14; ++n) {
    CHECK((rank_sym(n) == 2) == (n >= 6 && n <= 11));
  }
}

TEST_CASE("general linear ranks") {
  CHECK(rank_gl(3, 4, +1) == 2);
  CHECK(rank_gl(1, 7, +1) == 1);
  CHECK(rank_gl(27, 7, +1) == 4);
  CHECK(rank_gl(2, 4, +1) == 2);
  CHECK(rank_gl(3, 2, -1) == 2);  // unitary, 3 | q + 1
  CHECK_THROWS_AS(rank_gl(3, 8, +1), error);  // wrong congruence for this entry point
  CHECK_THROWS_AS(rank_gl(3, 9, +1), error);  // defining characteristic
  std::vector<long long> small;
  for (long long n = 1; n <= 30; ++n) {
    if (rank_gl(n, 4, +1) <= 4) small.push_back(n);
  }
  CHECK(small == std::vector<long long>{1, 2, 3, 4, 5, 6, 9, 10, 27});
  for (long long n : {1LL, 2LL, 4LL, 5LL, 10LL}) {
    for (int t = 2; t <= 3; ++t) {
      long long step = 1;
      for (int i = 0; i < t; ++i) step *= 3;
      CHECK(rank_gl(n + step, 4, +1) == rank_gl(n, 4, +1) + t + 1);
    }
  }
}

TEST_CASE("special and projective linear ranks") {
  CHECK(rank_psl(4, 7, +1) == 2);
  CHECK(rank_psl(5, 7, +1) == 3);  // via GL_4 and the digit formula
  CHECK(rank_psl(3, 4, +1) == 2);
  CHECK(rank_psl(2, 7, +1) == 1);
  CHECK(rank_psl(3, 2, -1) == 2);
  CHECK(rank_sl(3, 4, +1) == 2);
  CHECK(rank_sl(4, 7, +1) == 2);
  CHECK(rank_sl(1, 4, +1) == 0);
  CHECK(!rank_sl(6, 4, +1).has_value());
  CHECK(!rank_psl(9, 4, +1).has_value());
  CHECK(rank_psl(4, 8, +1) == rank_gl(2, 64, +1));
  CHECK(rank_psl(7, 8, +1) == 2);  // floor(7/2) = 3
  CHECK(rank_psl(2, 8, +1) == 1);
  CHECK(rank_psl(9, 8, +1) == rank_gl(4, 64, +1));
  for (long long n = 1; n <= 12; ++n) {
    for (auto [q, eps] : std::vector<std::pair<long long, int>>{{4, +1}, {7, +1}, {2, -1}}) {
      int glr = rank_gl(n, q, eps);
      auto slr = rank_sl(n, q, eps);
      auto pslr = rank_psl(n, q, eps);
      if (slr) {
        CHECK(glr - *slr >= 0);
        CHECK(glr - *slr <= 1);
      }
      if (slr && pslr) {
        CHECK(*slr - *pslr >= 0);
        CHECK(*slr - *pslr <= 1);
      }
    }
  }
}

TEST_CASE("two-generated classification for simple socles") {
  CHECK(two_generated(lie("psp", 6, 2)).value);
  CHECK(two_generated(lie("psp", 4, 7)).value);
  CHECK(!two_generated(lie("psp", 8, 2)).value);
  CHECK(!two_generated(lie("pomega-plus", 8, 5)).value);
  CHECK(two_generated(lie("pomega-minus", 8, 5)).value);
  CHECK(!two_generated(lie("pomega-minus", 10, 5)).value);
  CHECK(two_generated(lie("pomega-odd", 7, 5)).value);
  CHECK(two_generated(lie("g2", 0, 5)).value);
  CHECK(two_generated(lie("3d4", 0, 5)).value);
  CHECK(two_generated(lie("2f4", 0, 8)).value);
  CHECK(!two_generated(lie("f4", 0, 5)).value);
  CHECK(!two_generated(lie("e6", 0, 7)).value);
  CHECK(two_generated(lie("psl", 3, 7)).value);
  CHECK(two_generated(lie("psl", 4, 7)).value);
  CHECK(!two_generated(lie("psl", 5, 7)).value);
  CHECK(two_generated(lie("psl", 5, 8)).value);  // 3 | q + 1, n in 4..7
  CHECK(two_generated(lie("psl", 7, 8)).value);
  CHECK(!two_generated(lie("psl", 8, 8)).value);
  CHECK(!two_generated(lie("psl", 2, 7)).value);  // cyclic Sylow
  CHECK(two_generated(lie("psu", 4, 5)).value);   // 3 | q + 1 = q - eps
  CHECK(two_generated(lie("psl", 2, 9)).value);
  CHECK(two_generated(lie("psl", 3, 3)).value);
  CHECK(two_generated(lie("psp", 4, 3)).value);
  CHECK(!two_generated(lie("psp", 6, 3)).value);
  CHECK(!two_generated(lie("psl", 3, 9)).value);
  CHECK(!two_generated(lie("psl", 4, 3)).value);
  CHECK(!two_generated(lie("2g2", 0, 27)).value);
  SymbolicSpec alt;
  alt.family = "alt";
  for (int n = 5; n <= 13; ++n) {
    alt.n = n;
    CHECK(two_generated(alt).value == (n >= 6 && n <= 11));
  }
  SymbolicSpec spor;
  spor.family = "sporadic";
  spor.label = "M11";
  CHECK(two_generated(spor).value);
  spor.label = "M12";
  CHECK(two_generated(spor).value);
  spor.label = "J1";
  CHECK(!two_generated(spor).value);
  spor.label = "Co1";
  CHECK(!two_generated(spor).covered);
}

TEST_CASE("coverage honesty") {
  CHECK(!two_generated(lie("gl", 3, 4)).covered);   // not a simple socle
  CHECK(!two_generated(lie("psu", 3, 2)).covered);  // solvable
  CHECK(!two_generated(lie("psl", 2, 3)).covered);
  CHECK(!two_generated(lie("psp", 4, 2)).covered);
  CHECK(!two_generated(lie("2b2", 0, 8)).covered);  // 3'-order socle
  CHECK(!two_generated(lie("g2", 0, 2)).covered);
  CHECK_THROWS_AS(theorem_a_predict(lie("gl", 3, 4)), not_covered);
}

TEST_CASE("almost simple extension rules") {
  CHECK(two_generated(lie("psl", 2, 64, +1, ExtKind::field)).value);
  CHECK(!two_generated(lie("psl", 3, 64, +1, ExtKind::field)).value);
  CHECK(two_generated(lie("psl", 3, 64, +1, ExtKind::diagonal)).value);
  CHECK(two_generated(lie("psl", 3, 64, +1, ExtKind::diagonal_field)).value);
  CHECK(two_generated(lie("psl", 3, 7, +1, ExtKind::diagonal)).value);
  CHECK(two_generated(lie("psl", 3, 8, +1, ExtKind::field)).value);
  CHECK(!two_generated(lie("psl", 3, 64, +1, ExtKind::noncyclic3)).value);
  CHECK(!two_generated(lie("psl", 4, 8, +1, ExtKind::field)).value);
  CHECK(!two_generated(lie("psp", 4, 8, +1, ExtKind::field)).value);
  CHECK(!two_generated(lie("g2", 0, 64, +1, ExtKind::field)).value);
  CHECK(!two_generated(lie("psl", 3, 7, +1, ExtKind::field)).covered);
  CHECK(!two_generated(lie("psl", 4, 7, +1, ExtKind::diagonal)).covered);
  CHECK(two_generated(lie("psl", 4, 7, +1, ExtKind::three_prime)).value);
  SymbolicSpec sym12;
  sym12.family = "sym";
  sym12.n = 12;
  CHECK(!two_generated(sym12).value);
}

TEST_CASE("closed-form principal block counts") {
  {
    K0Result k = k0_formulas(lie("psl", 4, 7));
    CHECK(*k.k0 == 9);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psl", 4, 19));  // v3(18) = 2
    CHECK(*k.k0 == 27);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psl", 4, 109));  // v3(108) = 3
    CHECK(*k.k0 == 81);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psl", 3, 4));
    CHECK(*k.k0 == 6);
    CHECK(*k.k0_sigma == 6);
  }
  {
    K0Result k = k0_formulas(lie("psl", 6, 2));  // a = v3(3) = 1
    CHECK(*k.k0 == 9);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psl", 7, 8));  // a = v3(9) = 2
    CHECK(*k.k0 == 18);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psu", 6, 109));  // q + eps = 108, a = 3
    CHECK(*k.k0 == 45);
    CHECK(*k.k0_sigma == 9);
  }
  {
    K0Result k = k0_formulas(lie("psp", 6, 2));
    CHECK(*k.k0 == 9);
    CHECK(!k.k0_sigma.has_value());
  }
  {
    K0Result k = k0_formulas(lie("pomega-minus", 8, 5));
    CHECK(*k.k0 == 6 + 3 * (3 - 1) / 2);  // v3(24) = 1
  }
  CHECK(!k0_formulas(lie("psl", 5, 7)).k0.has_value());
  CHECK(!k0_formulas(lie("e6", 0, 7)).k0.has_value());
}

TEST_CASE("prediction records") {
  {
    SymbolicSpec s;
    s.family = "sym";
    s.n = 10;
    ClassificationRecord rec = theorem_a_predict(s);
    CHECK(rec.rank.value == 2);
    CHECK(rec.prediction);
  }
  {
    ClassificationRecord rec = theorem_a_predict(lie("psl", 5, 7));
    CHECK(rec.rank.value == 3);
    CHECK(!rec.prediction);
  }
  {
    ClassificationRecord rec = theorem_a_predict(lie("g2", 0, 7));
    CHECK(rec.prediction);
    CHECK(rec.rank.value == 2);
  }
  {
    ClassificationRecord rec = theorem_a_predict(lie("pomega-plus", 8, 5));
    CHECK(!rec.prediction);
    CHECK(rec.rank.value == 3);
    nlohmann::json j = rec.to_json();
    CHECK(j.at("two_generated") == false);
  }
}

TEST_CASE("formula ranks agree with brute-force Frattini ranks") {
  using zoo::Family;
  struct Case {
    zoo::GroupSpec build;
    SymbolicSpec sym;
  };
  std::vector<Case> cases;
  for (int n = 3; n <= 10; ++n) {
    SymbolicSpec s;
    s.family = "sym";
    s.n = n;
    cases.push_back({zoo::spec_sym(n), s});
  }
  cases.push_back({zoo::spec_matrix(Family::gl, 2, 4), lie("gl", 2, 4)});
  cases.push_back({zoo::spec_matrix(Family::gl, 3, 4), lie("gl", 3, 4)});
  cases.push_back({zoo::spec_matrix(Family::sl, 3, 4), lie("sl", 3, 4)});
  cases.push_back({zoo::spec_matrix(Family::psl, 3, 4), lie("psl", 3, 4)});
  cases.push_back({zoo::spec_matrix(Family::psl, 2, 7), lie("psl", 2, 7)});
  cases.push_back({zoo::spec_matrix(Family::psu, 3, 2), lie("psu", 3, 2, -1)});
  cases.push_back({zoo::spec_matrix(Family::psl, 2, 8), lie("psl", 2, 8)});
  {
    SymbolicSpec s;
    s.family = "wreath";
    s.tower = {1, 1};
    cases.push_back({zoo::spec_wreath({1, 1}), s});
  }
  for (const auto& c : cases) {
    pg::PermGroup g = zoo::build(c.build);
    pg::PermGroup p = zoo::syl3(c.build, g);
    RankResult r = rank_of(c.sym);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == p.frattini_rank_3group());
  }
}
