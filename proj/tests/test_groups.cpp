#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "triblock/groups.hpp"

using namespace triblock;
using namespace triblock::pg;
using namespace triblock::zoo;

namespace {
const std::string kData = TRIBLOCK_DATA_DIR;
}

TEST_CASE("natural actions") {
  PermGroup s9 = build(spec_sym(9));
  CHECK(s9.order() == 362880);
  PermGroup a5 = build(spec_alt(5));
  CHECK(a5.order() == 60);
  PermGroup w = build(spec_wreath({1, 1}));
  CHECK(w.degree() == 9);
  CHECK(w.order() == 81);
  PermGroup w3 = build(spec_wreath({1, 1, 1}));
  CHECK(w3.degree() == 27);
  CHECK(w3.order() == int_pow(Int(3), 13));
  PermGroup w21 = build(spec_wreath({2, 1}));  // C_9 wr C_3
  CHECK(w21.order() == int_pow(Int(9), 3) * 3);
}

TEST_CASE("linear and projective groups") {
  PermGroup gl24 = build(spec_matrix(Family::gl, 2, 4));
  CHECK(gl24.order() == 180);
  CHECK(gl24.degree() == 15);
  PermGroup psl34 = build(spec_matrix(Family::psl, 3, 4));
  CHECK(psl34.order() == 20160);
  CHECK(psl34.degree() == 21);
  PermGroup psl27 = build(spec_matrix(Family::psl, 2, 7));
  CHECK(psl27.order() == 168);
  PermGroup sl34 = build(spec_matrix(Family::sl, 3, 4));
  CHECK(sl34.order() == 60480);
  PermGroup pgl27 = build(spec_matrix(Family::pgl, 2, 7));
  CHECK(pgl27.order() == 336);
  PermGroup psl28 = build(spec_matrix(Family::psl, 2, 8));
  CHECK(psl28.order() == 504);
  PermGroup gl37 = build(spec_matrix(Family::gl, 3, 7));
  CHECK(gl37.order() == expected_order(spec_matrix(Family::gl, 3, 7)));
}

TEST_CASE("unitary groups preserve the form and have the right orders") {
  PermGroup gu32 = build(spec_matrix(Family::gu, 3, 2));
  CHECK(gu32.order() == 648);
  PermGroup su32 = build(spec_matrix(Family::su, 3, 2));
  CHECK(su32.order() == 216);
  PermGroup psu32 = build(spec_matrix(Family::psu, 3, 2));
  CHECK(psu32.order() == 72);
  CHECK(psu32.degree() == 21);
  PermGroup su23 = build(spec_matrix(Family::su, 2, 3));  // SU_2(3) = SL_2(3)
  CHECK(su23.order() == 24);
  PermGroup gu23 = build(spec_matrix(Family::gu, 2, 3));
  CHECK(gu23.order() == 96);
}

TEST_CASE("symplectic groups") {
  PermGroup sp43 = build(spec_matrix(Family::sp, 4, 3));
  CHECK(sp43.order() == 51840);
  PermGroup sp42 = build(spec_matrix(Family::sp, 4, 2));
  CHECK(sp42.order() == 720);
  PermGroup psp43 = build(spec_matrix(Family::psp, 4, 3));
  CHECK(psp43.order() == 25920);
}

TEST_CASE("sylow subgroups: structural") {
  {
    PermGroup g = build(spec_sym(9));
    PermGroup p = syl3(spec_sym(9), g);
    CHECK(p.order() == 81);
    CHECK(p.is_3group());
    for (const Perm& h : p.generators()) CHECK(g.contains(h));
    CHECK(p.frattini_rank_3group() == 2);
  }
  {
    PermGroup g = build(spec_alt(9));
    CHECK(syl3(spec_alt(9), g).order() == 81);
  }
  {
    PermGroup g = build(spec_matrix(Family::gl, 2, 4));
    PermGroup p = syl3(spec_matrix(Family::gl, 2, 4), g);
    CHECK(p.order() == 9);
    for (const Perm& h : p.generators()) CHECK(g.contains(h));
  }
  {
    PermGroup g = build(spec_matrix(Family::psl, 2, 7));
    PermGroup p = syl3(spec_matrix(Family::psl, 2, 7), g);
    CHECK(p.order() == 3);
    CHECK(p.frattini_rank_3group() == 1);
  }
  {
    GroupSpec s = spec_matrix(Family::psu, 3, 2);
    PermGroup g = build(s);
    PermGroup p = syl3(s, g);
    CHECK(p.order() == 9);
    for (const Perm& h : p.generators()) CHECK(g.contains(h));
    CHECK(p.frattini_rank_3group() == 2);
  }
  {
    GroupSpec s = spec_matrix(Family::gl, 4, 7);
    PermGroup g = build(s);
    PermGroup p = syl3(s, g);
    CHECK(p.order() == three_part(g.order()));
    CHECK(p.order() == 243);
  }
  {
    GroupSpec s = spec_wreath({1, 1});
    PermGroup g = build(s);
    CHECK(syl3(s, g).order() == 81);
  }
}

TEST_CASE("sylow subgroups: randomized paths") {
  {
    // 3 | q + 1: falls back to the seeded search
    GroupSpec s = spec_matrix(Family::psl, 2, 8);
    PermGroup g = build(s);
    PermGroup p = syl3(s, g, 0);
    CHECK(p.order() == 9);
    CHECK(p.frattini_rank_3group() == 1);  // cyclic C_9
  }
  {
    // defining characteristic
    GroupSpec s = spec_matrix(Family::sp, 4, 3);
    PermGroup g = build(s);
    PermGroup p = syl3(s, g, 0);
    CHECK(p.order() == 81);
    CHECK(p.is_3group());
  }
  {
    GroupSpec s = spec_external(kData + "/m11.gens");
    PermGroup g = build(s);
    CHECK(g.order() == 7920);
    PermGroup p = syl3(s, g, 0);
    CHECK(p.order() == 9);
    CHECK(p.frattini_rank_3group() == 2);
  }
}

TEST_CASE("sylow order times 3'-part recovers the group order") {
  std::vector<GroupSpec> corpus = {
      spec_sym(6),  spec_sym(9),  spec_alt(7),
      spec_matrix(Family::gl, 2, 4), spec_matrix(Family::sl, 3, 4),
      spec_matrix(Family::psl, 3, 4), spec_matrix(Family::psl, 2, 7),
      spec_matrix(Family::su, 3, 2), spec_wreath({1, 1}),
  };
  for (const GroupSpec& s : corpus) {
    PermGroup g = build(s);
    PermGroup p = syl3(s, g);
    CHECK(p.order() == three_part(g.order()));
    CHECK(p.is_3group());
    for (const Perm& h : p.generators()) {
      Int o = h.order();
      CHECK(o == three_part(o));  // every generator has 3-power order
    }
  }
}

TEST_CASE("direct products") {
  PermGroup c3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  PermGroup t = PermGroup::trivial(2);
  CHECK(direct_product(c3, t).order() == 3);
  PermGroup c3c3 = direct_product(c3, c3);
  CHECK(c3c3.order() == 9);
  CHECK(c3c3.frattini_rank_3group() == 2);
  PermGroup s3 = build(spec_sym(3));
  PermGroup s9 = build(spec_sym(9));
  PermGroup prod = direct_product(syl3(spec_sym(3), s3), syl3(spec_sym(9), s9));
  CHECK(prod.order() == 3 * 81);
}

TEST_CASE("wreath products of 3-groups") {
  PermGroup c3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  PermGroup w = wreath_product(c3, c3);
  CHECK(w.degree() == 9);
  CHECK(w.order() == 81);
  CHECK(w.frattini_rank_3group() == 2);
  PermGroup w2 = wreath_product(w, c3);  // (C3 wr C3) wr C3
  CHECK(w2.order() == int_pow(Int(81), 3) * 3);
}

TEST_CASE("external generator files") {
  std::string label;
  PermGroup m11 = load_external(kData + "/m11.gens", &label);
  CHECK(label == "M11");
  CHECK(m11.order() == 7920);
  PermGroup m12 = load_external(kData + "/m12.gens");
  CHECK(m12.order() == 95040);

  // trivial and tiny files
  std::string tmp1 = "/tmp/triblock_test_id.gens";
  {
    std::ofstream out(tmp1);
    out << "name trivial\ndegree 4\n0 1 2 3\n";
  }
  CHECK(load_external(tmp1).order() == 1);
  std::string tmp2 = "/tmp/triblock_test_c5.gens";
  {
    std::ofstream out(tmp2);
    out << "# a single 5-cycle\nname C5\ndegree 5\n1 2 3 4 0\n";
  }
  CHECK(load_external(tmp2).order() == 5);
  std::string tmp3 = "/tmp/triblock_test_bad.gens";
  {
    std::ofstream out(tmp3);
    out << "name bad\ndegree 3\n0 0 1\n";
  }
  CHECK_THROWS_AS(load_external(tmp3), error);
  std::remove(tmp1.c_str());
  std::remove(tmp2.c_str());
  std::remove(tmp3.c_str());
}

TEST_CASE("spec parsing and printing") {
  GroupSpec s = spec_matrix(Family::psl, 3, 4, +1);
  CHECK(s.to_string() == "psl(3,4,+)");
  GroupSpec r = GroupSpec::from_json(s.to_json());
  CHECK(r.family == Family::psl);
  CHECK(r.n == 3);
  CHECK(r.q == 4);
  CHECK(spec_wreath({1, 1}).to_string() == "wreath[1,1]");
  CHECK(GroupSpec::from_json(spec_wreath({2, 1}).to_json()).tower == std::vector<int>{2, 1});
}

TEST_CASE("degree bounds are enforced") {
  CHECK_THROWS_AS(build(spec_sym(6000)), error);
  CHECK_THROWS_AS(build(spec_matrix(Family::gl, 8, 7)), error);
}
