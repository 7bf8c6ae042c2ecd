#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triblock/cyclotomic.hpp"

using namespace triblock;
using namespace triblock::cyc;

namespace {

Cyclotomic random_elem(long N, Rng& rng, int max_terms = 4) {
  Cyclotomic x = Cyclotomic::zero(N);
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int i = 0; i < terms; ++i) {
    long t = static_cast<long>(rng.below(static_cast<std::uint64_t>(N)));
    long c = static_cast<long>(rng.below(9)) - 4;
    x = x + Cyclotomic::root(N, t).scaled(Rat(c));
  }
  return x;
}

}  // namespace

TEST_CASE("canonical form and vanishing sums") {
  // 1 + z_3 + z_3^2 = 0
  Cyclotomic s = Cyclotomic::rational(1, 3) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
  CHECK(s.is_zero());
  // full vanishing sum over all N-th roots, N squarefree or not
  for (long N : {4L, 6L, 9L, 12L, 45L}) {
    Cyclotomic t = Cyclotomic::zero(N);
    for (long j = 0; j < N; ++j) t = t + Cyclotomic::root(N, j);
    CHECK(t.is_zero());
  }
  // same value built along different exponent paths has identical terms
  Rng rng(7);
  for (long N : {12L, 40L, 45L}) {
    for (int i = 0; i < 200; ++i) {
      long a = static_cast<long>(rng.below(static_cast<std::uint64_t>(3 * N)));
      long b = static_cast<long>(rng.below(static_cast<std::uint64_t>(3 * N)));
      Cyclotomic lhs = Cyclotomic::root(N, a % N) * Cyclotomic::root(N, b % N);
      Cyclotomic rhs = Cyclotomic::root(N, (a + b) % N);
      CHECK(lhs == rhs);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("integrality and rationality") {
  CHECK(Cyclotomic::rational(Rat(7), 9).is_integral());
  CHECK(!Cyclotomic::rational(Rat(1, 2), 9).is_integral());
  CHECK(Cyclotomic::root(9, 1).is_integral());
  Cyclotomic half = Cyclotomic::root(5, 1).scaled(Rat(1, 2));
  CHECK(!half.is_integral());
  CHECK(Cyclotomic::rational(Rat(3, 4), 6).as_rational() == Rat(3, 4));
  CHECK_THROWS_AS(Cyclotomic::root(5, 1).as_rational(), error);
  CHECK_THROWS_AS(Cyclotomic::root(5, 1) + Cyclotomic::root(7, 1), error);
}

TEST_CASE("sigma exponents") {
  CHECK(sigma(9).e == 4);
  CHECK(sigma(5).e == 1);
  CHECK(sigma(3).e == 1);  // 4 = 1 mod 3
  CHECK(sigma(45).e % 9 == 4);
  CHECK(sigma(45).e % 5 == 1);
  CHECK(galois_map_order(sigma(5)) == 1);
  CHECK(galois_map_order(sigma(3)) == 1);
  CHECK(galois_map_order(sigma(12)) == 1);
}

TEST_CASE("sigma fixes 3'-roots and raises 3-power roots to the fourth power") {
  GaloisMap s9 = sigma(9);
  CHECK(galois_apply(s9, Cyclotomic::root(9, 1)) == Cyclotomic::root(9, 4));
  GaloisMap s5 = sigma(5);
  CHECK(galois_apply(s5, Cyclotomic::root(5, 1)) == Cyclotomic::root(5, 1));
  GaloisMap s45 = sigma(45);
  CHECK(galois_apply(s45, Cyclotomic::root_pow(45, 5, 1)) == Cyclotomic::root_pow(45, 5, 1));
  CHECK(galois_apply(s45, Cyclotomic::root_pow(45, 9, 1)) == Cyclotomic::root_pow(45, 9, 4));
  // rationals fixed
  CHECK(galois_apply(s45, Cyclotomic::rational(Rat(-7, 3), 45)) == Cyclotomic::rational(Rat(-7, 3), 45));
}

TEST_CASE("sigma has 3-power order 3^(a-1) on Q(zeta_{3^a})") {
  for (int a = 2; a <= 4; ++a) {
    long N = 1;
    for (int i = 0; i < a; ++i) N *= 3;
    long expect = 1;
    for (int i = 0; i < a - 1; ++i) expect *= 3;
    CHECK(galois_map_order(sigma(N)) == expect);
  }
}

TEST_CASE("galois_apply is a ring automorphism") {
  for (long N : {9L, 12L, 45L}) {
    GaloisMap s = sigma(N);
    long ord = galois_map_order(s);
    long inv_e = 1;
    {
      long cur = 1;
      for (long i = 0; i + 1 < ord; ++i) cur = static_cast<long>((cur * (s.e % N)) % N);
      inv_e = (ord == 1) ? 1 : cur;
    }
    Rng rng(100 + N);
    for (int i = 0; i < 3000; ++i) {
      Cyclotomic a = random_elem(N, rng), b = random_elem(N, rng);
      CHECK(galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b));
      CHECK(galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b));
      CHECK(galois_apply(s, a).galois(inv_e) == a);  // bijective
    }
  }
}

TEST_CASE("reduce_modl") {
  CHECK(reduce_modl(Cyclotomic::rational(1, 3), 7, 2) == 1);
  CHECK(reduce_modl(Cyclotomic::root(3, 1), 7, 2) == 2);
  Cyclotomic vanish = Cyclotomic::rational(1, 3) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
  CHECK(reduce_modl(vanish, 7, 2) == 0);
  CHECK_THROWS_AS(reduce_modl(Cyclotomic::root(5, 1), 7, 2), error);
  // ring homomorphism on random integral pairs; 2 has order 12 mod 13
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    Cyclotomic a = random_elem(12, rng), b = random_elem(12, rng);
    auto ra = reduce_modl(a, 13, 2), rb = reduce_modl(b, 13, 2);
    CHECK(reduce_modl(a + b, 13, 2) == (ra + rb) % 13);
    CHECK(reduce_modl(a * b, 13, 2) == mulmod(ra, rb, 13));
  }
}

TEST_CASE("reduce_mod3 basics") {
  {
    Mod3Reducer red(9);
    CHECK(red.m() == 1);
    CHECK(red.reduce(Cyclotomic::rational(3, 9)).is_zero());
    CHECK(red.reduce(Cyclotomic::root(9, 1)).is_one());  // zeta_9 -> 1
    CHECK(red.reduce(Cyclotomic::rational(2, 9)) == red.field()->element({2}));
  }
  {
    // N = 8: N' = 8, order of 3 mod 8 is 2, residue field F_9
    Mod3Reducer red(8);
    CHECK(red.m() == 2);
    ff::FFElem w = red.reduce(Cyclotomic::root(8, 1));
    CHECK(ff::has_order_exactly(w, 8, factorize_u64(8)));
    // least primitive 8th root in F_9 = F_3[x]/(x^2+1) is x + 1
    CHECK(w == red.field()->element({1, 1}));
  }
}

TEST_CASE("reduce_mod3 is a ring homomorphism") {
  for (long N : {8L, 45L, 56L}) {
    Mod3Reducer red(N);
    Rng rng(200 + N);
    for (int i = 0; i < 2000; ++i) {
      Cyclotomic a = random_elem(N, rng), b = random_elem(N, rng);
      CHECK(red.reduce(a + b) == red.reduce(a) + red.reduce(b));
      CHECK(red.reduce(a * b) == red.reduce(a) * red.reduce(b));
    }
  }
  // distinct root choices give distinct reductions but agree on rationals
  Mod3Reducer r0(8, 0), r1(8, 1);
  CHECK(r0.omega() != r1.omega());
  CHECK(r0.reduce(Cyclotomic::rational(5, 8)) == r1.reduce(Cyclotomic::rational(5, 8)));
}

TEST_CASE("sqrt_integer squares to its argument") {
  for (auto [D, N] : std::vector<std::pair<long long, long>>{
           {5, 5}, {-7, 7}, {-3, 3}, {2, 8}, {12, 12}, {45, 45}, {-11, 11}, {21, 21}, {-27, 9}}) {
    Cyclotomic r = sqrt_integer(D, N);
    CHECK(r * r == Cyclotomic::rational(Rat(D), N));
  }
  // golden ratio from sqrt(5): x = (1+sqrt 5)/2 satisfies x^2 = x + 1
  Cyclotomic x = (Cyclotomic::rational(1, 5) + sqrt_integer(5, 5)).scaled(Rat(1, 2));
  CHECK(x * x == x + Cyclotomic::rational(1, 5));
}

TEST_CASE("promotion and json round trip") {
  Cyclotomic a = Cyclotomic::root(3, 1).promote(12);
  CHECK(a == Cyclotomic::root_pow(12, 3, 1));
  Rng rng(99);
  for (long N : {9L, 45L}) {
    for (int i = 0; i < 50; ++i) {
      Cyclotomic x = random_elem(N, rng).scaled(Rat(1, 3));
      Cyclotomic y = Cyclotomic::from_json(x.to_json());
      CHECK(x == y);
    }
  }
}
