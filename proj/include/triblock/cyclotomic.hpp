#pragma once

#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "triblock/common.hpp"
#include "triblock/finitefield.hpp"

namespace triblock::cyc {

// Precomputed data for one conductor N: the factorization N = prod p^a and
// the CRT codec between residues t mod N and per-prime exponents. The basis
// of Q(zeta_N) used everywhere is the tensor product of the power bases of
// the prime-power subfields: zeta_N^t is a basis element iff every component
// exponent j_p lies below phi(p^a). This is an integral basis, so a value is
// an algebraic integer exactly when all its coefficients are integers, and
// equality is plain coefficient equality.
class CycCtx {
public:
  struct Part {
    std::uint64_t p;
    int a;
    long pa;          // p^a
    long phi;         // phi(p^a)
    long cofactor;    // N / p^a
    long inv_cof;     // (N/p^a)^{-1} mod p^a
  };

  static std::shared_ptr<const CycCtx> get(long N);

  long N() const { return N_; }
  long phi() const { return phiN_; }
  const std::vector<Part>& parts() const { return parts_; }

  std::vector<long> components(long t) const;      // j_p = t * inv_cof mod p^a
  long residue(const std::vector<long>& j) const;  // sum j_p * (N/p^a) mod N

private:
  explicit CycCtx(long N);
  long N_;
  long phiN_;
  std::vector<Part> parts_;
};

// Exact element of Q(zeta_N), stored as a sparse map from canonical basis
// residue t to rational coefficient.
class Cyclotomic {
public:
  Cyclotomic() : N_(1) {}

  static Cyclotomic zero(long N = 1);
  static Cyclotomic rational(const Rat& r, long N = 1);
  static Cyclotomic root(long N, long j);                  // zeta_N^j
  static Cyclotomic root_pow(long N, long o, long s);      // zeta_o^s inside Q(zeta_N), o | N

  long conductor() const { return N_; }
  const std::map<long, Rat>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_integral() const;
  bool is_rational() const;
  Rat as_rational() const;

  Cyclotomic promote(long M) const;  // embed into Q(zeta_M), N | M

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(const Rat& r) const;

  // Ring automorphism zeta -> zeta^e, gcd(e, N) = 1.
  Cyclotomic galois(long e) const;
  Cyclotomic conjugate() const { return galois(N_ == 1 ? 1 : N_ - 1); }

  bool operator==(const Cyclotomic& o) const { return N_ == o.N_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Deterministic total order (conductor, then term lists lexicographically).
  static int cmp(const Cyclotomic& a, const Cyclotomic& b);

  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);

private:
  void add_term(long t, const Rat& coeff);  // reduces to canonical basis
  void check_same(const Cyclotomic& o) const;

  long N_;
  std::map<long, Rat> c_;
};

// The Galois automorphism of Q(zeta_N) with exponent e; sigma(N) fixes
// 3'-roots of unity and raises 3-power roots to the fourth power.
struct GaloisMap {
  long N;
  long e;
};

GaloisMap sigma(long N);
Cyclotomic galois_apply(const GaloisMap& m, const Cyclotomic& x);
// Multiplicative order of m.e mod m.N (the order of the map).
long galois_map_order(const GaloisMap& m);

// A fixed square root of the nonzero integer D inside Q(zeta_N), built from
// Gauss sums. Requires the odd part of D to have squarefree part m0 with
// |m0| dividing N; D = m0 mod 4 must be 1 unless 4 | N (and 8 | N when D is
// even).
Cyclotomic sqrt_integer(long long D, long N);

// Reduction Z[zeta_N] -> F_ell sending zeta_N to omega, for ell = 1 mod N.
std::uint64_t reduce_modl(const Cyclotomic& x, std::uint64_t ell, std::uint64_t omega);

// Reduction of Z[zeta_N] modulo a fixed prime over 3: zeta_{3^b} maps to 1
// and zeta_{N'} maps to a chosen primitive N'-th root of unity omega in
// F_{3^m}, m the order of 3 mod N'. root_choice = 0 picks the least such
// omega by integer representative, 1 the next one, and so on: distinct
// choices correspond to distinct primes over 3.
class Mod3Reducer {
public:
  explicit Mod3Reducer(long N, int root_choice = 0);

  long N() const { return N_; }
  long n_prime() const { return Nprime_; }
  unsigned m() const { return field_->k(); }
  const ff::FieldPtr& field() const { return field_; }
  const ff::FFElem& omega() const { return omega_; }

  ff::FFElem reduce(const Cyclotomic& x) const;  // throws on non-integral x

private:
  long N_;
  long Nprime_;
  ff::FieldPtr field_;
  ff::FFElem omega_;
  std::shared_ptr<const CycCtx> ctx_;
  std::vector<std::vector<ff::FFElem>> part_pow_;  // images of zeta_{p^a}^j
};

}  // namespace triblock::cyc
