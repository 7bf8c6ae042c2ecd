#include "triblock/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace triblock::cyc {

namespace {

long mod_pos(long long v, long m) {
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long crt(long r1, long m1, long r2, long m2) {
  // solve x = r1 mod m1, x = r2 mod m2 with gcd(m1,m2) = 1
  long long x, y;
  long long g = egcd(m1, m2, x, y);
  if (g != 1) throw error("crt: moduli not coprime");
  long long m = static_cast<long long>(m1) * m2;
  long long res = (static_cast<long long>(r1) * m2 % m) * (y % m) % m +
                  (static_cast<long long>(r2) * m1 % m) * (x % m) % m;
  return mod_pos(res, static_cast<long>(m));
}

}  // namespace

CycCtx::CycCtx(long N) : N_(N) {
  if (N < 1) throw error("conductor must be >= 1");
  phiN_ = 1;
  auto fac = factorize_u64(static_cast<std::uint64_t>(N));
  for (auto [p, a] : fac) {
    Part part;
    part.p = p;
    part.a = a;
    part.pa = 1;
    for (int i = 0; i < a; ++i) part.pa *= static_cast<long>(p);
    part.phi = part.pa / static_cast<long>(p) * (static_cast<long>(p) - 1);
    part.cofactor = N / part.pa;
    part.inv_cof = static_cast<long>(invmod(static_cast<std::uint64_t>(part.cofactor % part.pa),
                                            static_cast<std::uint64_t>(part.pa)));
    phiN_ *= part.phi;
    parts_.push_back(part);
  }
}

std::shared_ptr<const CycCtx> CycCtx::get(long N) {
  static std::mutex mu;
  static std::unordered_map<long, std::shared_ptr<const CycCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const CycCtx>(new CycCtx(N));
  cache.emplace(N, ctx);
  return ctx;
}

std::vector<long> CycCtx::components(long t) const {
  std::vector<long> j(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Part& pp = parts_[i];
    j[i] = mod_pos(static_cast<long long>(t % pp.pa) * pp.inv_cof, pp.pa);
  }
  return j;
}

long CycCtx::residue(const std::vector<long>& j) const {
  long long t = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    t = (t + static_cast<long long>(j[i]) * parts_[i].cofactor) % N_;
  }
  return mod_pos(t, N_);
}

// ---- Cyclotomic ----

Cyclotomic Cyclotomic::zero(long N) {
  Cyclotomic x;
  x.N_ = N;
  CycCtx::get(N);  // validate
  return x;
}

Cyclotomic Cyclotomic::rational(const Rat& r, long N) {
  Cyclotomic x = zero(N);
  if (r != 0) x.c_.emplace(0, r);
  return x;
}

Cyclotomic Cyclotomic::root(long N, long j) {
  Cyclotomic x = zero(N);
  x.add_term(mod_pos(j, N), Rat(1));
  return x;
}

Cyclotomic Cyclotomic::root_pow(long N, long o, long s) {
  if (o < 1 || N % o != 0) throw error("root_pow: o must divide N");
  return root(N, mod_pos(static_cast<long long>(mod_pos(s, o)) * (N / o), N));
}

void Cyclotomic::add_term(long t, const Rat& coeff) {
  if (coeff == 0) return;
  auto ctx = CycCtx::get(N_);
  std::vector<long> j = ctx->components(t);
  // Find the first component with exponent at or above phi(p^a); rewrite with
  // the relation 1 + x^{p^{a-1}} + ... + x^{(p-1)p^{a-1}} = 0 and recurse.
  for (std::size_t i = 0; i < ctx->parts().size(); ++i) {
    const CycCtx::Part& pp = ctx->parts()[i];
    if (j[i] >= pp.phi) {
      long r = j[i] - pp.phi;
      long step = pp.pa / static_cast<long>(pp.p);
      Rat neg = -coeff;
      for (long u = 0; u + 1 < static_cast<long>(pp.p); ++u) {
        std::vector<long> j2 = j;
        j2[i] = r + u * step;
        add_term(ctx->residue(j2), neg);
      }
      return;
    }
  }
  auto it = c_.find(t);
  if (it == c_.end()) {
    c_.emplace(t, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (N_ != o.N_) throw error("cyclotomic conductor mismatch");
}

bool Cyclotomic::is_integral() const {
  for (const auto& [t, c] : c_) {
    (void)t;
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rat Cyclotomic::as_rational() const {
  if (c_.empty()) return Rat(0);
  if (!is_rational()) throw error("value is not rational");
  return c_.begin()->second;
}

Cyclotomic Cyclotomic::promote(long M) const {
  if (M % N_ != 0) throw error("promote: old conductor must divide new one");
  if (M == N_) return *this;
  Cyclotomic r = zero(M);
  long f = M / N_;
  for (const auto& [t, c] : c_) r.add_term(mod_pos(static_cast<long long>(t) * f, M), c);
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic r = *this;
  for (const auto& [t, c] : o.c_) {
    auto it = r.c_.find(t);
    if (it == r.c_.end()) {
      r.c_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [t, c] : r.c_) {
    (void)t;
    c = -c;
  }
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  Cyclotomic r = zero(N_);
  for (const auto& [t1, c1] : c_) {
    for (const auto& [t2, c2] : o.c_) {
      r.add_term(mod_pos(static_cast<long long>(t1) + t2, N_), c1 * c2);
    }
  }
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rat& s) const {
  if (s == 0) return zero(N_);
  Cyclotomic r = *this;
  for (auto& [t, c] : r.c_) {
    (void)t;
    c *= s;
  }
  return r;
}

Cyclotomic Cyclotomic::galois(long e) const {
  long em = mod_pos(e, N_);
  if (std::gcd(static_cast<long long>(em), static_cast<long long>(N_)) != 1) {
    throw error("galois exponent not invertible mod conductor");
  }
  Cyclotomic r = zero(N_);
  for (const auto& [t, c] : c_) r.add_term(mod_pos(static_cast<long long>(t) * em, N_), c);
  return r;
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.N_ != b.N_) return a.N_ < b.N_ ? -1 : 1;
  auto ia = a.c_.begin(), ib = b.c_.begin();
  while (ia != a.c_.end() && ib != b.c_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.c_.end()) return 1;
  if (ib != b.c_.end()) return -1;
  return 0;
}

namespace {

nlohmann::json rat_to_json(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1 && num >= -(Int(1) << 53) && num <= (Int(1) << 53)) {
    return static_cast<std::int64_t>(num);
  }
  return num.str() + "/" + den.str();
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

nlohmann::json Cyclotomic::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [t, c] : c_) coeffs[std::to_string(t)] = rat_to_json(c);
  return nlohmann::json{{"N", N_}, {"c", coeffs}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  Cyclotomic x = zero(j.at("N").get<long>());
  for (const auto& [key, val] : j.at("c").items()) {
    x.add_term(mod_pos(std::stol(key), x.N_), rat_from_json(val));
  }
  return x;
}

// ---- Galois maps ----

GaloisMap sigma(long N) {
  if (N < 1) throw error("sigma: conductor must be >= 1");
  long three_pow = 1;
  long Nprime = N;
  while (Nprime % 3 == 0) {
    Nprime /= 3;
    three_pow *= 3;
  }
  if (N == 1) return GaloisMap{1, 0};
  long e;
  if (three_pow == 1) {
    e = 1;
  } else if (Nprime == 1) {
    e = 4 % three_pow;
  } else {
    e = crt(4 % three_pow, three_pow, 1, Nprime);
  }
  return GaloisMap{N, e};
}

Cyclotomic galois_apply(const GaloisMap& m, const Cyclotomic& x) {
  if (x.conductor() != m.N) throw error("galois_apply: conductor mismatch");
  if (m.N == 1) return x;
  return x.galois(m.e);
}

long galois_map_order(const GaloisMap& m) {
  if (m.N == 1) return 1;
  long order = 1;
  long cur = mod_pos(m.e, m.N);
  if (std::gcd(static_cast<long long>(cur), static_cast<long long>(m.N)) != 1) {
    throw error("galois_map_order: exponent not invertible");
  }
  while (cur != 1 % m.N) {
    cur = mod_pos(static_cast<long long>(cur) * m.e, m.N);
    ++order;
  }
  return order;
}

// ---- integer square roots via Gauss sums ----

Cyclotomic sqrt_integer(long long D, long N) {
  if (D == 0) throw error("sqrt_integer: D must be nonzero");
  long long m0 = D < 0 ? -1 : 1;
  long long square = 1;
  long long v = D < 0 ? -D : D;
  for (long long p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) { v /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) m0 *= p;
  }
  if (v > 1) m0 *= v;  // leftover prime
  // D = m0 * square^2 with m0 squarefree (and signed).
  Cyclotomic acc = Cyclotomic::rational(Rat(square), N);
  long long odd = m0 < 0 ? -m0 : m0;
  bool need_i = m0 < 0;
  if (odd % 2 == 0) {
    odd /= 2;
    if (N % 8 != 0) throw error("sqrt_integer: need 8 | N for even D");
    // sqrt(2) = zeta_8 + zeta_8^{-1}
    acc = acc * (Cyclotomic::root_pow(N, 8, 1) + Cyclotomic::root_pow(N, 8, 7));
  }
  for (auto [p, e] : factorize_u64(static_cast<std::uint64_t>(odd))) {
    (void)e;
    long lp = static_cast<long>(p);
    if (N % lp != 0) throw error("sqrt_integer: squarefree part must divide conductor");
    // Gauss sum: sum_t legendre(t, p) zeta_p^t = sqrt(p) if p = 1 mod 4, else sqrt(-p)
    Cyclotomic g = Cyclotomic::zero(N);
    for (long t = 1; t < lp; ++t) {
      long ls = static_cast<long>(powmod(static_cast<std::uint64_t>(t), (p - 1) / 2, p));
      Rat sign = (ls == 1) ? Rat(1) : Rat(-1);
      g = g + Cyclotomic::root_pow(N, lp, t).scaled(sign);
    }
    acc = acc * g;
    if (p % 4 == 3) need_i = !need_i;  // contributed sqrt(-p)
  }
  if (need_i) {
    if (N % 4 != 0) throw error("sqrt_integer: need 4 | N for this sign combination");
    acc = acc * Cyclotomic::root_pow(N, 4, 1);
  }
  return acc;
}

// ---- reductions ----

std::uint64_t reduce_modl(const Cyclotomic& x, std::uint64_t ell, std::uint64_t omega) {
  if (ell % static_cast<std::uint64_t>(x.conductor()) != 1u) {
    throw error("reduce_modl: ell must be 1 mod conductor");
  }
  if (!x.is_integral()) throw error("reduce_modl: value is not an algebraic integer");
  std::uint64_t acc = 0;
  for (const auto& [t, c] : x.terms()) {
    Int num = boost::multiprecision::numerator(c) % static_cast<long long>(ell);
    if (num < 0) num += static_cast<long long>(ell);
    auto cm = static_cast<std::uint64_t>(num);
    acc = (acc + mulmod(cm, powmod(omega, static_cast<std::uint64_t>(t), ell), ell)) % ell;
  }
  return acc;
}

Mod3Reducer::Mod3Reducer(long N, int root_choice) : N_(N) {
  ctx_ = CycCtx::get(N);
  Nprime_ = N;
  while (Nprime_ % 3 == 0) Nprime_ /= 3;
  // order of 3 mod N'
  unsigned m = 1;
  if (Nprime_ > 1) {
    long cur = 3 % Nprime_;
    m = 1;
    while (cur != 1 % Nprime_) {
      cur = mod_pos(static_cast<long long>(cur) * 3, Nprime_);
      ++m;
    }
  }
  field_ = ff::FieldCtx::create(3, m);
  if (Nprime_ == 1) {
    omega_ = field_->one();
    if (root_choice != 0) throw error("mod3 reduction: root choice out of range");
  } else {
    auto fac = factorize_u64(static_cast<std::uint64_t>(Nprime_));
    Int cof = (field_->size() - 1) / Nprime_;
    ff::FFElem root0;
    bool found = false;
    for (Int rep = 2; rep < field_->size(); ++rep) {
      ff::FFElem cand = field_->from_rep(rep).pow(cof);
      if (ff::has_order_exactly(cand, Nprime_, fac)) {
        root0 = cand;
        found = true;
        break;
      }
    }
    if (!found) throw error("mod3 reduction: no primitive root found (unreachable)");
    // All primitive N'-th roots, ordered by integer representative; pick the
    // (root_choice+1)-th least.
    std::vector<ff::FFElem> prim;
    ff::FFElem cur = root0;
    for (long t = 1; t < Nprime_; ++t) {
      if (std::gcd(static_cast<long long>(t), static_cast<long long>(Nprime_)) == 1) prim.push_back(cur);
      cur = cur * root0;
    }
    auto coeff_less = [](const ff::FFElem& a, const ff::FFElem& b) {
      const auto& ca = a.coeffs();
      const auto& cb = b.coeffs();
      for (std::size_t i = ca.size(); i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
      }
      return false;
    };
    std::sort(prim.begin(), prim.end(), coeff_less);
    if (root_choice < 0 || root_choice >= static_cast<int>(prim.size())) {
      throw error("mod3 reduction: root choice out of range");
    }
    omega_ = prim[static_cast<std::size_t>(root_choice)];
  }
  // Images of zeta_{p^a}^j for each prime-power part of the conductor.
  for (const auto& part : ctx_->parts()) {
    std::vector<ff::FFElem> pows;
    ff::FFElem base;
    if (part.p == 3) {
      base = field_->one();  // ramified part collapses to 1
    } else {
      long cof = Nprime_ / part.pa;
      long u = static_cast<long>(invmod(static_cast<std::uint64_t>(cof % part.pa),
                                        static_cast<std::uint64_t>(part.pa)));
      base = omega_.pow(Int(cof) * u);
    }
    ff::FFElem cur = field_->one();
    for (long j = 0; j < part.pa; ++j) {
      pows.push_back(cur);
      cur = cur * base;
    }
    part_pow_.push_back(std::move(pows));
  }
}

ff::FFElem Mod3Reducer::reduce(const Cyclotomic& x) const {
  if (x.conductor() != N_) throw error("mod3 reduction: conductor mismatch");
  if (!x.is_integral()) throw error("mod3 reduction: value is not an algebraic integer");
  ff::FFElem acc = field_->zero();
  for (const auto& [t, c] : x.terms()) {
    Int num = boost::multiprecision::numerator(c) % 3;
    if (num < 0) num += 3;
    auto cm = static_cast<std::uint32_t>(num);
    if (cm == 0) continue;
    ff::FFElem term = field_->element({cm});
    std::vector<long> j = ctx_->components(t);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i] != 0) term = term * part_pow_[i][static_cast<std::size_t>(j[i])];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace triblock::cyc
