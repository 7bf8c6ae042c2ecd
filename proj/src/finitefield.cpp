#include "triblock/finitefield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace triblock::ff {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian, no trailing zeros required

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

// a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const int dm = deg(m);
  while (deg(a) >= dm) {
    std::uint64_t c = a.back();
    int shift = deg(a) - dm;
    for (int i = 0; i <= dm; ++i) {
      std::uint64_t sub = c * m[i] % p;
      std::uint64_t cur = a[i + shift];
      a[i + shift] = static_cast<std::uint32_t>((cur + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b (b not necessarily monic; scale)
    std::uint64_t lead_inv = invmod(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = static_cast<std::uint32_t>(c * lead_inv % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t lead_inv = invmod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * lead_inv % p);
  }
  return a;
}

// x^(p^i) mod m by repeated p-th powering of the previous step.
Poly frobenius_power(const Poly& m, std::uint64_t p, unsigned i) {
  Poly x = {0, 1};
  Poly cur = poly_mod(x, m, p);
  for (unsigned step = 0; step < i; ++step) {
    // cur <- cur^p mod m, square-and-multiply on exponent p
    Poly r = {1};
    Poly base = cur;
    std::uint64_t e = p;
    while (e) {
      if (e & 1u) r = poly_mulmod(r, base, m, p);
      base = poly_mulmod(base, base, m, p);
      e >>= 1u;
    }
    cur = std::move(r);
  }
  return cur;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(deg(m));
  if (k == 0) return false;
  if (k == 1) return true;
  // Rabin: x^(p^k) == x mod m, and gcd(x^(p^(k/t)) - x, m) == 1 for primes t | k.
  Poly x = {0, 1};
  Poly xk = frobenius_power(m, p, k);
  Poly diff = xk;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
  trim(diff);
  if (!diff.empty()) return false;
  for (auto [t, e] : factorize_u64(k)) {
    (void)e;
    Poly xt = frobenius_power(m, p, k / static_cast<unsigned>(t));
    Poly d = xt;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
    trim(d);
    Poly g = poly_gcd(d, m, p);
    if (deg(g) != 0) return false;
  }
  return true;
}

Poly least_irreducible(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};
  // Enumerate tails c_0..c_{k-1} by increasing integer value sum(c_i p^i).
  Poly m(k + 1, 0);
  m[k] = 1;
  for (;;) {
    // increment the tail as a base-p counter
    std::size_t i = 0;
    while (i < k) {
      if (++m[i] < p) break;
      m[i] = 0;
      ++i;
    }
    if (i == k) throw error("no irreducible polynomial found (unreachable)");
    if (m[0] == 0) continue;  // divisible by x
    if (is_irreducible(m, p)) return m;
  }
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {}

FieldPtr FieldCtx::create(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) throw error("field_create: p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw error("field_create: extension degree must be >= 1");
  if (k > 512) throw error("field_create: extension degree too large");
  // One shared context per (p, k): the modulus is deterministic, and sharing
  // lets elements from independent call sites interoperate.
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr ctx(new FieldCtx(p, k, least_irreducible(p, k)));
  cache.emplace(key, ctx);
  return ctx;
}

Int FieldCtx::size() const { return int_pow(Int(p_), k_); }

FFElem FieldCtx::zero() const { return FFElem(shared_from_this(), std::vector<std::uint32_t>(k_, 0)); }

FFElem FieldCtx::one() const {
  std::vector<std::uint32_t> c(k_, 0);
  c[0] = p_ > 1 ? 1 : 0;
  return FFElem(shared_from_this(), std::move(c));
}

FFElem FieldCtx::element(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw error("element: too many coefficients");
  coeffs.resize(k_, 0);
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(c % p_);
  return FFElem(shared_from_this(), std::move(coeffs));
}

FFElem FieldCtx::from_rep(const Int& r) const {
  if (r < 0 || r >= size()) throw error("from_rep: representative out of range");
  std::vector<std::uint32_t> c(k_, 0);
  Int v = r;
  for (unsigned i = 0; i < k_ && v != 0; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return FFElem(shared_from_this(), std::move(c));
}

bool FFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FFElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

Int FFElem::rep() const {
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= ctx_->p();
    r += c_[i];
  }
  return r;
}

void FFElem::check_same(const FFElem& o) const {
  if (!ctx_ || !o.ctx_) throw error("uninitialized field element");
  if (ctx_ != o.ctx_) throw error("field elements from different contexts");
}

FFElem FFElem::operator+(const FFElem& o) const {
  check_same(o);
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c_[i]) + o.c_[i]) % ctx_->p());
  }
  return FFElem(ctx_, std::move(r));
}

FFElem FFElem::operator-(const FFElem& o) const {
  check_same(o);
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c_[i]) + ctx_->p() - o.c_[i]) % ctx_->p());
  }
  return FFElem(ctx_, std::move(r));
}

FFElem FFElem::operator-() const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r[i] = static_cast<std::uint32_t>((ctx_->p() - c_[i]) % ctx_->p());
  }
  return FFElem(ctx_, std::move(r));
}

FFElem FFElem::operator*(const FFElem& o) const {
  check_same(o);
  Poly prod = poly_mul(c_, o.c_, ctx_->p());
  Poly red = poly_mod(std::move(prod), ctx_->modulus(), ctx_->p());
  red.resize(ctx_->k(), 0);
  return FFElem(ctx_, std::move(red));
}

FFElem FFElem::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  FFElem r = ctx_->one();
  FFElem base = *this;
  while (e != 0) {
    if ((e & 1) != 0) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw error("inverse of zero");
  // x^(p^k - 2)
  return pow(ctx_->size() - 2);
}

bool FFElem::operator==(const FFElem& o) const {
  if (ctx_ != o.ctx_) return false;
  return c_ == o.c_;
}

FFElem frobenius(const FFElem& x, const Int& q) {
  if (!x.ctx()) throw error("frobenius: uninitialized element");
  if (x.ctx()->size() != q * q) throw error("frobenius: context size is not q^2");
  return x.pow(q);
}

Int multiplicative_order(const FFElem& x, std::uint64_t step_bound) {
  if (x.is_zero()) throw error("multiplicative_order of zero");
  FFElem cur = x;
  Int m = 1;
  while (!cur.is_one()) {
    cur = cur * x;
    ++m;
    if (m > static_cast<long long>(step_bound)) {
      throw error("multiplicative_order: field too large for exhaustive search");
    }
  }
  return m;
}

bool has_order_exactly(const FFElem& x, const Int& m,
                       const std::vector<std::pair<std::uint64_t, int>>& m_factors) {
  if (x.is_zero()) return false;
  if (!x.pow(m).is_one()) return false;
  for (auto [p, e] : m_factors) {
    (void)e;
    if (x.pow(m / p).is_one()) return false;
  }
  return true;
}

}  // namespace triblock::ff
