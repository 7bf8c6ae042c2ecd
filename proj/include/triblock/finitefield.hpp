#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "triblock/common.hpp"

namespace triblock::ff {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FFElem;

// Context for F_{p^k} = F_p[x]/(m(x)) with a deterministic modulus: the least
// monic irreducible of degree k, candidates ordered by the integer value
// sum(c_i * p^i) of their non-leading coefficients. Contexts are immutable and
// shareable; elements are tagged with their context and mixing contexts is an
// error, not a coercion.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
  static FieldPtr create(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  Int size() const;  // p^k

  // Monic modulus, coefficient list c_0..c_k (c_k = 1). For k == 1 this is
  // (0, 1), i.e. plain Z/p.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FFElem zero() const;
  FFElem one() const;
  // Element with coefficient vector given little-endian (c_0..c_{k-1}).
  FFElem element(std::vector<std::uint32_t> coeffs) const;
  // Element whose "integer representative" sum(c_i p^i) equals r (r < p^k).
  FFElem from_rep(const Int& r) const;

private:
  FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
};

class FFElem {
public:
  FFElem() = default;

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  // Integer representative sum(c_i p^i); gives the canonical total order.
  Int rep() const;

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem inverse() const;
  FFElem pow(Int e) const;

  bool operator==(const FFElem& o) const;
  bool operator!=(const FFElem& o) const { return !(*this == o); }

private:
  friend class FieldCtx;
  FFElem(FieldPtr ctx, std::vector<std::uint32_t> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}

  void check_same(const FFElem& o) const;

  FieldPtr ctx_;
  std::vector<std::uint32_t> c_;
};

// x^q in a context with p^k = q^2. Applying it twice is the identity.
FFElem frobenius(const FFElem& x, const Int& q);

// Least m >= 1 with x^m = 1, found by exhaustive powers (the fields this runs
// on are small); throws on x = 0 or if the search exceeds the given bound.
Int multiplicative_order(const FFElem& x, std::uint64_t step_bound = 1u << 22);

// True iff x^m = 1 and x^{m/p} != 1 for every prime p | m. Needs only the
// factorization of m, so it works in large fields.
bool has_order_exactly(const FFElem& x, const Int& m,
                       const std::vector<std::pair<std::uint64_t, int>>& m_factors);

}  // namespace triblock::ff
