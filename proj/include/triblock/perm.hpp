#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "triblock/common.hpp"

namespace triblock::pg {

// Points are 0-based; degrees stay well below 2^16 (builders cap at 5000).
using Point = std::uint16_t;

// Immutable permutation on {0..n-1}. Products are written left-to-right:
// a.then(b) applies a first, so (a.then(b))(x) = b(a(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t n);
  // 0-based cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm then(const Perm& o) const;
  Perm inverse() const;
  // g^{-1} * this * g (in left-to-right product order), i.e. relabel by g.
  Perm conjugated_by(const Perm& g) const;
  Perm pow(long long k) const;

  Int order() const;
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  // Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  Fingerprint fingerprint() const { return fingerprint_span(img_.data(), img_.size()); }

  bool operator==(const Perm& o) const = default;
  auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

private:
  std::vector<Point> img_;
};

}  // namespace triblock::pg
