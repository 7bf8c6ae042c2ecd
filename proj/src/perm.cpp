#include "triblock/perm.hpp"

#include <algorithm>
#include <numeric>

namespace triblock::pg {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) throw error("permutation images are not a bijection");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || to < 0 || from >= static_cast<int>(n) || to >= static_cast<int>(n)) {
        throw error("cycle point out of range");
      }
      p.img_[static_cast<std::size_t>(from)] = static_cast<Point>(to);
    }
  }
  // validate
  return Perm(std::move(p.img_));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Perm Perm::then(const Perm& o) const {
  if (degree() != o.degree()) throw error("permutation degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (degree() != g.degree()) throw error("permutation degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

Perm Perm::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Perm r = identity(degree());
  Perm base = *this;
  while (k) {
    if (k & 1) r = r.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return r;
}

Int Perm::order() const {
  Int o = 1;
  for (int len : cycle_type()) o = boost::multiprecision::lcm(o, Int(len));
  return o;
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cyc;
    Point p = static_cast<Point>(start);
    do {
      seen[p] = true;
      cyc.push_back(p);
      p = img_[p];
    } while (p != start);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  for (const auto& cyc : cycles(true)) type.push_back(static_cast<int>(cyc.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace triblock::pg
