// Regenerates data/j1.gens: the smallest faithful projective-point action of
// the sporadic group J1, computed from Janko's 7x7 matrix generators over
// F_11. The group order is verified against 175560 before anything is
// written, so a corrupt matrix cannot produce a file.
//
// Usage: make_j1_gens <output-path>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <vector>

#include "triblock/permgroup.hpp"

using namespace triblock;
using namespace triblock::pg;

namespace {

constexpr int P = 11;
constexpr int DIM = 7;
using Vec = std::array<int, DIM>;
using Matrix = std::array<std::array<int, DIM>, DIM>;

int mod(int v) { return ((v % P) + P) % P; }

Vec mat_apply(const Matrix& m, const Vec& v) {
  Vec w{};
  for (int i = 0; i < DIM; ++i) {
    int acc = 0;
    for (int j = 0; j < DIM; ++j) acc += m[i][j] * v[j];
    w[i] = mod(acc);
  }
  return w;
}

int inv_mod(int a) {
  for (int x = 1; x < P; ++x) {
    if (a * x % P == 1) return x;
  }
  return 0;
}

std::uint64_t encode(const Vec& v) {
  std::uint64_t idx = 0;
  for (int i = 0; i < DIM; ++i) idx = idx * P + static_cast<std::uint64_t>(v[i]);
  return idx;
}

Vec decode(std::uint64_t idx) {
  Vec v{};
  for (int i = DIM - 1; i >= 0; --i) {
    v[i] = static_cast<int>(idx % P);
    idx /= P;
  }
  return v;
}

// scale so the first nonzero coordinate is 1
Vec normalize(Vec v) {
  int lead = 0;
  while (lead < DIM && v[lead] == 0) ++lead;
  int s = inv_mod(v[lead]);
  for (int i = 0; i < DIM; ++i) v[i] = mod(v[i] * s);
  return v;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix r{};
  for (int i = 0; i < DIM; ++i) {
    for (int j = 0; j < DIM; ++j) {
      int acc = 0;
      for (int k = 0; k < DIM; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = mod(acc);
    }
  }
  return r;
}

bool is_identity(const Matrix& m) {
  for (int i = 0; i < DIM; ++i) {
    for (int j = 0; j < DIM; ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/j1.gens";

  // Janko's generators: Y the 7-cycle permutation matrix, Z the bordered
  // circulant below (entries mod 11).
  Matrix Y{};
  for (int i = 0; i < DIM; ++i) Y[(i + 1) % DIM][i] = 1;
  const int zrows[DIM][DIM] = {
      {-3, +2, -1, -1, -3, -1, -3},
      {-2, +1, +1, +3, +1, +3, +3},
      {-1, -1, -3, -1, -3, -3, +2},
      {-1, -3, -1, -3, -3, +2, -1},
      {-3, -1, -3, -3, +2, -1, -1},
      {+1, +3, +3, -2, +1, +1, +3},
      {+3, +3, -2, +1, +1, +3, +1},
  };
  Matrix Z{};
  for (int i = 0; i < DIM; ++i) {
    for (int j = 0; j < DIM; ++j) Z[i][j] = mod(zrows[i][j]);
  }

  {
    Matrix y7 = Y;
    for (int i = 1; i < 7; ++i) y7 = mat_mul(y7, Y);
    Matrix z5 = Z;
    for (int i = 1; i < 5; ++i) z5 = mat_mul(z5, Z);
    std::cout << "Y^7 = I: " << is_identity(y7) << ", Z^5 = I: " << is_identity(z5) << "\n";
  }

  // Partition the projective points into orbits and find the smallest one.
  std::uint64_t total = 1;
  for (int i = 0; i < DIM; ++i) total *= P;
  std::vector<std::int32_t> orbit_id(total, -1);
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec v = decode(idx);
    int lead = 0;
    while (lead < DIM && v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;  // not a normalized representative
    if (orbit_id[idx] >= 0) continue;
    std::vector<std::uint64_t> orbit{idx};
    orbit_id[idx] = static_cast<std::int32_t>(orbits.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      Vec cur = decode(orbit[head]);
      for (const Matrix* m : {&Y, &Z}) {
        std::uint64_t w = encode(normalize(mat_apply(*m, cur)));
        if (orbit_id[w] < 0) {
          orbit_id[w] = static_cast<std::int32_t>(orbits.size());
          orbit.push_back(w);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < orbits.size(); ++i) {
    if (orbits[i].size() < orbits[best].size()) best = i;
  }
  std::cout << "projective orbits: " << orbits.size() << ", sizes:";
  for (const auto& o : orbits) std::cout << " " << o.size();
  std::cout << "\n";

  std::vector<std::uint64_t> pts = orbits[best];
  std::sort(pts.begin(), pts.end());
  std::unordered_map<std::uint64_t, Point> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<Point>(i);

  auto perm_of = [&](const Matrix& m) {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      img[i] = index.at(encode(normalize(mat_apply(m, decode(pts[i])))));
    }
    return Perm(std::move(img));
  };
  Perm py = perm_of(Y), pz = perm_of(Z);
  PermGroup g(pts.size(), {py, pz});
  std::cout << "orbit " << pts.size() << " -> group order " << g.order() << "\n";
  if (g.order() != 175560) {
    std::cerr << "order is not |J1| = 175560; refusing to write output\n";
    return 1;
  }

  std::ofstream out(out_path);
  out << "# Janko group J1 acting on an orbit of projective points of F_11^7,\n";
  out << "# computed from the 7x7 matrix generators (tools/make_j1_gens.cpp).\n";
  out << "name J1\n";
  out << "degree " << pts.size() << "\n";
  for (const Perm* p : {&py, &pz}) {
    for (std::size_t i = 0; i < p->degree(); ++i) out << (i ? " " : "") << (*p)(static_cast<Point>(i));
    out << "\n";
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}
