#include "triblock/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace triblock::ct {

using cyc::Cyclotomic;

namespace {

std::string partition_name(const Partition& p, const char* suffix = "") {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "]" << suffix;
  return os.str();
}

long table_exponent(const std::vector<long>& orders) {
  long e = 1;
  for (long o : orders) e = std::lcm(e, o);
  return e;
}

std::vector<long> power_map_keys(long exponent) {
  std::vector<long> keys{-1};
  for (auto [p, a] : factorize_u64(static_cast<std::uint64_t>(exponent))) {
    (void)a;
    keys.push_back(static_cast<long>(p));
  }
  return keys;
}

// Exponent k' invertible mod e with k' = k mod o (k coprime to o, o | e):
// galois(k') then realizes zeta_o -> zeta_o^k on values lying in Q(zeta_o).
long coprime_lift(long k, long o, long e) {
  long kp = 0;
  long mod = 1;
  for (auto [p, a] : factorize_u64(static_cast<std::uint64_t>(e))) {
    long pa = 1;
    for (int i = 0; i < a; ++i) pa *= static_cast<long>(p);
    long target = (o % static_cast<long>(p) == 0) ? ((k % pa) + pa) % pa : 1 % pa;
    // CRT accumulate
    long m1 = mod, r1 = kp;
    long g = m1;  // gcd(m1, pa) = 1 since prime powers are distinct
    (void)g;
    // solve x = r1 (mod m1), x = target (mod pa)
    long inv = static_cast<long>(invmod(static_cast<std::uint64_t>(((m1 % pa) + pa) % pa),
                                        static_cast<std::uint64_t>(pa)));
    long diff = ((target - r1) % pa + pa) % pa;
    long tq = static_cast<long>((static_cast<long long>(diff) * inv) % pa);
    kp = r1 + m1 * tq;
    mod = m1 * pa;
    kp %= mod;
  }
  if (kp <= 0) kp += mod;
  return kp;
}

}  // namespace

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["order"] = order.str();
  j["exponent"] = exponent;
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : classes) {
    cls.push_back({{"name", c.name}, {"rep_order", c.rep_order}, {"size", c.size.str()}});
  }
  j["classes"] = cls;
  nlohmann::json pm = nlohmann::json::object();
  for (const auto& [k, v] : power_maps) pm[std::to_string(k)] = v;
  j["power_maps"] = pm;
  nlohmann::json irr = nlohmann::json::array();
  for (std::size_t i = 0; i < rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : values[i]) row.push_back(v.to_json());
    irr.push_back(row);
  }
  j["irreducibles"] = irr;
  return j;
}

// ---- symmetric groups ----

CharacterTable sn_table(int n) {
  if (n < 1 || n > 15) throw error("sn_table: n must be in 1..15");
  CharacterTable t;
  t.group = "sym(" + std::to_string(n) + ")";
  std::vector<Partition> parts = partitions(n);
  std::vector<long> orders;
  for (const auto& mu : parts) orders.push_back(lcm_parts(mu));
  t.exponent = table_exponent(orders);
  t.order = 1;
  for (int i = 2; i <= n; ++i) t.order *= i;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    t.classes.push_back(ClassDesc{partition_name(parts[j]), orders[j], class_size_sym(n, parts[j])});
    if (orders[j] == 1) t.identity_class = j;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    t.row_names.push_back(partition_name(parts[i]));
    std::vector<Cyclotomic> row;
    row.reserve(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      row.push_back(Cyclotomic::rational(Rat(sn_character_value(parts[i], parts[j])), t.exponent));
    }
    t.degrees.push_back(boost::multiprecision::numerator(row[t.identity_class].as_rational()));
    t.values.push_back(std::move(row));
    if (i == 0) t.trivial_row = 0;  // the row of (n) is the trivial character
  }
  for (long k : power_map_keys(t.exponent)) {
    std::vector<std::size_t> pm(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Partition target = power_type(parts[j], k);
      pm[j] = static_cast<std::size_t>(
          std::find(parts.begin(), parts.end(), target) - parts.begin());
    }
    t.power_maps[k] = std::move(pm);
  }
  return t;
}

// ---- alternating groups ----

namespace {

struct AnClass {
  Partition type;
  int half = 0;  // 0 for non-split, +1/-1 for the two halves of a split type
};

}  // namespace

CharacterTable an_table(int n) {
  if (n < 5 || n > 15) throw error("an_table: n must be in 5..15");
  CharacterTable t;
  t.group = "alt(" + std::to_string(n) + ")";
  t.order = 1;
  for (int i = 2; i <= n; ++i) t.order *= i;
  t.order /= 2;

  std::vector<Partition> all = partitions(n);
  std::vector<AnClass> cols;
  for (const auto& mu : all) {
    if (!is_even_type(n, mu)) continue;
    if (is_split_type(mu)) {
      cols.push_back(AnClass{mu, +1});
      cols.push_back(AnClass{mu, -1});
    } else {
      cols.push_back(AnClass{mu, 0});
    }
  }
  std::vector<long> orders;
  for (const auto& c : cols) orders.push_back(lcm_parts(c.type));
  t.exponent = table_exponent(orders);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Int size = class_size_sym(n, cols[j].type);
    if (cols[j].half != 0) size /= 2;
    const char* suffix = cols[j].half == 0 ? "" : (cols[j].half > 0 ? "+" : "-");
    t.classes.push_back(ClassDesc{partition_name(cols[j].type, suffix), orders[j], size});
    if (orders[j] == 1) t.identity_class = j;
  }

  for (const auto& lambda : all) {
    Partition conj = conjugate_partition(lambda);
    if (conj < lambda) continue;  // the conjugate partition restricts identically
    bool self_conj = (conj == lambda);
    if (!self_conj) {
      std::vector<Cyclotomic> row;
      for (const auto& c : cols) {
        row.push_back(Cyclotomic::rational(Rat(sn_character_value(lambda, c.type)), t.exponent));
      }
      t.row_names.push_back(partition_name(lambda));
      t.degrees.push_back(boost::multiprecision::numerator(row[t.identity_class].as_rational()));
      t.values.push_back(std::move(row));
      continue;
    }
    // self-conjugate: the restriction splits; values differ from chi/2 only on
    // the split class whose type is the diagonal hook multiset of lambda
    Partition hooks = diagonal_hooks(lambda);
    long long z = 1;
    for (int h : hooks) z *= h;
    int d = static_cast<int>(hooks.size());
    long long eps = ((n - d) / 2) % 2 == 0 ? 1 : -1;
    Cyclotomic delta = cyc::sqrt_integer(eps * z, t.exponent);
    Int x = sn_character_value(lambda, hooks);
    Cyclotomic base_plus = (Cyclotomic::rational(Rat(x), t.exponent) + delta).scaled(Rat(1, 2));
    Cyclotomic base_minus = (Cyclotomic::rational(Rat(x), t.exponent) - delta).scaled(Rat(1, 2));
    for (int which : {+1, -1}) {
      std::vector<Cyclotomic> row;
      for (const auto& c : cols) {
        if (c.type == hooks) {
          row.push_back(c.half == which ? base_plus : base_minus);
        } else {
          Rat v(sn_character_value(lambda, c.type));
          row.push_back(Cyclotomic::rational(v / 2, t.exponent));
        }
      }
      t.row_names.push_back(partition_name(lambda, which > 0 ? "+" : "-"));
      t.degrees.push_back(boost::multiprecision::numerator(row[t.identity_class].as_rational()));
      t.values.push_back(std::move(row));
    }
  }

  for (std::size_t i = 0; i < t.values.size(); ++i) {
    bool all_ones = true;
    for (const auto& v : t.values[i]) {
      if (v != Cyclotomic::rational(1, t.exponent)) all_ones = false;
    }
    if (all_ones) t.trivial_row = i;
  }

  // power maps: coprime exponents act like the Galois twist on columns;
  // non-coprime powers land in non-split types where cycle arithmetic decides
  for (long k : power_map_keys(t.exponent)) {
    std::vector<std::size_t> pm(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      long o = t.classes[j].rep_order;
      long kk = ((k % o) + o) % o;
      if (std::gcd(kk, o) != 1) {
        Partition target = power_type(cols[j].type, k);
        std::size_t hit = cols.size();
        for (std::size_t j2 = 0; j2 < cols.size(); ++j2) {
          if (cols[j2].type == target) {
            if (cols[j2].half != 0) throw error("an_table: power lands in a split type");
            hit = j2;
          }
        }
        if (hit == cols.size()) throw error("an_table: power type not found");
        pm[j] = hit;
        continue;
      }
      long ke = coprime_lift(((k % o) + o) % o, o, t.exponent);
      std::size_t hit = cols.size();
      for (std::size_t j2 = 0; j2 < cols.size(); ++j2) {
        if (cols[j2].type != cols[j].type) continue;
        bool match = true;
        for (std::size_t i = 0; i < t.values.size() && match; ++i) {
          if (t.values[i][j].galois(ke) != t.values[i][j2]) match = false;
        }
        if (match) {
          if (hit != cols.size()) throw error("an_table: ambiguous power map");
          hit = j2;
        }
      }
      if (hit == cols.size()) throw error("an_table: no matching class for power map");
      pm[j] = hit;
    }
    t.power_maps[k] = std::move(pm);
  }
  return t;
}

// ---- Dixon's method ----

namespace {

struct ModSpace {
  std::vector<std::vector<std::uint64_t>> basis;  // reduced column echelon
  std::vector<std::size_t> pivots;
};

void echelonize(ModSpace& s, std::uint64_t ell) {
  std::vector<std::vector<std::uint64_t>> vecs = std::move(s.basis);
  s.basis.clear();
  s.pivots.clear();
  for (auto& v : vecs) {
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
      std::uint64_t c = v[s.pivots[b]];
      if (c) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          v[i] = (v[i] + (ell - c) * s.basis[b][i]) % ell;
        }
      }
    }
    std::size_t p = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i]) {
        p = i;
        break;
      }
    }
    if (p == v.size()) continue;  // dependent
    std::uint64_t inv = invmod(v[p], ell);
    for (auto& c : v) c = c * inv % ell;
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
      std::uint64_t c = s.basis[b][p];
      if (c) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          s.basis[b][i] = (s.basis[b][i] + (ell - c) * v[i]) % ell;
        }
      }
    }
    s.basis.push_back(std::move(v));
    s.pivots.push_back(p);
  }
}

// characteristic polynomial mod ell (Faddeev-LeVerrier); index = power of x
std::vector<std::uint64_t> charpoly_mod(const std::vector<std::uint64_t>& R, std::size_t d,
                                        std::uint64_t ell) {
  std::vector<std::uint64_t> coeff(d + 1, 0);
  coeff[d] = 1;
  std::vector<std::uint64_t> M(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) M[i * d + i] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::uint64_t> next(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t m = 0; m < d; ++m) {
        std::uint64_t a = R[i * d + m];
        if (!a) continue;
        for (std::size_t j = 0; j < d; ++j) {
          next[i * d + j] = (next[i * d + j] + a * M[m * d + j]) % ell;
        }
      }
    }
    M = std::move(next);
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = (tr + M[i * d + i]) % ell;
    std::uint64_t c = mulmod(tr, invmod(k % ell, ell), ell);
    c = (ell - c) % ell;
    coeff[d - k] = c;
    for (std::size_t i = 0; i < d; ++i) M[i * d + i] = (M[i * d + i] + c) % ell;
  }
  return coeff;
}

std::vector<std::vector<std::uint64_t>> nullspace_mod(std::vector<std::uint64_t> A, std::size_t d,
                                                      std::uint64_t ell) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t sel = row;
    while (sel < d && A[sel * d + col] == 0) ++sel;
    if (sel == d) continue;
    for (std::size_t j = 0; j < d; ++j) std::swap(A[sel * d + j], A[row * d + j]);
    std::uint64_t inv = invmod(A[row * d + col], ell);
    for (std::size_t j = 0; j < d; ++j) A[row * d + j] = A[row * d + j] * inv % ell;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row) continue;
      std::uint64_t c = A[i * d + col];
      if (c) {
        for (std::size_t j = 0; j < d; ++j) {
          A[i * d + j] = (A[i * d + j] + (ell - c) * A[row * d + j]) % ell;
        }
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint64_t> v(d, 0);
    v[free_col] = 1;
    for (std::size_t rr = 0; rr < pivot_col.size(); ++rr) {
      v[pivot_col[rr]] = (ell - A[rr * d + free_col]) % ell;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CharacterTable dixon_table(const pg::PermGroup& G, const pg::ConjClasses& cc,
                           const std::string& name) {
  const std::size_t r = cc.count();
  CharacterTable t;
  t.group = name;
  t.order = cc.group_order();
  std::vector<long> orders;
  for (std::size_t i = 0; i < r; ++i) orders.push_back(cc.rep_order(i));
  t.exponent = table_exponent(orders);
  t.identity_class = cc.identity_class();
  {
    std::map<long, int> seen;
    for (std::size_t i = 0; i < r; ++i) {
      int idx = seen[orders[i]]++;
      std::string suffix(1, static_cast<char>('a' + idx % 26));
      if (idx >= 26) suffix += std::to_string(idx / 26);
      t.classes.push_back(ClassDesc{std::to_string(orders[i]) + suffix, orders[i], cc.sizes()[i]});
    }
  }

  // least prime ell = 1 (mod exponent) with ell > 2 ceil(sqrt(|G|))
  std::uint64_t ell = 0;
  {
    Int sq = boost::multiprecision::sqrt(t.order);
    while (sq * sq < t.order) ++sq;
    Int bound = 2 * sq;
    const auto e_u = static_cast<std::uint64_t>(t.exponent);
    for (std::uint64_t cand = e_u + 1;; cand += e_u) {
      if (Int(cand) > bound && is_prime_u64(cand)) {
        ell = cand;
        break;
      }
    }
  }
  // least primitive exponent-th root of unity mod ell
  std::uint64_t omega = 1;
  if (t.exponent > 1) {
    auto fac = factorize_u64(static_cast<std::uint64_t>(t.exponent));
    omega = 0;
    for (std::uint64_t cand = 2; cand < ell; ++cand) {
      if (powmod(cand, static_cast<std::uint64_t>(t.exponent), ell) != 1) continue;
      bool primitive = true;
      for (auto [p, a] : fac) {
        (void)a;
        if (powmod(cand, static_cast<std::uint64_t>(t.exponent) / p, ell) == 1) primitive = false;
      }
      if (primitive) {
        omega = cand;
        break;
      }
    }
    if (!omega) throw error("dixon: no primitive root found (unreachable)");
  }

  // class multiplication matrices M_i[j][k] = #{x in C_i : x^-1 g_k in C_j}
  std::vector<std::vector<std::uint64_t>> mats(r);
  auto get_mat = [&](std::size_t i) -> const std::vector<std::uint64_t>& {
    if (mats[i].empty()) {
      std::vector<std::uint64_t> m(r * r, 0);
      cc.enumerate_class(i, [&](const pg::Perm& x) {
        pg::Perm xi = x.inverse();
        for (std::size_t k = 0; k < r; ++k) {
          std::size_t j = cc.class_of(xi.then(cc.reps()[k]));
          m[j * r + k] = (m[j * r + k] + 1) % ell;
        }
      });
      mats[i] = std::move(m);
    }
    return mats[i];
  };

  std::vector<ModSpace> spaces;
  {
    ModSpace full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::uint64_t> e(r, 0);
      e[i] = 1;
      full.basis.push_back(std::move(e));
      full.pivots.push_back(i);
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (i == t.identity_class) continue;
    bool all_one = true;
    for (const auto& s : spaces) {
      if (s.basis.size() > 1) all_one = false;
    }
    if (all_one) break;
    const auto& M = get_mat(i);
    std::vector<ModSpace> next;
    for (auto& sp : spaces) {
      std::size_t d = sp.basis.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      std::vector<std::uint64_t> R(d * d, 0);
      for (std::size_t tcol = 0; tcol < d; ++tcol) {
        std::vector<std::uint64_t> w(r, 0);
        for (std::size_t row = 0; row < r; ++row) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            acc = (acc + M[row * r + k] * sp.basis[tcol][k]) % ell;
          }
          w[row] = acc;
        }
        for (std::size_t s = 0; s < d; ++s) R[s * d + tcol] = w[sp.pivots[s]];
        for (std::size_t row = 0; row < r; ++row) {
          std::uint64_t acc = 0;
          for (std::size_t s = 0; s < d; ++s) {
            acc = (acc + R[s * d + tcol] * sp.basis[s][row]) % ell;
          }
          if (acc != w[row]) throw error("dixon: eigenspace is not invariant");
        }
      }
      auto poly = charpoly_mod(R, d, ell);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t lam = 0; lam < ell; ++lam) {
        std::uint64_t acc = 0;
        for (std::size_t deg = poly.size(); deg-- > 0;) acc = (acc * lam + poly[deg]) % ell;
        if (acc == 0) roots.push_back(lam);
      }
      if (roots.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      std::size_t found = 0;
      for (std::uint64_t lam : roots) {
        std::vector<std::uint64_t> shifted = R;
        for (std::size_t s = 0; s < d; ++s) {
          shifted[s * d + s] = (shifted[s * d + s] + ell - lam) % ell;
        }
        ModSpace child;
        for (const auto& nv : nullspace_mod(shifted, d, ell)) {
          std::vector<std::uint64_t> ambient(r, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (!nv[s]) continue;
            for (std::size_t k = 0; k < r; ++k) {
              ambient[k] = (ambient[k] + nv[s] * sp.basis[s][k]) % ell;
            }
          }
          child.basis.push_back(std::move(ambient));
        }
        echelonize(child, ell);
        found += child.basis.size();
        if (!child.basis.empty()) next.push_back(std::move(child));
      }
      if (found != d) throw error("dixon: eigenspace splitting lost dimensions");
    }
    spaces = std::move(next);
  }
  for (const auto& sp : spaces) {
    if (sp.basis.size() != 1) throw error("dixon: eigenspaces failed to split to dimension one");
  }

  auto inv_classes = cc.power_map(-1);
  auto order_mod = static_cast<std::uint64_t>(t.order % ell);
  std::vector<std::uint64_t> size_inv(r);
  for (std::size_t j = 0; j < r; ++j) {
    size_inv[j] = invmod(static_cast<std::uint64_t>(cc.sizes()[j] % ell), ell);
  }
  std::vector<std::vector<std::size_t>> rep_power_class(r);
  for (std::size_t j = 0; j < r; ++j) {
    long o = cc.rep_order(j);
    pg::Perm cur = pg::Perm::identity(G.degree());
    for (long tt = 0; tt < o; ++tt) {
      rep_power_class[j].push_back(cc.class_of(cur));
      cur = cur.then(cc.reps()[j]);
    }
  }

  struct Row {
    Int degree;
    std::vector<Cyclotomic> vals;
  };
  std::vector<Row> rows;
  for (const auto& sp : spaces) {
    std::vector<std::uint64_t> u = sp.basis[0];
    if (u[t.identity_class] == 0) throw error("dixon: eigenvector vanishes at the identity");
    std::uint64_t scale = invmod(u[t.identity_class], ell);
    for (auto& c : u) c = c * scale % ell;
    std::uint64_t T = 0;
    for (std::size_t j = 0; j < r; ++j) {
      T = (T + mulmod(mulmod(u[j], u[inv_classes[j]], ell), size_inv[j], ell)) % ell;
    }
    std::uint64_t deg_sq = mulmod(order_mod, invmod(T, ell), ell);
    Int degree = 0;
    for (Int d = 1; d * d <= t.order; ++d) {
      auto dm = static_cast<std::uint64_t>(d % ell);
      if (mulmod(dm, dm, ell) == deg_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw error("dixon: no integer degree matches");
    auto deg_mod = static_cast<std::uint64_t>(degree % ell);
    std::vector<std::uint64_t> chi(r);
    for (std::size_t j = 0; j < r; ++j) {
      chi[j] = mulmod(mulmod(deg_mod, u[j], ell), size_inv[j], ell);
    }
    // exact lift: chi(g) = sum_s c_s zeta_o^s, the c_s being eigenvalue
    // multiplicities recovered by inverse Fourier transform mod ell
    std::vector<Cyclotomic> vals;
    for (std::size_t j = 0; j < r; ++j) {
      long o = cc.rep_order(j);
      std::uint64_t omega_o = powmod(omega, static_cast<std::uint64_t>(t.exponent / o), ell);
      std::uint64_t inv_o = invmod(static_cast<std::uint64_t>(o) % ell, ell);
      Cyclotomic val = Cyclotomic::zero(t.exponent);
      Int csum = 0;
      for (long s = 0; s < o; ++s) {
        std::uint64_t acc = 0;
        for (long tt = 0; tt < o; ++tt) {
          auto expn = static_cast<long>((static_cast<long long>(s) * tt) % o);
          std::uint64_t w = powmod(omega_o, static_cast<std::uint64_t>((o - expn) % o), ell);
          acc = (acc + mulmod(chi[rep_power_class[j][static_cast<std::size_t>(tt)]], w, ell)) % ell;
        }
        std::uint64_t cs = mulmod(acc, inv_o, ell);
        csum += cs;
        if (cs) val = val + Cyclotomic::root_pow(t.exponent, o, s).scaled(Rat(cs));
      }
      if (csum != degree) throw error("dixon: eigenvalue multiplicities do not sum to the degree");
      vals.push_back(std::move(val));
    }
    rows.push_back(Row{degree, std::move(vals)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t j = 0; j < a.vals.size(); ++j) {
      int c = Cyclotomic::cmp(a.vals[j], b.vals[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.row_names.push_back("X" + std::to_string(i + 1));
    t.degrees.push_back(rows[i].degree);
    t.values.push_back(std::move(rows[i].vals));
    bool all_ones = true;
    for (const auto& v : t.values.back()) {
      if (v != Cyclotomic::rational(1, t.exponent)) all_ones = false;
    }
    if (all_ones) t.trivial_row = i;
  }
  for (long k : power_map_keys(t.exponent)) t.power_maps[k] = cc.power_map(k);
  return t;
}

CharacterTable dixon_table(const pg::PermGroup& G, const std::string& name, const Int& max_order) {
  pg::ConjClasses cc = pg::conjugacy_classes(G, max_order);
  return dixon_table(G, cc, name);
}

// ---- validation ----

std::vector<std::string> validate(const CharacterTable& t) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) { bad.push_back(msg); };
  const long e = t.exponent;
  const std::size_t r = t.rows();
  if (r != t.cols()) complain("row count differs from class count");
  Int sumsq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    sumsq += t.degrees[i] * t.degrees[i];
    if (t.order % t.degrees[i] != 0) {
      complain("degree of row " + std::to_string(i) + " does not divide the group order");
    }
    if (t.values[i][t.identity_class] != cyc::Cyclotomic::rational(Rat(t.degrees[i]), e)) {
      complain("row " + std::to_string(i) + " degree mismatch at the identity class");
    }
  }
  if (sumsq != t.order) complain("sum of squared degrees is not the group order");
  {
    bool all_ones = true;
    for (const auto& v : t.values[t.trivial_row]) {
      if (v != cyc::Cyclotomic::rational(1, e)) all_ones = false;
    }
    if (!all_ones) complain("trivial row is not identically one");
  }
  Int size_total = 0;
  for (const auto& c : t.classes) size_total += c.size;
  if (size_total != t.order) complain("class sizes do not sum to the group order");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t i2 = i; i2 < r; ++i2) {
      cyc::Cyclotomic acc = cyc::Cyclotomic::zero(e);
      for (std::size_t j = 0; j < t.cols(); ++j) {
        acc = acc + (t.values[i][j] * t.values[i2][j].conjugate()).scaled(Rat(t.classes[j].size));
      }
      cyc::Cyclotomic want =
          i == i2 ? cyc::Cyclotomic::rational(Rat(t.order), e) : cyc::Cyclotomic::zero(e);
      if (acc != want) {
        complain("row orthogonality fails for rows " + std::to_string(i) + "," + std::to_string(i2));
      }
    }
  }
  for (std::size_t j = 0; j < t.cols(); ++j) {
    for (std::size_t j2 = j; j2 < t.cols(); ++j2) {
      cyc::Cyclotomic acc = cyc::Cyclotomic::zero(e);
      for (std::size_t i = 0; i < r; ++i) {
        acc = acc + t.values[i][j] * t.values[i][j2].conjugate();
      }
      cyc::Cyclotomic want = j == j2
                                 ? cyc::Cyclotomic::rational(Rat(t.order, t.classes[j].size), e)
                                 : cyc::Cyclotomic::zero(e);
      if (acc != want) {
        complain("column orthogonality fails for classes " + std::to_string(j) + "," +
                 std::to_string(j2));
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      cyc::Cyclotomic w = t.values[i][j].scaled(Rat(t.classes[j].size, t.degrees[i]));
      if (!w.is_integral()) {
        complain("central character not integral at row " + std::to_string(i) + ", class " +
                 std::to_string(j));
      }
    }
  }
  return bad;
}

}  // namespace triblock::ct
