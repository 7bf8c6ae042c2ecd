#include "triblock/groups.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "triblock/finitefield.hpp"

namespace triblock::zoo {

using pg::Perm;
using pg::PermGroup;
using pg::Point;

namespace {

constexpr std::size_t kMaxDegree = 5000;
constexpr std::size_t kMaxInternalDegree = 60000;

// ---- prime power decomposition ----

struct PrimePower {
  std::uint64_t p;
  unsigned e;
};

PrimePower prime_power(long long q) {
  if (q < 2) throw error("q must be a prime power >= 2");
  auto fac = factorize_u64(static_cast<std::uint64_t>(q));
  if (fac.size() != 1) throw error("q = " + std::to_string(q) + " is not a prime power");
  return {fac[0].first, static_cast<unsigned>(fac[0].second)};
}

// ---- matrices over a finite field ----

struct Mat {
  int n = 0;
  std::vector<ff::FFElem> a;

  static Mat identity(const ff::FieldPtr& F, int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, F->zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
  }
  ff::FFElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const ff::FFElem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  r.a.reserve(static_cast<std::size_t>(x.n) * x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      ff::FFElem acc = x.at(i, 0) * y.at(0, j);
      for (int k = 1; k < x.n; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      r.a.push_back(acc);
    }
  }
  return r;
}

bool is_unitary(const Mat& m, const ff::FieldPtr& F, long long q) {
  // conjugate-transpose times m equals the identity (Hermitian form = I)
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      ff::FFElem acc = F->zero();
      for (int k = 0; k < m.n; ++k) acc = acc + m.at(k, i).pow(q) * m.at(k, j);
      if (i == j ? !acc.is_one() : !acc.is_zero()) return false;
    }
  }
  return true;
}

// Alternating form with hyperbolic pairs on adjacent coordinates (2i, 2i+1).
ff::FFElem symplectic_form(const ff::FieldPtr& F, const std::vector<ff::FFElem>& x,
                           const std::vector<ff::FFElem>& y) {
  ff::FFElem acc = F->zero();
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    acc = acc + x[i] * y[i + 1] - x[i + 1] * y[i];
  }
  return acc;
}

bool is_symplectic(const Mat& m, const ff::FieldPtr& F) {
  std::vector<ff::FFElem> col_i(static_cast<std::size_t>(m.n), F->zero());
  std::vector<ff::FFElem> col_j(static_cast<std::size_t>(m.n), F->zero());
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      for (int k = 0; k < m.n; ++k) {
        col_i[static_cast<std::size_t>(k)] = m.at(k, i);
        col_j[static_cast<std::size_t>(k)] = m.at(k, j);
      }
      ff::FFElem want = F->zero();
      if (j == i + 1 && i % 2 == 0) want = F->one();
      if (j == i - 1 && j % 2 == 0) want = -F->one();
      if (symplectic_form(F, col_i, col_j) != want) return false;
    }
  }
  return true;
}

// ---- canonical elements of given multiplicative order ----

// Least element (by integer representative) of multiplicative order exactly d.
ff::FFElem elem_of_order(const ff::FieldPtr& F, std::uint64_t d) {
  auto fac = factorize_u64(d);
  for (Int rep = 1; rep < F->size(); ++rep) {
    ff::FFElem x = F->from_rep(rep);
    if (ff::has_order_exactly(x, Int(d), fac)) return x;
  }
  throw error("no element of order " + std::to_string(d));
}

// Least element of order exactly d inside the norm-one torus C_{q+1} of
// F_{q^2}; requires d | q+1.
ff::FFElem torus_elem_of_order(const ff::FieldPtr& Fq2, long long q, std::uint64_t d) {
  auto fac = factorize_u64(d);
  for (Int rep = 1; rep < Fq2->size(); ++rep) {
    ff::FFElem x = Fq2->from_rep(rep);
    if (!x.pow(q + 1).is_one()) continue;
    if (ff::has_order_exactly(x, Int(d), fac)) return x;
  }
  throw error("no torus element of order " + std::to_string(d));
}

// ---- vector / projective actions ----

struct VectorCodec {
  ff::FieldPtr F;
  int dim = 0;
  std::uint64_t Q = 0;
  std::uint64_t total = 0;  // Q^dim

  VectorCodec(ff::FieldPtr field, int n) : F(std::move(field)), dim(n) {
    Q = static_cast<std::uint64_t>(F->size());
    total = 1;
    for (int i = 0; i < dim; ++i) {
      total *= Q;
      if (total - 1 > kMaxInternalDegree) throw error("vector action degree exceeds internal bound");
    }
  }

  // big-endian: lexicographic order on coordinate tuples = numeric order
  std::uint64_t encode(const std::vector<ff::FFElem>& v) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < dim; ++i) {
      idx = idx * Q + static_cast<std::uint64_t>(v[static_cast<std::size_t>(i)].rep());
    }
    return idx;
  }
  std::vector<ff::FFElem> decode(std::uint64_t idx) const {
    std::vector<ff::FFElem> v(static_cast<std::size_t>(dim), F->zero());
    for (int i = dim - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = F->from_rep(Int(idx % Q));
      idx /= Q;
    }
    return v;
  }
  std::vector<ff::FFElem> apply(const Mat& m, const std::vector<ff::FFElem>& v) const {
    std::vector<ff::FFElem> w(static_cast<std::size_t>(dim), F->zero());
    for (int i = 0; i < dim; ++i) {
      ff::FFElem acc = F->zero();
      for (int j = 0; j < dim; ++j) acc = acc + m.at(i, j) * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = acc;
    }
    return w;
  }
};

// Action on nonzero vectors, points in lexicographic order.
Perm perm_on_vectors(const Mat& m, const VectorCodec& codec) {
  std::vector<Point> img(codec.total - 1);
  for (std::uint64_t idx = 1; idx < codec.total; ++idx) {
    std::uint64_t w = codec.encode(codec.apply(m, codec.decode(idx)));
    img[idx - 1] = static_cast<Point>(w - 1);
  }
  return Perm(std::move(img));
}

// Projective points: normalized representatives (first nonzero coordinate 1)
// in lexicographic order.
struct ProjCodec {
  const VectorCodec& vec;
  std::vector<std::uint64_t> reps;                      // encoded normalized reps
  std::unordered_map<std::uint64_t, Point> index_of;    // encoded rep -> point

  explicit ProjCodec(const VectorCodec& v) : vec(v) {
    for (std::uint64_t idx = 1; idx < vec.total; ++idx) {
      auto w = vec.decode(idx);
      std::size_t lead = 0;
      while (lead < w.size() && w[lead].is_zero()) ++lead;
      if (w[lead].is_one()) {
        index_of.emplace(idx, static_cast<Point>(reps.size()));
        reps.push_back(idx);
      }
    }
  }

  std::uint64_t normalize(std::vector<ff::FFElem> w) const {
    std::size_t lead = 0;
    while (lead < w.size() && w[lead].is_zero()) ++lead;
    ff::FFElem inv = w[lead].inverse();
    for (auto& c : w) c = c * inv;
    return vec.encode(w);
  }
};

Perm project_perm(const Perm& vector_perm, const ProjCodec& proj) {
  std::vector<Point> img(proj.reps.size());
  for (std::size_t i = 0; i < proj.reps.size(); ++i) {
    std::uint64_t image_vec = static_cast<std::uint64_t>(vector_perm(static_cast<Point>(proj.reps[i] - 1))) + 1;
    img[i] = proj.index_of.at(proj.normalize(proj.vec.decode(image_vec)));
  }
  return Perm(std::move(img));
}

// ---- generator sets for the matrix families ----

Mat perm_matrix(const ff::FieldPtr& F, int n, const std::vector<int>& cycle) {
  Mat m = Mat::identity(F, n);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int from = cycle[i];
    int to = cycle[(i + 1) % cycle.size()];
    m.at(from, from) = F->zero();
    m.at(to, from) = F->one();
  }
  return m;
}

Mat transvection(const ff::FieldPtr& F, int n, int i, int j, const ff::FFElem& lambda) {
  Mat m = Mat::identity(F, n);
  m.at(i, j) = lambda;
  return m;
}

Mat diag_single(const ff::FieldPtr& F, int n, int pos, const ff::FFElem& value) {
  Mat m = Mat::identity(F, n);
  m.at(pos, pos) = value;
  return m;
}

std::vector<Mat> gl_gens(const ff::FieldPtr& F, int n, long long q, unsigned e) {
  ff::FFElem gamma = elem_of_order(F, static_cast<std::uint64_t>(q - 1));
  std::vector<Mat> gens;
  if (q > 2) gens.push_back(diag_single(F, n, 0, gamma));
  if (n >= 2) {
    gens.push_back(transvection(F, n, 0, 1, F->one()));
    gens.push_back(perm_matrix(F, n, {0, 1}));
    if (n >= 3) {
      std::vector<int> cyc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
      gens.push_back(perm_matrix(F, n, cyc));
    }
    // extension fields: transvection entries spanning F_q over F_p
    ff::FFElem pw = gamma;
    for (unsigned k = 1; k < e; ++k) {
      gens.push_back(transvection(F, n, 0, 1, pw));
      pw = pw * gamma;
    }
  }
  if (gens.empty()) gens.push_back(Mat::identity(F, n));
  return gens;
}

std::vector<Mat> sl_gens(const ff::FieldPtr& F, int n, long long q, unsigned e) {
  std::vector<Mat> gens;
  if (n < 2) {
    gens.push_back(Mat::identity(F, n));
    return gens;
  }
  ff::FFElem gamma = elem_of_order(F, static_cast<std::uint64_t>(q - 1));
  ff::FFElem pw = F->one();
  for (unsigned k = 0; k < e; ++k) {
    gens.push_back(transvection(F, n, 0, 1, pw));
    gens.push_back(transvection(F, n, 1, 0, pw));
    pw = pw * gamma;
  }
  for (int i = 0; i + 2 < n; ++i) gens.push_back(perm_matrix(F, n, {i, i + 1, i + 2}));
  return gens;
}

// Pseudo-reflection fixing the hyperplane orthogonal to an anisotropic v and
// scaling v by eta (an element of the norm-one torus):
//   R = I - (1 - eta) v conj(v)^T / <v, v>
Mat unitary_reflection(const ff::FieldPtr& Fq2, long long q, const std::vector<ff::FFElem>& v,
                       const ff::FFElem& eta) {
  int n = static_cast<int>(v.size());
  ff::FFElem norm = Fq2->zero();
  for (const auto& c : v) norm = norm + c.pow(q) * c;
  if (norm.is_zero()) throw error("reflection vector is isotropic");
  ff::FFElem scale = (Fq2->one() - eta) * norm.inverse();
  Mat m = Mat::identity(Fq2, n);
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v[static_cast<std::size_t>(j)].is_zero()) continue;
      m.at(i, j) = m.at(i, j) -
                   scale * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)].pow(q);
    }
  }
  return m;
}

// Canonical anisotropic vectors: e_0 + c e_1 over all c, and for q = 2 (where
// every two-coordinate unitary matrix is monomial) also e_0 + c e_1 + d e_2.
std::vector<std::vector<ff::FFElem>> reflection_vectors(const ff::FieldPtr& Fq2, int n,
                                                        long long q) {
  std::vector<std::vector<ff::FFElem>> out;
  std::uint64_t Q2 = static_cast<std::uint64_t>(Fq2->size());
  auto norm_ok = [&](const std::vector<ff::FFElem>& v) {
    ff::FFElem norm = Fq2->zero();
    for (const auto& c : v) norm = norm + c.pow(q) * c;
    return !norm.is_zero();
  };
  std::vector<ff::FFElem> v(static_cast<std::size_t>(n), Fq2->zero());
  v[0] = Fq2->one();
  if (norm_ok(v)) out.push_back(v);
  if (n >= 2) {
    for (std::uint64_t c = 1; c < Q2; ++c) {
      v[1] = Fq2->from_rep(Int(c));
      if (norm_ok(v)) out.push_back(v);
    }
    v[1] = Fq2->zero();
  }
  if (n >= 3 && q == 2) {
    for (std::uint64_t c = 1; c < Q2; ++c) {
      for (std::uint64_t d = 1; d < Q2; ++d) {
        v[1] = Fq2->from_rep(Int(c));
        v[2] = Fq2->from_rep(Int(d));
        if (norm_ok(v)) out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<Mat> gu_gens(const ff::FieldPtr& Fq2, int n, long long q) {
  if (q > 8) throw error("unitary constructors support q <= 8");
  std::vector<Mat> gens;
  ff::FFElem alpha = torus_elem_of_order(Fq2, q, static_cast<std::uint64_t>(q + 1));
  gens.push_back(diag_single(Fq2, n, 0, alpha));
  if (n >= 2) {
    gens.push_back(perm_matrix(Fq2, n, {0, 1}));
    if (n >= 3) {
      std::vector<int> cyc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
      gens.push_back(perm_matrix(Fq2, n, cyc));
    }
    for (const auto& v : reflection_vectors(Fq2, n, q)) {
      gens.push_back(unitary_reflection(Fq2, q, v, alpha));
    }
  }
  for (const Mat& g : gens) {
    if (!is_unitary(g, Fq2, q)) throw error("internal: non-unitary generator");
  }
  return gens;
}

std::vector<Mat> su_gens(const ff::FieldPtr& Fq2, int n, long long q) {
  if (q > 8) throw error("unitary constructors support q <= 8");
  std::vector<Mat> gens;
  if (n < 2) {
    gens.push_back(Mat::identity(Fq2, n));
    return gens;
  }
  ff::FFElem alpha = torus_elem_of_order(Fq2, q, static_cast<std::uint64_t>(q + 1));
  Mat d = Mat::identity(Fq2, n);
  d.at(0, 0) = alpha;
  d.at(1, 1) = alpha.inverse();
  gens.push_back(d);
  for (int i = 0; i + 2 < n; ++i) gens.push_back(perm_matrix(Fq2, n, {i, i + 1, i + 2}));
  // determinant-one products of a reflection with an inverse reflection at e_0
  std::vector<ff::FFElem> e0(static_cast<std::size_t>(n), Fq2->zero());
  e0[0] = Fq2->one();
  Mat undo = unitary_reflection(Fq2, q, e0, alpha.inverse());
  for (const auto& v : reflection_vectors(Fq2, n, q)) {
    gens.push_back(mat_mul(unitary_reflection(Fq2, q, v, alpha), undo));
  }
  for (const Mat& g : gens) {
    if (!is_unitary(g, Fq2, q)) throw error("internal: non-unitary generator");
  }
  return gens;
}

std::vector<Mat> sp_gens(const ff::FieldPtr& F, int n, long long q, unsigned e) {
  if (n % 2 != 0 || n < 2) throw error("symplectic dimension must be even and >= 2");
  std::vector<Mat> gens;
  ff::FFElem gamma = elem_of_order(F, static_cast<std::uint64_t>(q - 1));
  // SL_2 on the first hyperbolic pair
  ff::FFElem pw = F->one();
  for (unsigned k = 0; k < e; ++k) {
    gens.push_back(transvection(F, n, 0, 1, pw));
    gens.push_back(transvection(F, n, 1, 0, pw));
    pw = pw * gamma;
  }
  if (n >= 4) {
    // swap of the first two hyperbolic pairs and cycle of all pairs
    Mat swap = Mat::identity(F, n);
    for (int c = 0; c < 2; ++c) {
      swap.at(c, c) = F->zero();
      swap.at(c + 2, c + 2) = F->zero();
      swap.at(c, c + 2) = F->one();
      swap.at(c + 2, c) = F->one();
    }
    gens.push_back(swap);
    int pairs = n / 2;
    if (pairs >= 3) {
      Mat cyc;
      cyc.n = n;
      cyc.a.assign(static_cast<std::size_t>(n) * n, F->zero());
      for (int b = 0; b < pairs; ++b) {
        int to = (b + 1) % pairs;
        cyc.at(2 * to, 2 * b) = F->one();
        cyc.at(2 * to + 1, 2 * b + 1) = F->one();
      }
      gens.push_back(cyc);
    }
    // transvections along v = e_0 + e_1 (coordinates 0 and 2):
    // x -> x + lambda B(x, v) v
    pw = F->one();
    for (unsigned k = 0; k < e; ++k) {
      Mat t = Mat::identity(F, n);
      std::vector<ff::FFElem> v(static_cast<std::size_t>(n), F->zero());
      v[0] = F->one();
      v[2] = F->one();
      for (int col = 0; col < n; ++col) {
        std::vector<ff::FFElem> basis(static_cast<std::size_t>(n), F->zero());
        basis[static_cast<std::size_t>(col)] = F->one();
        ff::FFElem coef = symplectic_form(F, basis, v) * pw;
        if (!coef.is_zero()) {
          for (int row = 0; row < n; ++row) {
            if (!v[static_cast<std::size_t>(row)].is_zero()) {
              t.at(row, col) = t.at(row, col) + coef * v[static_cast<std::size_t>(row)];
            }
          }
        }
      }
      gens.push_back(t);
      pw = pw * gamma;
    }
  }
  for (const Mat& g : gens) {
    if (!is_symplectic(g, F)) throw error("internal: non-symplectic generator");
  }
  return gens;
}

// ---- family metadata ----

bool is_matrix_family(Family f) {
  switch (f) {
    case Family::gl:
    case Family::sl:
    case Family::pgl:
    case Family::psl:
    case Family::gu:
    case Family::su:
    case Family::pgu:
    case Family::psu:
    case Family::sp:
    case Family::psp:
      return true;
    default:
      return false;
  }
}

bool is_unitary_family(Family f) {
  return f == Family::gu || f == Family::su || f == Family::pgu || f == Family::psu;
}

bool is_projective_family(Family f) {
  return f == Family::pgl || f == Family::psl || f == Family::pgu || f == Family::psu ||
         f == Family::psp;
}

// eps after canonicalization (gu/su/pgu/psu are the eps = -1 forms of
// gl/sl/pgl/psl)
int effective_eps(const GroupSpec& s) { return is_unitary_family(s.family) ? -1 : s.eps; }

Family linear_kind(Family f) {
  switch (f) {
    case Family::gl:
    case Family::gu:
      return Family::gl;
    case Family::sl:
    case Family::su:
      return Family::sl;
    case Family::pgl:
    case Family::pgu:
      return Family::pgl;
    case Family::psl:
    case Family::psu:
      return Family::psl;
    default:
      return f;
  }
}

Int wreath_order(const std::vector<int>& tower) {
  Int order = 1;
  for (int a : tower) {
    if (a < 1) throw error("wreath tower exponents must be >= 1");
    Int copy_count = int_pow(Int(3), static_cast<unsigned>(a));
    Int next = 1;
    Int base = order;
    // |W wr C_{3^a}| = |W|^{3^a} * 3^a
    for (Int i = 0; i < copy_count; ++i) next *= base;
    order = next * copy_count;
  }
  return order;
}

}  // namespace

// ---- GroupSpec ----

std::string family_name(Family f) {
  switch (f) {
    case Family::sym: return "sym";
    case Family::alt: return "alt";
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::pgl: return "pgl";
    case Family::psl: return "psl";
    case Family::gu: return "gu";
    case Family::su: return "su";
    case Family::pgu: return "pgu";
    case Family::psu: return "psu";
    case Family::sp: return "sp";
    case Family::psp: return "psp";
    case Family::wreath_tower: return "wreath";
    case Family::external: return "external";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"sym", Family::sym}, {"alt", Family::alt}, {"gl", Family::gl},   {"sl", Family::sl},
      {"pgl", Family::pgl}, {"psl", Family::psl}, {"gu", Family::gu},   {"su", Family::su},
      {"pgu", Family::pgu}, {"psu", Family::psu}, {"sp", Family::sp},   {"psp", Family::psp},
      {"wreath", Family::wreath_tower},           {"external", Family::external},
  };
  for (const auto& [n, f] : table) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::sym:
    case Family::alt:
      os << family_name(family) << "(" << n << ")";
      break;
    case Family::wreath_tower: {
      os << "wreath[";
      for (std::size_t i = 0; i < tower.size(); ++i) os << (i ? "," : "") << tower[i];
      os << "]";
      break;
    }
    case Family::external:
      os << "external:" << label;
      break;
    case Family::sp:
    case Family::psp:
      os << family_name(family) << "(" << n << "," << q << ")";
      break;
    default:
      os << family_name(family) << "(" << n << "," << q << ","
         << (effective_eps(*this) > 0 ? "+" : "-") << ")";
  }
  return os.str();
}

nlohmann::json GroupSpec::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  if (family == Family::sym || family == Family::alt || is_matrix_family(family)) j["n"] = n;
  if (is_matrix_family(family)) j["q"] = q;
  if (is_matrix_family(family) && family != Family::sp && family != Family::psp) {
    j["eps"] = effective_eps(*this) > 0 ? "+" : "-";
  }
  if (family == Family::wreath_tower) j["tower"] = tower;
  if (family == Family::external) j["label"] = label;
  return j;
}

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
  GroupSpec s;
  auto f = family_from_name(j.at("family").get<std::string>());
  if (!f) throw error("unknown family in spec json");
  s.family = *f;
  if (j.contains("n")) s.n = j.at("n").get<int>();
  if (j.contains("q")) s.q = j.at("q").get<long long>();
  if (j.contains("eps")) s.eps = j.at("eps").get<std::string>() == "-" ? -1 : +1;
  if (is_unitary_family(s.family)) s.eps = -1;
  if (j.contains("tower")) s.tower = j.at("tower").get<std::vector<int>>();
  if (j.contains("label")) s.label = j.at("label").get<std::string>();
  return s;
}

// ---- orders and degrees ----

Int expected_order(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::sym: {
      if (spec.n < 1) throw error("sym: n must be >= 1");
      Int f = 1;
      for (int i = 2; i <= spec.n; ++i) f *= i;
      return f;
    }
    case Family::alt: {
      if (spec.n < 1) throw error("alt: n must be >= 1");
      Int f = 1;
      for (int i = 2; i <= spec.n; ++i) f *= i;
      return spec.n >= 2 ? f / 2 : f;
    }
    case Family::wreath_tower:
      return wreath_order(spec.tower);
    case Family::external:
      return 0;
    default:
      break;
  }
  if (spec.n < 1) throw error("matrix family: n must be >= 1");
  prime_power(spec.q);
  int n = spec.n;
  Int q(spec.q);
  int eps = effective_eps(spec);
  Family kind = linear_kind(spec.family);
  if (spec.family == Family::sp || spec.family == Family::psp) {
    if (n % 2 != 0) throw error("sp/psp: dimension must be even");
    int m = n / 2;
    Int order = int_pow(q, static_cast<unsigned>(m) * static_cast<unsigned>(m));
    for (int i = 1; i <= m; ++i) order *= int_pow(q, 2 * static_cast<unsigned>(i)) - 1;
    if (spec.family == Family::psp) order /= boost::multiprecision::gcd(Int(2), q - 1);
    return order;
  }
  // |GL_n^eps(q)| = q^{n(n-1)/2} prod (q^i - eps^i)
  Int order = int_pow(q, static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    Int term = int_pow(q, static_cast<unsigned>(i));
    if (eps < 0 && i % 2 == 1) term += 1;
    else term -= 1;
    order *= term;
  }
  Int qme = eps > 0 ? Int(q - 1) : Int(q + 1);
  if (kind == Family::sl || kind == Family::psl) order /= qme;
  if (kind == Family::pgl) order /= qme;
  if (kind == Family::psl) order /= boost::multiprecision::gcd(Int(n), qme);
  return order;
}

std::size_t expected_degree(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::sym:
    case Family::alt:
      if (spec.n < 1 || spec.n > static_cast<int>(kMaxDegree)) throw error("degree bound exceeded");
      return static_cast<std::size_t>(spec.n);
    case Family::wreath_tower: {
      Int d = 1;
      for (int a : spec.tower) d *= int_pow(Int(3), static_cast<unsigned>(a));
      if (d > static_cast<long long>(kMaxDegree)) throw error("degree bound exceeded");
      return d.convert_to<std::size_t>();
    }
    case Family::external:
      throw error("expected_degree: unknown for external groups");
    default:
      break;
  }
  if (spec.n < 1) throw error("matrix family: n must be >= 1");
  auto [p, e] = prime_power(spec.q);
  (void)p;
  (void)e;
  Int Q = is_unitary_family(spec.family) ? Int(spec.q) * spec.q : Int(spec.q);
  Int points = int_pow(Q, static_cast<unsigned>(spec.n)) - 1;
  if (is_projective_family(spec.family)) points /= Q - 1;
  if (points > static_cast<long long>(kMaxDegree)) throw error("degree bound exceeded");
  return points.convert_to<std::size_t>();
}

// ---- build ----

namespace {

std::vector<Mat> matrix_generators(const GroupSpec& spec, const ff::FieldPtr& F) {
  auto [p, e] = prime_power(spec.q);
  (void)p;
  switch (linear_kind(spec.family)) {
    case Family::gl:
    case Family::pgl:
      if (effective_eps(spec) > 0) return gl_gens(F, spec.n, spec.q, e);
      return gu_gens(F, spec.n, spec.q);
    case Family::sl:
    case Family::psl:
      if (effective_eps(spec) > 0) return sl_gens(F, spec.n, spec.q, e);
      return su_gens(F, spec.n, spec.q);
    case Family::sp:
    case Family::psp:
      return sp_gens(F, spec.n, spec.q, e);
    default:
      throw error("not a matrix family");
  }
}

ff::FieldPtr family_field(const GroupSpec& spec) {
  auto [p, e] = prime_power(spec.q);
  return ff::FieldCtx::create(p, is_unitary_family(spec.family) ? 2 * e : e);
}

PermGroup matrix_group_to_perms(const GroupSpec& spec, const std::vector<Mat>& mats) {
  ff::FieldPtr F = mats.empty() ? family_field(spec) : mats[0].a.empty() ? family_field(spec) : mats[0].at(0, 0).ctx();
  VectorCodec codec(F, spec.n);
  std::vector<Perm> vec_perms;
  vec_perms.reserve(mats.size());
  for (const Mat& m : mats) vec_perms.push_back(perm_on_vectors(m, codec));
  if (!is_projective_family(spec.family)) {
    if (codec.total - 1 > kMaxDegree) throw error("degree bound exceeded");
    return PermGroup(codec.total - 1, std::move(vec_perms));
  }
  ProjCodec proj(codec);
  if (proj.reps.size() > kMaxDegree) throw error("degree bound exceeded");
  std::vector<Perm> proj_perms;
  proj_perms.reserve(vec_perms.size());
  for (const Perm& vp : vec_perms) proj_perms.push_back(project_perm(vp, proj));
  return PermGroup(proj.reps.size(), std::move(proj_perms));
}

std::vector<Perm> weir_sym_gens(int n) {
  // 3-adic blocks of {0..n-1}: for each digit a_i, a_i consecutive blocks of
  // size 3^i, each carrying an iterated wreath tower of 3-cycles.
  std::vector<Perm> gens;
  int offset = 0;
  long long size = 1;
  long long rem = n;
  while (rem > 0) {
    int digit = static_cast<int>(rem % 3);
    for (int b = 0; b < digit; ++b) {
      // tower generators on block [offset, offset + size)
      for (long long level = 3; level <= size; level *= 3) {
        std::vector<Point> img(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = static_cast<Point>(x);
        for (long long x = 0; x < level; ++x) {
          img[static_cast<std::size_t>(offset + x)] =
              static_cast<Point>(offset + (x + level / 3) % level);
        }
        gens.emplace_back(std::move(img));
      }
      offset += static_cast<int>(size);
    }
    rem /= 3;
    size *= 3;
  }
  return gens;
}

}  // namespace

pg::PermGroup build(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::sym: {
      std::size_t n = expected_degree(spec);
      std::vector<Perm> gens;
      if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
      if (n >= 3) {
        std::vector<int> cyc(n);
        for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>(i);
        gens.push_back(Perm::from_cycles(n, {cyc}));
      }
      PermGroup G(n, std::move(gens));
      if (G.order() != expected_order(spec)) throw error("sym: order check failed");
      return G;
    }
    case Family::alt: {
      std::size_t n = expected_degree(spec);
      std::vector<Perm> gens;
      for (std::size_t i = 0; i + 2 < n; ++i) {
        gens.push_back(Perm::from_cycles(n, {{static_cast<int>(i), static_cast<int>(i) + 1,
                                              static_cast<int>(i) + 2}}));
      }
      PermGroup G(n, std::move(gens));
      if (G.order() != expected_order(spec)) throw error("alt: order check failed");
      return G;
    }
    case Family::wreath_tower: {
      if (spec.tower.empty()) throw error("wreath tower needs at least one exponent");
      std::size_t n = expected_degree(spec);
      std::vector<Perm> gens;
      long long prod_prev = 1;
      for (int a : spec.tower) {
        long long prod = prod_prev * static_cast<long long>(int_pow(Int(3), static_cast<unsigned>(a)).convert_to<long long>());
        std::vector<Point> img(n);
        for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(x);
        for (long long x = 0; x < prod; ++x) {
          img[static_cast<std::size_t>(x)] = static_cast<Point>((x + prod_prev) % prod);
        }
        gens.emplace_back(std::move(img));
        prod_prev = prod;
      }
      PermGroup G(n, std::move(gens));
      if (G.order() != expected_order(spec)) throw error("wreath: order check failed");
      return G;
    }
    case Family::external:
      return load_external(spec.label);
    default:
      break;
  }
  expected_degree(spec);  // degree guard
  ff::FieldPtr F = family_field(spec);
  PermGroup G = matrix_group_to_perms(spec, matrix_generators(spec, F));
  if (G.order() != expected_order(spec)) {
    throw error(spec.to_string() + ": constructed order " + G.order().str() +
                " does not match the order polynomial " + expected_order(spec).str());
  }
  return G;
}

// ---- Sylow 3-subgroups ----

namespace {

PermGroup syl3_randomized(const PermGroup& G, std::uint64_t seed, std::uint64_t budget) {
  Int target = three_part(G.order());
  PermGroup P = PermGroup::trivial(G.degree());
  if (target == 1) return P;
  Rng rng(seed);
  std::uint64_t iters = 0;
  while (P.order() < target) {
    if (iters++ >= budget) {
      throw error("randomized Sylow search reached order " + P.order().str() + " of " +
                  target.str() + " before exhausting its iteration budget");
    }
    Perm g = G.random_element(rng);
    Int o = g.order();
    Int o3 = three_part(o);
    if (o3 == 1) continue;
    // the 3-part of g
    Int cof = o / o3;
    Perm h = g;
    {
      Perm acc = Perm::identity(G.degree());
      Perm base = g;
      Int k = cof;
      while (k != 0) {
        if ((k & 1) != 0) acc = acc.then(base);
        base = base.then(base);
        k >>= 1;
      }
      h = acc;
    }
    if (h.is_identity() || P.contains(h)) continue;
    std::vector<Perm> gens = P.generators();
    gens.push_back(h);
    PermGroup cand(G.degree(), std::move(gens));
    if (cand.is_3group()) P = cand;
  }
  return P;
}

// Structural Sylow generators for GL/SL-type groups in the 3 | (q - eps)
// congruence: a torus element of order (q - eps)_3 per 3-adic block plus the
// block-internal wreath towers; determinant-one variants use consecutive
// coordinate pairs (zeta, zeta^{-1}).
std::vector<Mat> weir_matrix_gens(const GroupSpec& spec, const ff::FieldPtr& F) {
  int n = spec.n;
  int eps = effective_eps(spec);
  long long qme = spec.q - eps;
  std::uint64_t d = three_part(Int(qme)).convert_to<std::uint64_t>();
  ff::FFElem zeta = eps > 0 ? elem_of_order(F, d) : torus_elem_of_order(F, spec.q, d);
  Family kind = linear_kind(spec.family);
  bool det_one = (kind == Family::sl || kind == Family::psl);
  std::vector<Mat> gens;
  // blocks: digit a_i consecutive blocks of size 3^i
  std::vector<std::pair<int, int>> blocks;  // (offset, size)
  {
    int offset = 0;
    long long rem = n;
    long long size = 1;
    while (rem > 0) {
      int digit = static_cast<int>(rem % 3);
      for (int b = 0; b < digit; ++b) {
        blocks.emplace_back(offset, static_cast<int>(size));
        offset += static_cast<int>(size);
      }
      rem /= 3;
      size *= 3;
    }
  }
  if (det_one) {
    for (int c = 0; c + 1 < n; ++c) {
      Mat m = Mat::identity(F, n);
      m.at(c, c) = zeta;
      m.at(c + 1, c + 1) = zeta.inverse();
      gens.push_back(m);
    }
  } else {
    for (const auto& [offset, size] : blocks) {
      (void)size;
      gens.push_back(diag_single(F, n, offset, zeta));
    }
  }
  // block-internal towers (products of 3-cycles, determinant one)
  for (const auto& [offset, size] : blocks) {
    for (int level = 3; level <= size; level *= 3) {
      Mat m = Mat::identity(F, n);
      for (int x = 0; x < level; ++x) {
        int from = offset + x;
        int to = offset + (x + level / 3) % level;
        m.at(from, from) = F->zero();
        m.at(to, from) = F->one();
      }
      gens.push_back(m);
    }
  }
  if (gens.empty()) gens.push_back(Mat::identity(F, n));
  return gens;
}

}  // namespace

pg::PermGroup syl3(const GroupSpec& spec, const pg::PermGroup& G, std::uint64_t seed,
                   std::uint64_t budget) {
  Int target = three_part(G.order());
  if (target == 1) return PermGroup::trivial(G.degree());
  PermGroup P = PermGroup::trivial(G.degree());
  switch (spec.family) {
    case Family::sym:
    case Family::alt:
      P = PermGroup(G.degree(), weir_sym_gens(spec.n));
      break;
    case Family::wreath_tower:
      return G;
    case Family::external:
      P = syl3_randomized(G, seed, budget);
      break;
    case Family::sp:
    case Family::psp:
      P = syl3_randomized(G, seed, budget);
      break;
    default: {
      int eps = effective_eps(spec);
      if (spec.q % 3 == 0 || (spec.q - eps) % 3 != 0) {
        P = syl3_randomized(G, seed, budget);
        break;
      }
      ff::FieldPtr F = family_field(spec);
      P = matrix_group_to_perms(GroupSpec{spec.family, spec.n, spec.q, spec.eps, {}, ""},
                                weir_matrix_gens(spec, F));
      break;
    }
  }
  if (P.order() != target) {
    throw error(spec.to_string() + ": Sylow construction produced order " + P.order().str() +
                ", expected " + target.str());
  }
  return P;
}

// ---- products ----

pg::PermGroup direct_product(const pg::PermGroup& A, const pg::PermGroup& B) {
  std::size_t da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : B.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(da + db, std::move(gens));
}

pg::PermGroup wreath_product(const pg::PermGroup& A, const pg::PermGroup& B) {
  std::size_t da = A.degree(), m = B.degree();
  std::size_t deg = da * m;
  if (deg > kMaxDegree) throw error("wreath product degree exceeds bound");
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t i = 0; i < deg; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : B.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t tb = g(static_cast<Point>(b));
      for (std::size_t x = 0; x < da; ++x) img[b * da + x] = static_cast<Point>(tb * da + x);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(deg, std::move(gens));
}

// ---- external generator files ----

pg::PermGroup load_external(const std::string& path, std::string* label_out) {
  std::ifstream in(path);
  if (!in) throw error("cannot open generator file: " + path);
  std::string label;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "name") {
      std::getline(ls >> std::ws, label);
      continue;
    }
    if (first == "degree") {
      long long n = -1;
      if (!(ls >> n) || n < 1 || n > static_cast<long long>(kMaxDegree)) {
        throw error("bad degree line in " + path);
      }
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    if (!have_degree) throw error("generator line before degree in " + path);
    std::vector<Point> img;
    img.reserve(degree);
    std::istringstream gs(line);
    long long v;
    while (gs >> v) {
      if (v < 0 || v >= static_cast<long long>(degree)) throw error("image out of range in " + path);
      img.push_back(static_cast<Point>(v));
    }
    if (img.size() != degree) throw error("wrong image count in " + path);
    gens.emplace_back(std::move(img));  // Perm ctor validates bijectivity
  }
  if (!have_degree) throw error("missing degree line in " + path);
  if (label_out) *label_out = label;
  return PermGroup(degree, std::move(gens));
}

}  // namespace triblock::zoo
