#include "triblock/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace triblock::ct {

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int col = 0; col < p[0]; ++col) {
    int count = 0;
    for (int part : p) {
      if (part > col) ++count;
    }
    out.push_back(count);
  }
  return out;
}

Int class_size_sym(int n, const Partition& mu) {
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  Int z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return fact / z;
}

long lcm_parts(const Partition& mu) {
  long l = 1;
  for (int part : mu) l = std::lcm(l, static_cast<long>(part));
  return l;
}

bool is_even_type(int n, const Partition& mu) {
  return (n - static_cast<int>(mu.size())) % 2 == 0;
}

bool is_split_type(const Partition& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] % 2 == 0) return false;
    if (i + 1 < mu.size() && mu[i] == mu[i + 1]) return false;
  }
  return !mu.empty();
}

Partition power_type(const Partition& mu, long long k) {
  Partition out;
  for (int part : mu) {
    long long g = std::gcd(static_cast<long long>(part), k < 0 ? -k : k);
    if (k == 0) g = part;
    for (long long i = 0; i < g; ++i) out.push_back(static_cast<int>(part / g));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Partition diagonal_hooks(const Partition& p) {
  Partition conj = conjugate_partition(p);
  Partition out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (static_cast<int>(i) < p[i]) {
      int arm = p[i] - static_cast<int>(i) - 1;
      int leg = conj[i] - static_cast<int>(i) - 1;
      out.push_back(arm + leg + 1);
    }
  }
  return out;
}

namespace {

// partitions here have at most 15 boxes, so 4 bits per part suffice
std::uint64_t encode_partition(const Partition& p) {
  std::uint64_t code = 0;
  for (int part : p) code = (code << 4) | static_cast<std::uint64_t>(part);
  return code;
}

// beta-set border-strip recursion with memoization on (lambda, depth in mu)
Int mn_recurse(const Partition& lambda, const std::vector<int>& mu, std::size_t depth,
               std::map<std::pair<std::uint64_t, std::size_t>, Int>& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(encode_partition(lambda), depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int k = mu[depth];
  // beta numbers: lambda_i + (L - 1 - i)
  std::size_t L = lambda.size();
  std::vector<int> beta(L);
  for (std::size_t i = 0; i < L; ++i) {
    beta[i] = lambda[i] + static_cast<int>(L - 1 - i);
  }
  Int total = 0;
  for (std::size_t i = 0; i < L; ++i) {
    int b = beta[i];
    if (b < k) continue;
    int target = b - k;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < L; ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition next;
    for (std::size_t j = 0; j < L; ++j) {
      int part = nb[j] - static_cast<int>(L - 1 - j);
      if (part > 0) next.push_back(part);
    }
    Int sub = mn_recurse(next, mu, depth + 1, memo);
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Int sn_character_value(const Partition& lambda, const Partition& mu) {
  int n = 0;
  for (int part : lambda) n += part;
  int m = 0;
  for (int part : mu) m += part;
  if (n != m) throw error("sn_character_value: sizes differ");
  if (n == 0) return 1;
  std::map<std::pair<std::uint64_t, std::size_t>, Int> memo;
  return mn_recurse(lambda, mu, 0, memo);
}

Int hook_product(const Partition& lambda) {
  Partition conj = conjugate_partition(lambda);
  Int prod = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      prod *= (arm + leg + 1);
    }
  }
  return prod;
}

}  // namespace triblock::ct
