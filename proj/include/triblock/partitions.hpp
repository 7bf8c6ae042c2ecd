#pragma once

#include <vector>

#include "triblock/common.hpp"

namespace triblock::ct {

using Partition = std::vector<int>;  // parts in descending order

// All partitions of n in descending lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

Partition conjugate_partition(const Partition& p);

// |S_n| / (prod i^{m_i} m_i!) for a cycle type mu of n.
Int class_size_sym(int n, const Partition& mu);

// lcm of the parts (the order of a permutation of that cycle type).
long lcm_parts(const Partition& mu);

bool is_even_type(int n, const Partition& mu);

// all parts odd and distinct (the types whose S_n class splits in A_n)
bool is_split_type(const Partition& mu);

// cycle type of g^k for g of cycle type mu
Partition power_type(const Partition& mu, long long k);

// diagonal hook lengths of a partition (nonempty iff the partition is)
Partition diagonal_hooks(const Partition& p);

// Murnaghan-Nakayama: the character of S_n indexed by lambda, evaluated at a
// permutation of cycle type mu. Exact.
Int sn_character_value(const Partition& lambda, const Partition& mu);

// Product of the hook lengths of lambda (used by the hook length formula).
Int hook_product(const Partition& lambda);

}  // namespace triblock::ct
