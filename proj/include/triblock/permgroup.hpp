#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "triblock/perm.hpp"

namespace triblock::pg {

// Stabilizer chain with explicit transversals, built by a deterministic
// (non-randomized) Schreier-Sims. Base points are chosen as the least moved
// point whenever a new level is opened, so the chain, the order and element
// enumeration are reproducible.
class Bsgs {
public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;              // BFS order, orbit[0] == base
    std::vector<std::int32_t> pos;         // point -> index in orbit, -1 outside
    std::vector<Perm> transversal;         // transversal[i] maps base -> orbit[i]
    std::vector<std::uint32_t> processed;  // per orbit point: gens already examined
  };

  Bsgs(std::size_t degree, const std::vector<Perm>& gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  const Int& order() const { return order_; }

  bool contains(const Perm& g) const;
  // Sifts g through the chain; returns the residue and the level at which
  // sifting stopped (residue is the identity iff g is a member).
  std::pair<Perm, std::size_t> strip(const Perm& g, std::size_t from_level = 0) const;

  // Canonical enumeration: idx in [0, order) -> element.
  Perm element_at(Int idx) const;

private:
  void add_generator(std::size_t level, const Perm& g);
  void process();

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<std::size_t> pending_;  // levels with unprocessed (point, gen) pairs
  Int order_;
};

// Immutable permutation group given by generators; the stabilizer chain is
// built lazily on first use and shared afterwards.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const Bsgs& bsgs() const;
  Int order() const { return bsgs().order(); }
  bool contains(const Perm& g) const { return bsgs().contains(g); }
  Perm element_at(const Int& idx) const { return bsgs().element_at(idx); }
  Perm random_element(Rng& rng) const;

  // Smallest normal subgroup of *this containing the seeds.
  PermGroup normal_closure(const std::vector<Perm>& seeds) const;
  PermGroup derived_subgroup() const;

  bool is_3group() const;
  // d with |P/Phi(P)| = 3^d, Phi(P) the normal closure of generator
  // commutators and cubes; requires a group of 3-power order.
  int frattini_rank_3group() const;

private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const Bsgs> bsgs_;
};

// Conjugacy classes of a group of order at most the enumeration bound.
// Representatives are the lexicographically least elements of their classes
// and the class list is sorted by representative, so the identity is class 0.
class ConjClasses {
public:
  std::size_t count() const { return reps_.size(); }
  const std::vector<Perm>& reps() const { return reps_; }
  const std::vector<Int>& sizes() const { return sizes_; }
  long rep_order(std::size_t i) const { return rep_orders_[i]; }
  std::size_t identity_class() const { return 0; }

  // Index of the class containing g; throws if g is not in the group.
  std::size_t class_of(const Perm& g) const;

  // Calls fn on every element of class i (fresh conjugation orbit walk).
  void enumerate_class(std::size_t i, const std::function<void(const Perm&)>& fn) const;

  // class of g^k for a representative g of each class (well-defined).
  std::vector<std::size_t> power_map(long long k) const;

  const Int& group_order() const { return group_order_; }

private:
  friend ConjClasses conjugacy_classes(const PermGroup& G, const Int& max_order);
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> reps_;
  std::vector<Int> sizes_;
  std::vector<long> rep_orders_;
  Int group_order_;
  std::unordered_map<Fingerprint, std::uint32_t, FingerprintHash> locator_;
};

ConjClasses conjugacy_classes(const PermGroup& G, const Int& max_order = Int(1000000));

}  // namespace triblock::pg
