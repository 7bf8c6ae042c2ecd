#include "triblock/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace triblock::pg {

// ---- Bsgs ----

Bsgs::Bsgs(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree_) throw error("generator degree mismatch");
    if (!g.is_identity()) add_generator(0, g);
  }
  process();
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long long>(lv.orbit.size());
}

void Bsgs::add_generator(std::size_t level, const Perm& g) {
  if (level == levels_.size()) {
    Level lv;
    Point base = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (g(static_cast<Point>(i)) != i) {
        base = static_cast<Point>(i);
        break;
      }
    }
    lv.base = base;
    lv.pos.assign(degree_, -1);
    lv.orbit.push_back(base);
    lv.pos[base] = 0;
    lv.transversal.push_back(Perm::identity(degree_));
    lv.processed.push_back(0);
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  pending_.push_back(level);
}

void Bsgs::process() {
  while (!pending_.empty()) {
    std::size_t l = pending_.back();
    Level& lv = levels_[l];
    // Scan (orbit point, generator) pairs not yet examined. Orbits and
    // transversals are extended append-only so earlier work stays valid.
    bool progressed = false;
    for (std::size_t ti = 0; ti < lv.orbit.size(); ++ti) {
      while (lv.processed[ti] < lv.gens.size()) {
        const Perm& s = lv.gens[lv.processed[ti]++];
        Point t = lv.orbit[ti];
        Point t2 = s(t);
        Perm w = lv.transversal[ti].then(s);  // maps base -> t2
        if (lv.pos[t2] < 0) {
          lv.pos[t2] = static_cast<std::int32_t>(lv.orbit.size());
          lv.orbit.push_back(t2);
          lv.transversal.push_back(std::move(w));
          lv.processed.push_back(0);
        } else {
          Perm schreier = w.then(lv.transversal[static_cast<std::size_t>(lv.pos[t2])].inverse());
          auto [residue, stop] = strip(schreier, l + 1);
          if (!residue.is_identity()) {
            // The residue fixes the base prefix through level stop-1, so it is
            // a strong generator for every level l+1..stop (generator sets
            // must stay cumulative for the verification to be sound).
            for (std::size_t j = l + 1; j <= stop; ++j) add_generator(j, residue);
            progressed = true;
            break;
          }
        }
      }
      if (progressed) break;
    }
    if (!progressed) pending_.pop_back();
  }
}

std::pair<Perm, std::size_t> Bsgs::strip(const Perm& g, std::size_t from_level) const {
  Perm h = g;
  std::size_t l = from_level;
  for (; l < levels_.size(); ++l) {
    if (h.is_identity()) break;
    const Level& lv = levels_[l];
    Point x = h(lv.base);
    if (lv.pos[x] < 0) return {h, l};
    h = h.then(lv.transversal[static_cast<std::size_t>(lv.pos[x])].inverse());
  }
  return {h, l};
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = strip(g);
  (void)stop;
  return residue.is_identity();
}

Perm Bsgs::element_at(Int idx) const {
  if (idx < 0 || idx >= order_) throw error("element index out of range");
  Perm g = Perm::identity(degree_);
  // Little-endian digits over orbit sizes, deepest level first; the element
  // is the transversal product applied deepest-first.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    Int size = static_cast<unsigned long long>(lv.orbit.size());
    Int digit = idx % size;
    idx /= size;
    g = g.then(lv.transversal[static_cast<std::size_t>(digit)]);
  }
  return g;
}

// ---- PermGroup ----

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw error("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const Bsgs& PermGroup::bsgs() const {
  if (!bsgs_) bsgs_ = std::make_shared<const Bsgs>(degree_, gens_);
  return *bsgs_;
}

Perm PermGroup::random_element(Rng& rng) const {
  const Bsgs& b = bsgs();
  Perm g = Perm::identity(degree_);
  for (std::size_t l = b.levels().size(); l-- > 0;) {
    const auto& lv = b.levels()[l];
    g = g.then(lv.transversal[rng.below(lv.orbit.size())]);
  }
  return g;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seeds) const {
  for (const Perm& s : seeds) {
    if (!contains(s)) throw error("normal_closure: seed is not a group member");
  }
  std::vector<Perm> hgens;
  for (const Perm& s : seeds) {
    if (!s.is_identity()) hgens.push_back(s);
  }
  PermGroup H(degree_, hgens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm& h : H.generators()) {
      for (const Perm& g : gens_) {
        Perm c = h.conjugated_by(g);
        if (!H.contains(c)) {
          auto more = H.generators();
          more.push_back(c);
          H = PermGroup(degree_, std::move(more));
          grew = true;
        }
      }
      if (grew) break;
    }
  }
  return H;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      Perm c = gens_[i].inverse().then(gens_[j].inverse()).then(gens_[i]).then(gens_[j]);
      if (!c.is_identity()) comms.push_back(c);
    }
  }
  return normal_closure(comms);
}

bool PermGroup::is_3group() const {
  Int o = order();
  while (o % 3 == 0) o /= 3;
  return o == 1;
}

int PermGroup::frattini_rank_3group() const {
  Int o = order();
  if (o == 1) return 0;
  {
    Int t = o;
    while (t % 3 == 0) t /= 3;
    if (t != 1) throw error("frattini_rank_3group: group order is not a power of 3");
  }
  std::vector<Perm> seeds;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      seeds.push_back(gens_[i].inverse().then(gens_[j].inverse()).then(gens_[i]).then(gens_[j]));
    }
    seeds.push_back(gens_[i].then(gens_[i]).then(gens_[i]));
  }
  PermGroup phi = normal_closure(seeds);
  Int index = o / phi.order();
  int d = 0;
  while (index % 3 == 0) {
    index /= 3;
    ++d;
  }
  if (index != 1) throw error("frattini index is not a power of 3");
  return d;
}

// ---- conjugacy classes ----

std::size_t ConjClasses::class_of(const Perm& g) const {
  auto it = locator_.find(g.fingerprint());
  if (it == locator_.end()) throw error("class_of: element not in group");
  return it->second;
}

void ConjClasses::enumerate_class(std::size_t i, const std::function<void(const Perm&)>& fn) const {
  std::unordered_set<Fingerprint, FingerprintHash> seen;
  std::deque<Perm> queue;
  queue.push_back(reps_[i]);
  seen.insert(reps_[i].fingerprint());
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    fn(cur);
    for (const Perm& g : gens_) {
      Perm c = cur.conjugated_by(g);
      if (seen.insert(c.fingerprint()).second) queue.push_back(std::move(c));
    }
  }
}

std::vector<std::size_t> ConjClasses::power_map(long long k) const {
  std::vector<std::size_t> out(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) out[i] = class_of(reps_[i].pow(k));
  return out;
}

ConjClasses conjugacy_classes(const PermGroup& G, const Int& max_order) {
  ConjClasses cc;
  cc.degree_ = G.degree();
  cc.gens_ = G.generators();
  cc.group_order_ = G.order();
  if (cc.group_order_ > max_order) {
    throw error("conjugacy_classes: group order " + cc.group_order_.str() +
                " exceeds enumeration bound " + max_order.str());
  }
  struct ClassInfo {
    Perm min_rep;
    Int size;
    long order;
  };
  std::vector<ClassInfo> found;
  Int n = cc.group_order_;
  for (Int idx = 0; idx < n; ++idx) {
    Perm g = G.element_at(idx);
    Fingerprint fp = g.fingerprint();
    if (cc.locator_.find(fp) != cc.locator_.end()) continue;
    // New class: walk the conjugation orbit.
    auto id = static_cast<std::uint32_t>(found.size());
    std::deque<Perm> queue;
    cc.locator_.emplace(fp, id);
    queue.push_back(g);
    Perm min_rep = g;
    Int size = 0;
    while (!queue.empty()) {
      Perm cur = std::move(queue.front());
      queue.pop_front();
      ++size;
      if (cur < min_rep) min_rep = cur;
      for (const Perm& s : cc.gens_) {
        Perm c = cur.conjugated_by(s);
        Fingerprint cfp = c.fingerprint();
        if (cc.locator_.emplace(cfp, id).second) queue.push_back(std::move(c));
      }
    }
    long ord = static_cast<long>(min_rep.order());
    found.push_back(ClassInfo{std::move(min_rep), size, ord});
  }
  // Canonical class order: sort by representative; identity sorts first.
  std::vector<std::uint32_t> perm_idx(found.size());
  for (std::uint32_t i = 0; i < perm_idx.size(); ++i) perm_idx[i] = i;
  std::sort(perm_idx.begin(), perm_idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return found[a].min_rep < found[b].min_rep;
  });
  std::vector<std::uint32_t> remap(found.size());
  for (std::uint32_t newi = 0; newi < perm_idx.size(); ++newi) {
    remap[perm_idx[newi]] = newi;
    cc.reps_.push_back(found[perm_idx[newi]].min_rep);
    cc.sizes_.push_back(found[perm_idx[newi]].size);
    cc.rep_orders_.push_back(found[perm_idx[newi]].order);
  }
  for (auto& [fp, id] : cc.locator_) id = remap[id];
  Int total = 0;
  for (const Int& s : cc.sizes_) total += s;
  if (total != cc.group_order_) throw error("class sizes do not sum to group order");
  return cc;
}

}  // namespace triblock::pg
