#include "iwasawa/lattice.hpp"

#include <algorithm>
#include <string>

#include "iwasawa/numeric.hpp"

namespace iwasawa {

ElementSet generated_subgroup(const GroupTable& g, const ElementSet& seed) {
  ElementSet in(g.order);
  in.insert(0);
  std::vector<int> mem{0};
  for (int a : seed.elements())
    if (!in.contains(a)) {
      in.insert(a);
      mem.push_back(a);
    }
  // Every pair (mem[i], mem[j]) is multiplied once the later index arrives.
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int p : {g.mul(mem[i], mem[j]), g.mul(mem[j], mem[i])}) {
        if (!in.contains(p)) {
          in.insert(p);
          mem.push_back(p);
        }
      }
    }
  }
  return in;
}

int SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

void SubgroupLattice::ensure_tables() const {
  std::call_once(*tables_once_, [this] {
    int n = size();
    meet_table_.assign(static_cast<std::size_t>(n) * n, -1);
    join_table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        int m = index_of(subgroups_[i].members & subgroups_[j].members);
        int v = leq(i, j)   ? j
                : leq(j, i) ? i
                            : index_of(generated_subgroup(
                                  group_, subgroups_[i].members | subgroups_[j].members));
        meet_table_[i * n + j] = meet_table_[j * n + i] = m;
        join_table_[i * n + j] = join_table_[j * n + i] = v;
      }
    }
  });
}

int SubgroupLattice::meet(int h, int k) const {
  ensure_tables();
  return meet_table_[h * size() + k];
}

int SubgroupLattice::join(int h, int k) const {
  ensure_tables();
  return join_table_[h * size() + k];
}

std::vector<int> SubgroupLattice::interval_below(int h) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq(i, h)) out.push_back(i);
  return out;
}

void SubgroupLattice::build_flags() {
  int n = size();
  const GroupTable& g = group_;

  is_normal_.assign(n, false);
  std::vector<std::vector<int>> conj_of(n);
  for (int i = 0; i < n; ++i) {
    conj_of[i].reserve(g.order);
    bool normal = true;
    for (int x = 0; x < g.order; ++x) {
      ElementSet c(g.order);
      for (int h : subgroups_[i].members.elements()) c.insert(g.conjugate(x, h));
      int ci = index_of(c);
      if (ci < 0)
        fail(ErrorKind::TheoremViolation,
             "conjugate of subgroup " + std::to_string(i) + " is not listed");
      conj_of[i].push_back(ci);
      if (ci != i) normal = false;
    }
    is_normal_[i] = normal;
  }

  class_of_.assign(n, -1);
  classes_.clear();
  for (int i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    int id = static_cast<int>(classes_.size());
    std::vector<int> cls;
    for (int ci : conj_of[i])
      if (class_of_[ci] < 0) {
        class_of_[ci] = id;
        cls.push_back(ci);
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }

  is_maximal_.assign(n, false);
  for (int i = 0; i < n - 1; ++i) {
    bool maximal = true;
    for (int j = i + 1; j < n - 1 && maximal; ++j)
      if (i != j && leq(i, j) && subgroups_[j].order > subgroups_[i].order) maximal = false;
    is_maximal_[i] = maximal;
  }
  if (n == 1) is_maximal_[0] = false;
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, int lattice_cap) {
  if (g.order > order_cap())
    fail(ErrorKind::OrderCapExceeded, "group order " + std::to_string(g.order) +
                                          " exceeds cap " + std::to_string(order_cap()));

  SubgroupLattice l;
  l.group_ = g;

  std::map<ElementSet, int> seen;
  std::vector<ElementSet> found;
  auto add = [&](const ElementSet& s) {
    if (seen.emplace(s, static_cast<int>(found.size())).second) {
      found.push_back(s);
      if (static_cast<int>(found.size()) > lattice_cap)
        fail(ErrorKind::LatticeCapExceeded,
             "subgroup count exceeds cap " + std::to_string(lattice_cap));
    }
  };

  for (int a = 0; a < g.order; ++a)
    add(generated_subgroup(g, ElementSet::single(g.order, a)));

  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
      add(generated_subgroup(g, found[i] | found[j]));
    }

  l.subgroups_.reserve(found.size());
  for (ElementSet& s : found) {
    Subgroup sub;
    sub.order = s.count();
    sub.members = std::move(s);
    l.subgroups_.push_back(std::move(sub));
  }
  std::sort(l.subgroups_.begin(), l.subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  l.index_.clear();
  for (int i = 0; i < l.size(); ++i) l.index_.emplace(l.subgroups_[i].members, i);

  l.build_flags();
  if (l.size() <= SubgroupLattice::kEagerTableLimit) l.ensure_tables();
  return l;
}

Subgroup center(const GroupTable& g) {
  ElementSet z(g.order);
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.insert(a);
  }
  return {z, z.count()};
}

Subgroup derived_subgroup(const GroupTable& g) {
  ElementSet commutators(g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      commutators.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  ElementSet d = generated_subgroup(g, commutators);
  return {d, d.count()};
}

Subgroup frattini(const SubgroupLattice& l) {
  ElementSet phi = ElementSet::full(l.group().order);
  bool any = false;
  for (int i = 0; i < l.size(); ++i)
    if (l.is_maximal(i)) {
      phi &= l.at(i).members;
      any = true;
    }
  if (!any) phi = l.at(l.full_index()).members;
  return {phi, phi.count()};
}

std::vector<int> sylow_subgroups(const SubgroupLattice& l, int p) {
  int n = l.group().order;
  long long pa = 1;
  while (n % (pa * p) == 0) pa *= p;
  std::vector<int> out;
  if (pa == 1) return out;
  for (int i = 0; i < l.size(); ++i)
    if (l.order_of(i) == pa) out.push_back(i);

  long long np = static_cast<long long>(out.size());
  if (np % p != 1 || (n / pa) % np != 0)
    fail(ErrorKind::TheoremViolation,
         "Sylow count n_" + std::to_string(p) + " = " + std::to_string(np) +
             " violates the congruence conditions in " + l.group().name);
  return out;
}

bool is_nilpotent(const SubgroupLattice& l) {
  for (auto [p, e] : prime_factorization(l.group().order))
    if (sylow_subgroups(l, static_cast<int>(p)).size() != 1) return false;
  return true;
}

bool is_cyclic(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a)
    if (element_order(g, a) == g.order) return true;
  return false;
}

}  // namespace iwasawa
