#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "iwasawa/group.hpp"

namespace iwasawa {

struct Subgroup {
  ElementSet members;
  int order = 0;
};

/// The full subgroup lattice of a finite group: every subgroup, sorted by
/// (order, members-as-integer), with normality flags, conjugacy classes and
/// maximality precomputed. Entry 0 is the trivial subgroup and the last
/// entry is the whole group. Immutable after enumeration; join/meet tables
/// are memoized behind a once-flag so finished lattices can be shared
/// across threads.
class SubgroupLattice {
 public:
  const GroupTable& group() const { return group_; }
  int size() const { return static_cast<int>(subgroups_.size()); }
  const Subgroup& at(int i) const { return subgroups_[i]; }
  int order_of(int i) const { return subgroups_[i].order; }

  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  bool is_normal(int i) const { return is_normal_[i]; }
  bool is_maximal(int i) const { return is_maximal_[i]; }

  int conjugacy_class_of(int i) const { return class_of_[i]; }
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }

  /// Index of the subgroup with exactly these members, or -1.
  int index_of(const ElementSet& members) const;

  int meet(int h, int k) const;
  int join(int h, int k) const;

  /// True when h's members are contained in k's.
  bool leq(int h, int k) const { return subgroups_[h].members.is_subset_of(subgroups_[k].members); }

  /// Indices of all subgroups contained in h (the lattice of h itself).
  std::vector<int> interval_below(int h) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const GroupTable&, int);

  void build_flags();
  void ensure_tables() const;

  GroupTable group_;
  std::vector<Subgroup> subgroups_;
  std::map<ElementSet, int> index_;
  std::vector<bool> is_normal_;
  std::vector<bool> is_maximal_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;

  mutable std::unique_ptr<std::once_flag> tables_once_ = std::make_unique<std::once_flag>();
  mutable std::vector<int> join_table_, meet_table_;
  // Built eagerly when the lattice is small enough that the memory is noise.
  static constexpr int kEagerTableLimit = 512;
};

/// Least subgroup containing the seed, by closure under the product.
ElementSet generated_subgroup(const GroupTable& g, const ElementSet& seed);

/// Complete enumeration: all cyclic subgroups, then pairwise joins to a
/// fixed point. Every subgroup is the join of its cyclic subgroups, so the
/// fixed point is the whole lattice.
SubgroupLattice enumerate_subgroups(const GroupTable& g, int lattice_cap = 100000);

Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);

/// Intersection of all maximal proper subgroups; the whole group when no
/// proper subgroup exists.
Subgroup frattini(const SubgroupLattice& l);

/// All subgroups of order p^a where p^a is the largest power of p dividing
/// |G|; empty when p does not divide |G|. The Sylow count congruences are
/// asserted and violate loudly (they never should).
std::vector<int> sylow_subgroups(const SubgroupLattice& l, int p);

/// Finite-group criterion: every Sylow subgroup normal.
bool is_nilpotent(const SubgroupLattice& l);

bool is_cyclic(const GroupTable& g);

}  // namespace iwasawa
