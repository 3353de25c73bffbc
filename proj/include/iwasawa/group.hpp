#pragma once

#include <string>
#include <vector>

#include "iwasawa/bitset.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

/// A finite group given by its full multiplication table over element
/// indices 0..order-1. The identity always sits at index 0 (constructors
/// relabel ingested tables to keep that convention). Immutable once built;
/// safe to share across threads.
struct GroupTable {
  int order = 1;
  std::vector<int> table{0};    // row-major: table[a * order + b] = a*b
  std::vector<int> inverse{0};  // inverse[a] * a = a * inverse[a] = identity
  std::string name;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }

  /// a^e for any integer exponent (negative exponents go through inverse).
  int power(int a, long long e) const;

  /// g a g^-1
  int conjugate(int g, int a) const { return mul(mul(g, a), inv(g)); }

  bool is_abelian() const;
};

/// A permutation of 0..degree-1 in image form: images[i] is where i goes.
struct Permutation {
  int degree = 0;
  std::vector<int> images;

  static Permutation identity(int degree);
  /// this after other: (a*b)(i) = a(b(i))
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;
};

/// Order cap applied by group constructors and lattice enumeration.
/// Default 20000; overridable via the IWASAWA_ORDER_CAP environment variable.
int order_cap();

/// Validate a raw square table and return the group it defines, with the
/// identity relabeled to index 0. Checks run in this order: entry range,
/// two-sided identity, associativity over all triples, Latin-square rows
/// and columns. Each failure names the first witness found.
GroupTable from_cayley_table(const std::vector<std::vector<int>>& raw);

/// Breadth-first closure of the generators under composition; element 0 is
/// the identity. An empty generator list yields the trivial group.
GroupTable from_permutations(int degree, const std::vector<Permutation>& generators);
GroupTable from_permutations(const std::vector<Permutation>& generators);

GroupTable cyclic(int n);

/// Pairs (a, b) indexed a*|b|+b with componentwise product.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Parameters of the split metacyclic group of order p*q^n: pairs (a, b)
/// with a mod p, b mod q^n and product (a,b)(a',b') = (a + t^b a', b + b').
/// t must have multiplicative order exactly q modulo p.
struct MetacyclicParams {
  int p = 0;
  int q = 0;
  int n = 1;
  int t = 0;
};

GroupTable metacyclic(const MetacyclicParams& params);

/// Least t in (1, p) of multiplicative order q modulo p; the "auto" action.
/// Fails with InvalidAction when none exists (i.e. q does not divide p-1).
int least_metacyclic_action(int p, int q);

/// Hardcoded catalog: trivial, Z_<n>, S_3, S_4, A_4, Q_8, D_8, QD16, SL23,
/// M16, Dic3.
GroupTable named(const std::string& name);

/// Group on the cosets of a normal subgroup; coset representatives are the
/// minimal element index of each coset, sorted ascending.
GroupTable quotient(const GroupTable& g, const ElementSet& normal_subgroup);

/// Least k >= 1 with a^k = identity.
int element_order(const GroupTable& g, int a);

/// Multiset of element orders as sorted (order, multiplicity) pairs; an
/// isomorphism invariant used as a cheap smoke oracle in tests.
std::vector<std::pair<int, int>> element_order_census(const GroupTable& g);

/// The multiplication table of a subgroup as a group in its own right.
/// Members are relabeled by their rank within the subgroup, so the ambient
/// identity 0 stays at index 0.
GroupTable subgroup_table(const GroupTable& g, const ElementSet& members,
                          const std::string& name = "");

}  // namespace iwasawa
