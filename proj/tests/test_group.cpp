#include <doctest.h>

#include "iwasawa/classify.hpp"
#include "iwasawa/group.hpp"
#include "iwasawa/lattice.hpp"

using namespace iwasawa;

namespace {

using Census = std::vector<std::pair<int, int>>;

// The order-5 loop with two-sided identity that fails associativity at
// (1,1,2): a Latin square that is not a group.
const std::vector<std::vector<int>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};

std::vector<std::vector<int>> table_of(const GroupTable& g) {
  std::vector<std::vector<int>> raw(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) raw[a][b] = g.mul(a, b);
  return raw;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("trivial and order-2 tables") {
  GroupTable t = from_cayley_table({{0}});
  CHECK(t.order == 1);
  CHECK(t.mul(0, 0) == 0);

  GroupTable z2 = from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2.order == 2);
  CHECK(z2.mul(1, 1) == 0);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("cayley validation rejects the order-5 loop with a named triple") {
  try {
    from_cayley_table(kLoop5);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(std::string(e.what()).find("(1,1,2)") != std::string::npos);
  }
}

TEST_CASE("cayley validation error kinds") {
  CHECK(kind_of([] { from_cayley_table({{0, 1}, {1, 5}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { from_cayley_table({{0, 1, 2}, {1, 2, 0}}); }) == ErrorKind::IndexOutOfRange);
  // i - j mod 3 has only a right identity.
  CHECK(kind_of([] { from_cayley_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}); }) ==
        ErrorKind::NoIdentity);
  // Associative with identity but a repeated row entry.
  CHECK(kind_of([] { from_cayley_table({{0, 1}, {1, 1}}); }) == ErrorKind::NotLatinSquare);
}

TEST_CASE("one-entry mutations of the S_3 table are always rejected") {
  auto raw = table_of(named("S_3"));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto bad = raw;
      bad[a][b] = (bad[a][b] + 1) % 6;
      CHECK_THROWS_AS(from_cayley_table(bad), Error);
    }
}

TEST_CASE("ingested identity is relabeled to index 0") {
  // Z_2 written with the identity at index 1.
  GroupTable g = from_cayley_table({{1, 0}, {0, 1}});
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.table == cyclic(2).table);

  // Z_3 written with the identity at index 2.
  GroupTable h = from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(h.table == cyclic(3).table);
}

TEST_CASE("from_permutations closes generators") {
  Permutation swap01{3, {1, 0, 2}}, rot{3, {1, 2, 0}};
  GroupTable s3 = from_permutations({swap01, rot});
  CHECK(s3.order == 6);

  GroupTable z3 = from_permutations({rot});
  CHECK(z3.order == 3);

  Permutation a{4, {1, 0, 3, 2}}, b{4, {2, 3, 0, 1}};
  GroupTable v4 = from_permutations({a, b});
  CHECK(v4.order == 4);
  CHECK(element_order_census(v4) == Census{{1, 1}, {2, 3}});

  CHECK(kind_of([&] { return from_permutations({swap01, a}); }) == ErrorKind::DegreeMismatch);
  CHECK(from_permutations(5, {}).order == 1);
}

TEST_CASE("from_permutations is generator-order independent up to census") {
  Permutation t{4, {1, 0, 2, 3}}, c{4, {1, 2, 3, 0}};
  CHECK(element_order_census(from_permutations({t, c})) ==
        element_order_census(from_permutations({c, t})));
}

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).order == 1);
  GroupTable z3 = cyclic(3);
  for (int a = 0; a < 3; ++a) CHECK(z3.power(a, 3) == 0);
  CHECK(element_order(cyclic(8), 1) == 8);
}

TEST_CASE("direct products") {
  GroupTable z6 = direct_product(cyclic(2), cyclic(3));
  CHECK(z6.order == 6);
  bool has_order6 = false;
  for (int a = 0; a < 6; ++a) has_order6 |= element_order(z6, a) == 6;
  CHECK(has_order6);

  GroupTable g = named("S_3");
  CHECK(direct_product(cyclic(1), g).table == g.table);
  CHECK(direct_product(g, cyclic(1)).table == g.table);

  GroupTable s3z5 = direct_product(named("S_3"), cyclic(5));
  CHECK(s3z5.order == 30);
  CHECK_FALSE(is_nilpotent(enumerate_subgroups(s3z5)));
}

TEST_CASE("metacyclic constructions") {
  // p=3, q=2, n=1, t=2 is S_3: three involutions, two 3-elements.
  CHECK(element_order_census(metacyclic({3, 2, 1, 2})) == Census{{1, 1}, {2, 3}, {3, 2}});

  // p=3, q=2, n=2: unique Sylow 3-subgroup.
  SubgroupLattice l = enumerate_subgroups(metacyclic({3, 2, 2, 2}));
  CHECK(sylow_subgroups(l, 3).size() == 1);
  CHECK(sylow_subgroups(l, 2).size() == 3);

  // p=5, q=2, n=1, t=4 is the dihedral group of order 10.
  CHECK(element_order_census(metacyclic({5, 2, 1, 4})) == Census{{1, 1}, {2, 5}, {5, 4}});

  CHECK(kind_of([] { return metacyclic({5, 2, 1, 2}); }) == ErrorKind::InvalidAction);
  CHECK(kind_of([] { return metacyclic({3, 3, 1, 2}); }) == ErrorKind::InvalidAction);
  CHECK(kind_of([] { return metacyclic({9, 2, 1, 8}); }) == ErrorKind::InvalidAction);

  CHECK(least_metacyclic_action(3, 2) == 2);
  CHECK(least_metacyclic_action(7, 3) == 2);
  CHECK(least_metacyclic_action(13, 3) == 3);
  CHECK(kind_of([] { return least_metacyclic_action(5, 3); }) == ErrorKind::InvalidAction);
}

TEST_CASE("named groups have the right shape") {
  CHECK(named("trivial").order == 1);
  CHECK(named("Z_12").order == 12);
  CHECK(named("S_3").order == 6);
  CHECK(named("S_4").order == 24);
  CHECK(named("A_4").order == 12);
  CHECK(named("Dic3").order == 12);
  CHECK(named("D_8").order == 8);

  CHECK(element_order_census(named("Q_8")) == Census{{1, 1}, {2, 1}, {4, 6}});
  CHECK(element_order_census(named("SL23")) ==
        Census{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});

  for (int a = 0; a < 12; ++a) {
    int k = element_order(named("A_4"), a);
    CHECK((k == 1 || k == 2 || k == 3));
  }

  CHECK(kind_of([] { return named("E_8"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { return named("Z_x"); }) == ErrorKind::UnknownName);
}

TEST_CASE("QD16 and M16 satisfy their defining relations") {
  for (auto [name, exponent] : {std::pair{"QD16", 3}, std::pair{"M16", 5}}) {
    GroupTable g = named(name);
    CHECK(g.order == 16);
    int x = -1;
    for (int a = 0; a < 16 && x < 0; ++a)
      if (element_order(g, a) == 8) x = a;
    REQUIRE(x >= 0);
    ElementSet x_cyclic = generated_subgroup(g, ElementSet::single(16, x));
    int involutions_outside = 0;
    for (int y = 0; y < 16; ++y) {
      if (element_order(g, y) != 2 || x_cyclic.contains(y)) continue;
      ++involutions_outside;
      CHECK(g.mul(g.mul(y, x), y) == g.power(x, exponent));
    }
    CHECK(involutions_outside > 0);
  }
}

TEST_CASE("SL23 has a quaternion Sylow 2-subgroup") {
  GroupTable g = named("SL23");
  SubgroupLattice l = enumerate_subgroups(g);
  auto syl2 = sylow_subgroups(l, 2);
  REQUIRE(syl2.size() == 1);
  GroupTable p = subgroup_table(g, l.at(syl2[0]).members);
  CHECK(element_order_census(p) == Census{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("quotients") {
  GroupTable g = named("S_3");
  SubgroupLattice l = enumerate_subgroups(g);

  CHECK(quotient(g, l.at(0).members).table == g.table);
  CHECK(quotient(g, l.at(l.full_index()).members).order == 1);

  // S_3 / A_3 has order 2.
  ElementSet a3(6);
  for (int a = 0; a < 6; ++a)
    if (element_order(g, a) != 2) a3.insert(a);
  CHECK(quotient(g, a3).order == 2);

  ElementSet transposition = generated_subgroup(g, ElementSet::single(6, l.at(1).members.elements()[1]));
  CHECK(kind_of([&] { return quotient(g, transposition); }) == ErrorKind::NotNormal);
}

TEST_CASE("SL23 modulo its center is a Schmidt group with |P| = 4") {
  GroupTable g = named("SL23");
  GroupTable q = quotient(g, center(g).members);
  CHECK(q.order == 12);
  SubgroupLattice ql = enumerate_subgroups(q);
  REQUIRE(is_schmidt(q, ql));
  SchmidtStructure s = extract_schmidt_structure(q, ql);
  CHECK(s.p == 2);
  CHECK(s.p_abelian);
  CHECK(ql.order_of(s.sylow_p) == 4);
}

TEST_CASE("element orders") {
  CHECK(element_order(named("S_4"), 0) == 1);
  GroupTable z8 = cyclic(8);
  for (int a = 0; a < 8; ++a) CHECK(8 % element_order(z8, a) == 0);
}

TEST_CASE("every constructor output re-validates with the identity at 0") {
  std::vector<GroupTable> groups;
  for (const char* n :
       {"S_3", "S_4", "A_4", "Q_8", "D_8", "QD16", "M16", "SL23", "Dic3", "Z_16"})
    groups.push_back(named(n));
  groups.push_back(direct_product(named("S_3"), cyclic(5)));
  groups.push_back(direct_product(cyclic(2), cyclic(4)));
  groups.push_back(metacyclic({5, 2, 2, 4}));
  groups.push_back(quotient(named("SL23"), center(named("SL23")).members));

  for (const GroupTable& g : groups) {
    CAPTURE(g.name);
    GroupTable revalidated = from_cayley_table(table_of(g));
    CHECK(revalidated.table == g.table);
    CHECK(revalidated.inverse == g.inverse);
  }
}
