#include "iwasawa/classify.hpp"

#include <algorithm>
#include <string>

#include "iwasawa/numeric.hpp"

namespace iwasawa {

ElementSet product_set(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order);
  for (int x : a.elements())
    for (int y : b.elements()) out.insert(g.mul(x, y));
  return out;
}

bool permute(const SubgroupLattice& l, int h, int k) {
  const GroupTable& g = l.group();
  return product_set(g, l.at(h).members, l.at(k).members) ==
         product_set(g, l.at(k).members, l.at(h).members);
}

bool is_permutable_subgroup(const SubgroupLattice& l, int h) {
  for (int k = 0; k < l.size(); ++k)
    if (!permute(l, h, k)) return false;
  return true;
}

bool is_modular_element(const SubgroupLattice& l, int m) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (l.leq(x, z) && l.join(x, l.meet(m, z)) != l.meet(l.join(x, m), z))
        return false;
      if (l.leq(m, z) && l.join(m, l.meet(x, z)) != l.meet(l.join(m, x), z))
        return false;
    }
  return true;
}

std::optional<PentagonWitness> find_pentagon(const SubgroupLattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        int bottom = l.join(x, l.meet(y, z));
        int top = l.meet(l.join(x, y), z);
        if (bottom != top) return PentagonWitness{x, y, z, bottom, top};
      }
  return std::nullopt;
}

bool is_modular_lattice(const SubgroupLattice& l) { return !find_pentagon(l); }

std::optional<PairWitness> find_non_permuting_pair(const SubgroupLattice& l) {
  for (int h = 0; h < l.size(); ++h)
    for (int k = h + 1; k < l.size(); ++k)
      if (!permute(l, h, k)) return PairWitness{h, k};
  return std::nullopt;
}

bool is_iwasawa(const SubgroupLattice& l) { return !find_non_permuting_pair(l); }

bool is_schmidt(const GroupTable& g, const SubgroupLattice& l) {
  if (is_nilpotent(l)) return false;
  for (int i = 0; i < l.size(); ++i)
    if (l.is_maximal(i) && !group_is_nilpotent(subgroup_table(g, l.at(i).members)))
      return false;
  return true;
}

bool group_is_iwasawa(const GroupTable& g) { return is_iwasawa(enumerate_subgroups(g)); }
bool group_is_modular(const GroupTable& g) { return is_modular_lattice(enumerate_subgroups(g)); }
bool group_is_nilpotent(const GroupTable& g) { return is_nilpotent(enumerate_subgroups(g)); }
bool group_is_cyclic(const GroupTable& g) { return is_cyclic(g); }

bool is_minimal_non(const GroupPredicate& pred, const GroupTable& g,
                    const SubgroupLattice& l, bool hereditary) {
  if (pred(g)) return false;
  for (int i = 0; i < l.full_index(); ++i) {
    if (hereditary && !l.is_maximal(i)) continue;
    if (!pred(subgroup_table(g, l.at(i).members))) return false;
  }
  return true;
}

const SubgroupFlagsCache::Flags& SubgroupFlagsCache::flags(int i) {
  if (by_index_[i]) return *by_index_[i];
  Flags f;
  if (i == lattice_.full_index()) {
    const GroupTable& g = lattice_.group();
    f = {g.is_abelian(), is_cyclic(g), is_nilpotent(lattice_),
         is_modular_lattice(lattice_), is_iwasawa(lattice_)};
  } else {
    GroupTable h = subgroup_table(lattice_.group(), lattice_.at(i).members);
    SubgroupLattice hl = enumerate_subgroups(h);
    f = {h.is_abelian(), is_cyclic(h), is_nilpotent(hl), is_modular_lattice(hl),
         is_iwasawa(hl)};
  }
  by_index_[i] = f;
  return *by_index_[i];
}

namespace {

ElementSet lift(const ElementSet& local, const std::vector<int>& ambient_elems, int ambient_n) {
  ElementSet out(ambient_n);
  for (int i : local.elements()) out.insert(ambient_elems[i]);
  return out;
}

int lattice_index_or_fail(const SubgroupLattice& l, const ElementSet& members,
                          const std::string& what) {
  int idx = l.index_of(members);
  if (idx < 0) fail(ErrorKind::TheoremViolation, what + " is not in the subgroup list");
  return idx;
}

[[noreturn]] void structure_violation(const GroupTable& g, const std::string& bullet) {
  fail(ErrorKind::StructureViolation,
       "Schmidt structure of " + (g.name.empty() ? "group" : g.name) + " fails: " + bullet);
}

}  // namespace

SchmidtStructure extract_schmidt_structure(const GroupTable& g, const SubgroupLattice& l) {
  if (!is_schmidt(g, l))
    fail(ErrorKind::NotSchmidt, (g.name.empty() ? "group" : g.name) + " of order " +
                                    std::to_string(g.order) + " is not a Schmidt group");

  auto factors = prime_factorization(g.order);
  if (factors.size() != 2) structure_violation(g, "order is not of the form p^m q^n");

  SchmidtStructure s;
  // p is the prime whose Sylow subgroup is unique (hence normal).
  int which_p = -1;
  std::vector<std::vector<int>> sylows(2);
  for (int i = 0; i < 2; ++i) {
    sylows[i] = sylow_subgroups(l, static_cast<int>(factors[i].first));
    if (sylows[i].size() == 1) which_p = i;
  }
  if (which_p < 0) structure_violation(g, "no unique Sylow subgroup");

  s.p = static_cast<int>(factors[which_p].first);
  s.m = factors[which_p].second;
  s.q = static_cast<int>(factors[1 - which_p].first);
  s.n = factors[1 - which_p].second;
  s.sylow_p = sylows[which_p][0];
  s.sylow_q = sylows[1 - which_p][0];  // list is index-sorted; minimal chosen
  if (!l.is_normal(s.sylow_p)) structure_violation(g, "Sylow p-subgroup not normal");
  if (sylows[1 - which_p].size() == 1) structure_violation(g, "both Sylow subgroups unique");

  const Subgroup& P = l.at(s.sylow_p);
  const Subgroup& Q = l.at(s.sylow_q);
  for (int a : Q.members.elements())
    if (element_order(g, a) == Q.order) {
      s.y = a;
      break;
    }
  if (s.y < 0) structure_violation(g, "Sylow q-subgroup is not cyclic");

  s.r = static_cast<int>(multiplicative_order(s.p % s.q, s.q));

  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);
  s.center = lattice_index_or_fail(l, z.members, "center");
  s.derived_g = lattice_index_or_fail(l, d.members, "derived subgroup");
  s.frattini_g = lattice_index_or_fail(l, frattini(l).members, "Frattini subgroup");

  // P as a group of its own, then lifted back to ambient indices.
  std::vector<int> p_elems = P.members.elements();
  GroupTable pt = subgroup_table(g, P.members);
  SubgroupLattice pl = enumerate_subgroups(pt);
  ElementSet phi_p = lift(frattini(pl).members, p_elems, g.order);
  ElementSet derived_p = lift(derived_subgroup(pt).members, p_elems, g.order);
  ElementSet center_p = lift(center(pt).members, p_elems, g.order);
  s.frattini_p = lattice_index_or_fail(l, phi_p, "Frattini subgroup of P");
  s.derived_p = lattice_index_or_fail(l, derived_p, "derived subgroup of P");
  s.p_abelian = pt.is_abelian();

  // The structural bullet list, asserted one by one.
  int yq = g.power(s.y, s.q);
  if (!z.members.contains(yq)) structure_violation(g, "y^q is not central");

  ElementSet yq_gen = generated_subgroup(g, ElementSet::single(g.order, yq));
  ElementSet phi_times_yq = generated_subgroup(g, phi_p | yq_gen);
  if (!(z.members == l.at(s.frattini_g).members))
    structure_violation(g, "Z(G) != Phi(G)");
  if (!(z.members == phi_times_yq)) structure_violation(g, "Z(G) != Phi(P) x <y^q>");
  if (static_cast<long long>(phi_p.count()) * yq_gen.count() != phi_times_yq.count() ||
      !(phi_p & yq_gen).is_subset_of(ElementSet::single(g.order, 0)))
    structure_violation(g, "Phi(P) x <y^q> is not a direct product");

  if (!(d.members == P.members)) structure_violation(g, "G' != P");
  if (!(derived_p == phi_p)) structure_violation(g, "P' != Phi(P)");

  long long pr = 1;
  for (int i = 0; i < s.r; ++i) pr *= s.p;
  if (P.order / derived_p.count() != pr) structure_violation(g, "|P/P'| != p^r");

  if (s.p_abelian) {
    if (P.order != pr) structure_violation(g, "abelian P has |P| != p^r");
    for (int a : p_elems)
      if (a != 0 && element_order(g, a) != s.p)
        structure_violation(g, "abelian P is not elementary abelian");
    for (int i = 1; i < l.size() - 1; ++i)
      if (l.is_normal(i) && l.order_of(i) > 1 && l.order_of(i) < P.order &&
          l.leq(i, s.sylow_p))
        structure_violation(g, "abelian P is not a minimal normal subgroup");
  } else {
    if (!(center_p == derived_p)) structure_violation(g, "Z(P) != P'");
    if (P.order / center_p.count() != pr) structure_violation(g, "|P/Z(P)| != p^r");
  }

  return s;
}

ClassificationReport classify(const GroupTable& g) {
  return classify(g, enumerate_subgroups(g));
}

ClassificationReport classify(const GroupTable& g, const SubgroupLattice& l) {
  ClassificationReport r;
  r.name = g.name;
  r.order = g.order;
  r.lattice_size = l.size();
  r.is_abelian = g.is_abelian();
  r.is_cyclic = is_cyclic(g);
  r.is_nilpotent = is_nilpotent(l);
  r.pentagon = find_pentagon(l);
  r.is_modular = !r.pentagon;
  r.non_permuting = find_non_permuting_pair(l);
  r.is_iwasawa = !r.non_permuting;
  r.is_schmidt = is_schmidt(g, l);
  if (r.is_schmidt) r.schmidt = extract_schmidt_structure(g, l);

  SubgroupFlagsCache cache(l);

  bool min_non_iwasawa = !r.is_iwasawa;
  for (int i = 0; i < l.full_index() && min_non_iwasawa; ++i)
    min_non_iwasawa = cache.flags(i).iwasawa;
  r.is_minimal_non_iwasawa = min_non_iwasawa;

  bool is_p_group = prime_factorization(g.order).size() == 1;
  bool min_non_modular_p = is_p_group && !r.is_modular;
  for (int i = 0; i < l.full_index() && min_non_modular_p; ++i)
    min_non_modular_p = cache.flags(i).modular;
  r.is_minimal_non_modular_p_group = min_non_modular_p;

  // Characterization route: minimal non-modular p-group, or Schmidt with
  // modular P. Must coincide with the definitional route.
  bool characterization =
      r.is_minimal_non_modular_p_group ||
      (r.is_schmidt && cache.flags(r.schmidt->sylow_p).modular);
  if (characterization != r.is_minimal_non_iwasawa)
    fail(ErrorKind::TheoremViolation,
         "minimal non-Iwasawa characterization disagrees with the definition on " +
             (g.name.empty() ? "group of order " + std::to_string(g.order) : g.name));

  r.in_class_c = r.is_minimal_non_iwasawa && r.is_modular;
  bool class_c_characterization =
      r.is_schmidt && l.order_of(r.schmidt->sylow_p) == r.schmidt->p;
  if (class_c_characterization != r.in_class_c)
    fail(ErrorKind::TheoremViolation,
         "modular-critical class characterization disagrees on " +
             (g.name.empty() ? "group of order " + std::to_string(g.order) : g.name));

  return r;
}

NonIwasawaProper count_non_iwasawa_proper(const GroupTable& g, const SubgroupLattice& l) {
  NonIwasawaProper out;
  SubgroupFlagsCache cache(l);
  for (int i = 0; i < l.full_index(); ++i)
    if (!cache.flags(i).iwasawa) out.witnesses.push_back(i);
  out.count = static_cast<int>(out.witnesses.size());

  if (out.count == 1) {
    GroupTable h = subgroup_table(g, l.at(out.witnesses[0]).members);
    if (!is_minimal_non(group_is_iwasawa, h, enumerate_subgroups(h)))
      fail(ErrorKind::TheoremViolation,
           "unique non-Iwasawa proper subgroup is not minimal non-Iwasawa in " +
               (g.name.empty() ? "group" : g.name));
  }
  return out;
}

}  // namespace iwasawa
