#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "iwasawa/lattice.hpp"

namespace iwasawa {

/// Product set AB = {a*b : a in A, b in B}.
ElementSet product_set(const GroupTable& g, const ElementSet& a, const ElementSet& b);

/// HK = KH as element sets. This is the primary definition; the algebraic
/// shortcut |H v K| = |H||K|/|H ^ K| is only ever used to cross-check it.
bool permute(const SubgroupLattice& l, int h, int k);

/// H permutes with every subgroup of the lattice.
bool is_permutable_subgroup(const SubgroupLattice& l, int h);

/// Modular element in the lattice sense, both implications:
///   (i)  x <= z  implies  x v (m ^ z) = (x v m) ^ z
///   (ii) m <= z  implies  m v (y ^ z) = (m v y) ^ z
/// quantified over all pairs of subgroups.
bool is_modular_element(const SubgroupLattice& l, int m);

/// A failed instance of the modular law x <= z: the five subgroups involved.
struct PentagonWitness {
  int x = -1, y = -1, z = -1;
  int bottom = -1;  // x v (y ^ z)
  int top = -1;     // (x v y) ^ z
};

/// First triple violating the modular law, scanning (x, y, z) in index
/// order; nullopt when the lattice is modular.
std::optional<PentagonWitness> find_pentagon(const SubgroupLattice& l);

bool is_modular_lattice(const SubgroupLattice& l);

struct PairWitness {
  int h = -1, k = -1;
};

/// First subgroup pair with HK != KH, or nullopt (the Iwasawa case).
std::optional<PairWitness> find_non_permuting_pair(const SubgroupLattice& l);

bool is_iwasawa(const SubgroupLattice& l);

/// Minimal non-nilpotent: G itself is not nilpotent but every maximal
/// subgroup is. Nilpotency is subgroup-closed, so checking maximal
/// subgroups decides all proper ones; the heredity itself is covered by
/// corpus tests rather than trusted silently.
bool is_schmidt(const GroupTable& g, const SubgroupLattice& l);

/// The decomposition of a Schmidt group G = P Q: |G| = p^m q^n with a
/// unique normal Sylow p-subgroup P and cyclic Sylow q-subgroup Q = <y>.
/// All indices refer to the ambient lattice. Extraction verifies every
/// structural invariant and fails with StructureViolation if any is off.
struct SchmidtStructure {
  int p = 0, q = 0;
  int m = 0, n = 0;       // |G| = p^m q^n
  int sylow_p = -1;       // P
  int sylow_q = -1;       // Q, the minimal-index Sylow q-subgroup
  int y = -1;             // minimal generator of Q
  int r = 0;              // multiplicative order of p modulo q
  int center = -1;        // Z(G)
  int frattini_g = -1;    // Phi(G)
  int frattini_p = -1;    // Phi(P)
  int derived_g = -1;     // G'
  int derived_p = -1;     // P'
  bool p_abelian = false;
};

SchmidtStructure extract_schmidt_structure(const GroupTable& g, const SubgroupLattice& l);

using GroupPredicate = std::function<bool(const GroupTable&)>;

/// Predicates on a plain table, each enumerating what it needs internally.
bool group_is_iwasawa(const GroupTable& g);
bool group_is_modular(const GroupTable& g);
bool group_is_nilpotent(const GroupTable& g);
bool group_is_cyclic(const GroupTable& g);

/// G fails the predicate while every proper subgroup satisfies it. With
/// hereditary=true only maximal subgroups are evaluated, which is valid
/// exactly when the predicate passes down to subgroups.
bool is_minimal_non(const GroupPredicate& pred, const GroupTable& g,
                    const SubgroupLattice& l, bool hereditary = false);

/// Memoized per-subgroup flags, each subgroup evaluated as a group in its
/// own right. One cache per classification run.
class SubgroupFlagsCache {
 public:
  struct Flags {
    bool abelian = false, cyclic = false, nilpotent = false, modular = false,
         iwasawa = false;
  };

  explicit SubgroupFlagsCache(const SubgroupLattice& l)
      : lattice_(l), by_index_(l.size()) {}

  const Flags& flags(int subgroup_index);

 private:
  const SubgroupLattice& lattice_;
  std::vector<std::optional<Flags>> by_index_;
};

struct ClassificationReport {
  std::string name;
  int order = 1;
  int lattice_size = 1;
  bool is_abelian = false;
  bool is_cyclic = false;
  bool is_nilpotent = false;
  bool is_modular = false;
  bool is_iwasawa = false;
  bool is_schmidt = false;
  bool is_minimal_non_iwasawa = false;
  bool is_minimal_non_modular_p_group = false;
  bool in_class_c = false;
  std::optional<SchmidtStructure> schmidt;
  std::optional<PairWitness> non_permuting;  // set when not Iwasawa
  std::optional<PentagonWitness> pentagon;   // set when not modular
};

/// Full classification. Minimal non-Iwasawa status is computed twice, from
/// the definition and from its characterization (minimal non-modular
/// p-group, or Schmidt group with modular P); likewise membership in the
/// modular-critical class is recomputed as "Schmidt with |P| = p". Any
/// disagreement raises TheoremViolation instead of trusting either route.
ClassificationReport classify(const GroupTable& g);
ClassificationReport classify(const GroupTable& g, const SubgroupLattice& l);

struct NonIwasawaProper {
  int count = 0;
  std::vector<int> witnesses;  // lattice indices of non-Iwasawa proper subgroups
};

/// Proper subgroups that fail to be Iwasawa groups. When exactly one
/// exists it is verified to be minimal non-Iwasawa (TheoremViolation if
/// not, which should never fire).
NonIwasawaProper count_non_iwasawa_proper(const GroupTable& g, const SubgroupLattice& l);

}  // namespace iwasawa
