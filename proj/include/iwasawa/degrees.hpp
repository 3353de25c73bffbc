#pragma once

#include <vector>

#include "iwasawa/classify.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

/// Everything the subgroup commutativity degree of one group breaks into:
///   sd        = |{(H,K) in L(G)^2 : HK = KH}| / |L(G)|^2 as an exact fraction,
///   c_counts  = |C(H)| = #{K : HK = KH} per subgroup,
///   f_values  = sd(H) with H as its own group, per subgroup,
///   g_values  = sd(H,G), per subgroup,
/// with the images of f and g deduplicated and sorted. f and g being
/// constant on conjugacy classes is asserted during construction.
struct DegreeReport {
  Rational sd;
  int lattice_size = 1;
  long long commuting_pairs = 1;
  std::vector<int> c_counts;
  std::vector<Rational> f_values, g_values;
  std::vector<Rational> f_image, g_image;
};

/// Ordered-pair permutability counts over the whole lattice; the symmetric
/// half is scanned once and mirrored.
Rational sd_value(const SubgroupLattice& l);

DegreeReport degree_report(const SubgroupLattice& l);

/// sd(H,G) over L(H) x L(G), where L(H) is the ambient subgroups contained
/// in H. relative_sd(l, full) equals sd_value(l).
Rational relative_sd(const SubgroupLattice& l, int h);

/// (|Im f|, |Im g|). Both sizes equal 1 exactly for Iwasawa groups; that
/// equivalence is asserted against the direct permutability check.
std::pair<int, int> image_sizes(const SubgroupLattice& l);

/// The exact degree 1 - (p^2 - p)/(2n + 1 + p)^2 of the modular-critical
/// metacyclic group of order p*q^n. Requires p, q prime with p = 1 mod q.
Rational family_sd_closed_form(long long p, long long q, long long n);

struct FamilyRow {
  int n = 0;
  int lattice_size = 0;
  Rational sd_bruteforce;
  Rational sd_closed_form;
  Rational gap_to_1;
};

/// One row per n in 1..n_max for the family Z_p : Z_{q^n}. Each row is
/// cross-verified: the group lies in the modular-critical class, the
/// lattice has exactly 2n+1+p subgroups, brute force equals the closed
/// form, the non-normal subgroups are exactly the p conjugates of the
/// Sylow q-subgroup with |C(Q_i)| = |L|-p+1, and the gap to 1 shrinks
/// strictly. Violations raise TheoremViolation.
std::vector<FamilyRow> family_report(int p, int q, int n_max, int t = 0 /* 0 = auto */);

/// CSV with header "n,lattice_size,sd_num,sd_den,sd_decimal,gap_to_1".
std::string family_csv(const std::vector<FamilyRow>& rows);

}  // namespace iwasawa
