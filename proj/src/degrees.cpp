#include "iwasawa/degrees.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "iwasawa/numeric.hpp"

namespace iwasawa {

namespace {

std::vector<int> commuting_counts(const SubgroupLattice& l) {
  int n = l.size();
  std::vector<int> c(n, 0);
  for (int h = 0; h < n; ++h) {
    ++c[h];  // (H, H)
    for (int k = h + 1; k < n; ++k)
      if (permute(l, h, k)) {
        ++c[h];
        ++c[k];
      }
  }
  return c;
}

Rational sd_from_counts(const std::vector<int>& c) {
  long long pairs = 0;
  for (int x : c) pairs += x;
  long long n = static_cast<long long>(c.size());
  return Rational(pairs, n * n);
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

}  // namespace

Rational sd_value(const SubgroupLattice& l) { return sd_from_counts(commuting_counts(l)); }

DegreeReport degree_report(const SubgroupLattice& l) {
  DegreeReport rep;
  rep.lattice_size = l.size();
  rep.c_counts = commuting_counts(l);
  rep.commuting_pairs = 0;
  for (int x : rep.c_counts) rep.commuting_pairs += x;
  rep.sd = Rational(rep.commuting_pairs,
                    static_cast<long long>(l.size()) * l.size());

  // f(H) = sd of H as its own group; the full group reuses the counts above.
  rep.f_values.resize(l.size());
  std::map<ElementSet, Rational> memo;
  for (int i = 0; i < l.size(); ++i) {
    if (i == l.full_index()) {
      rep.f_values[i] = rep.sd;
      continue;
    }
    auto it = memo.find(l.at(i).members);
    if (it == memo.end()) {
      GroupTable h = subgroup_table(l.group(), l.at(i).members);
      it = memo.emplace(l.at(i).members, sd_value(enumerate_subgroups(h))).first;
    }
    rep.f_values[i] = it->second;
  }

  // g(H) = sd(H,G); its numerator is the sum of |C(H1)| over H1 <= H.
  rep.g_values.resize(l.size());
  for (int i = 0; i < l.size(); ++i) {
    long long num = 0, sub = 0;
    for (int j = 0; j < l.size(); ++j)
      if (l.leq(j, i)) {
        num += rep.c_counts[j];
        ++sub;
      }
    rep.g_values[i] = Rational(num, sub * l.size());
  }

  for (const auto& cls : l.conjugacy_classes())
    for (int i : cls)
      if (rep.f_values[i] != rep.f_values[cls[0]] || rep.g_values[i] != rep.g_values[cls[0]])
        fail(ErrorKind::TheoremViolation,
             "f or g is not constant on a conjugacy class of " + l.group().name);

  rep.f_image = rep.f_values;
  rep.g_image = rep.g_values;
  for (auto* image : {&rep.f_image, &rep.g_image}) {
    std::sort(image->begin(), image->end());
    image->erase(std::unique(image->begin(), image->end()), image->end());
  }
  return rep;
}

Rational relative_sd(const SubgroupLattice& l, int h) {
  if (h < 0 || h >= l.size())
    fail(ErrorKind::IndexOutOfRange, "subgroup index " + std::to_string(h));
  std::vector<int> lh = l.interval_below(h);
  long long num = 0;
  for (int h1 : lh)
    for (int k = 0; k < l.size(); ++k)
      if (permute(l, h1, k)) ++num;
  return Rational(num, static_cast<long long>(lh.size()) * l.size());
}

std::pair<int, int> image_sizes(const SubgroupLattice& l) {
  DegreeReport rep = degree_report(l);
  int imf = static_cast<int>(rep.f_image.size());
  int img = static_cast<int>(rep.g_image.size());
  bool iwasawa = is_iwasawa(l);
  if ((imf == 1) != iwasawa || (img == 1) != iwasawa)
    fail(ErrorKind::TheoremViolation,
         "|Im f| or |Im g| = 1 disagrees with the Iwasawa check on " + l.group().name);
  return {imf, img};
}

Rational family_sd_closed_form(long long p, long long q, long long n) {
  if (!is_prime(p) || !is_prime(q))
    fail(ErrorKind::HypothesisViolated,
         "p and q must be prime, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  if (p % q != 1)
    fail(ErrorKind::HypothesisViolated, "p must be 1 mod q, got p=" + std::to_string(p) +
                                            " q=" + std::to_string(q));
  if (n < 1) fail(ErrorKind::HypothesisViolated, "n must be >= 1");
  long long size = 2 * n + 1 + p;
  return Rational(1) - Rational(p * p - p, size * size);
}

std::vector<FamilyRow> family_report(int p, int q, int n_max, int t) {
  family_sd_closed_form(p, q, 1);  // validates p, q up front
  if (t == 0) t = least_metacyclic_action(p, q);

  std::vector<FamilyRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    GroupTable g = metacyclic({p, q, n, t});
    SubgroupLattice l = enumerate_subgroups(g);

    FamilyRow row;
    row.n = n;
    row.lattice_size = l.size();
    row.sd_closed_form = family_sd_closed_form(p, q, n);
    row.gap_to_1 = Rational(1) - row.sd_closed_form;

    auto err = [&](const std::string& msg) {
      fail(ErrorKind::TheoremViolation, g.name + " (n=" + std::to_string(n) + "): " + msg);
    };

    if (l.size() != 2 * n + 1 + p) err("lattice size != 2n+1+p");

    DegreeReport rep = degree_report(l);
    row.sd_bruteforce = rep.sd;
    if (row.sd_bruteforce != row.sd_closed_form)
      err("brute-force sd " + rep.sd.str() + " != closed form " + row.sd_closed_form.str());

    if (!classify(g, l).in_class_c) err("group is not in the modular-critical class");

    // Non-normal subgroups are exactly the p conjugates of the Sylow
    // q-subgroup, and the C(H) counts split accordingly.
    std::vector<int> sylow_q = sylow_subgroups(l, q);
    if (static_cast<int>(sylow_q.size()) != p) err("Sylow q-subgroup count != p");
    int qclass = l.conjugacy_class_of(sylow_q[0]);
    for (int i = 0; i < l.size(); ++i) {
      bool conj_of_q = l.conjugacy_class_of(i) == qclass;
      if (l.is_normal(i) == conj_of_q)
        err("non-normal subgroups are not exactly the conjugates of Q");
      if (l.is_normal(i) && rep.c_counts[i] != l.size())
        err("|C(H)| != |L| for a normal subgroup");
      if (!l.is_normal(i) && rep.c_counts[i] != l.size() - p + 1)
        err("|C(Q_i)| != |L| - p + 1");
    }

    if (!rows.empty() && !(row.gap_to_1 < rows.back().gap_to_1))
      err("gap to 1 is not strictly decreasing");
    rows.push_back(row);
  }
  return rows;
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::string out = "n,lattice_size,sd_num,sd_den,sd_decimal,gap_to_1\n";
  for (const FamilyRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.lattice_size) + "," +
           std::to_string(r.sd_bruteforce.num()) + "," +
           std::to_string(r.sd_bruteforce.den()) + "," + decimal(r.sd_bruteforce) + "," +
           r.gap_to_1.str() + "\n";
  }
  return out;
}

}  // namespace iwasawa
