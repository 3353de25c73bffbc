#include "iwasawa/verify.hpp"

#include <functional>
#include <optional>
#include <set>

#include "iwasawa/classify.hpp"
#include "iwasawa/degrees.hpp"
#include "iwasawa/group_io.hpp"
#include "iwasawa/numeric.hpp"

namespace iwasawa {

namespace {

struct EntryContext {
  std::string label;
  GroupTable g;
  SubgroupLattice l;

  std::optional<ClassificationReport> cls_;
  std::optional<DegreeReport> deg_;
  std::optional<SubgroupFlagsCache> cache_;

  const ClassificationReport& cls() {
    if (!cls_) cls_ = classify(g, l);
    return *cls_;
  }
  const DegreeReport& deg() {
    if (!deg_) deg_ = degree_report(l);
    return *deg_;
  }
  SubgroupFlagsCache& cache() {
    if (!cache_) cache_.emplace(l);
    return *cache_;
  }
};

using CheckResult = std::optional<std::string>;  // failure witness, or pass
using CheckFn = std::function<CheckResult(EntryContext&)>;

struct Check {
  std::string id;
  CheckFn fn;
};

std::string sub(const SubgroupLattice& l, int i) {
  return "subgroup " + std::to_string(i) + " (order " + std::to_string(l.order_of(i)) + ")";
}

CheckResult check_lattice_invariants(EntryContext& c) {
  const SubgroupLattice& l = c.l;
  int n = c.g.order;
  if (l.order_of(0) != 1) return "first subgroup is not trivial";
  if (l.order_of(l.full_index()) != n) return "last subgroup is not the whole group";
  for (int i = 0; i < l.size(); ++i) {
    if (n % l.order_of(i) != 0) return sub(l, i) + " violates Lagrange";
    bool singleton = l.conjugacy_classes()[l.conjugacy_class_of(i)].size() == 1;
    if (singleton != l.is_normal(i)) return sub(l, i) + ": singleton class vs normal mismatch";
    for (int j : l.conjugacy_classes()[l.conjugacy_class_of(i)])
      if (l.order_of(j) != l.order_of(i)) return "conjugates of " + sub(l, i) + " differ in order";
  }
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j <= i; ++j) {
      int m = l.meet(i, j), v = l.join(i, j);
      if (m < 0 || v < 0) return "meet/join missing for (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!(l.at(m).members == (l.at(i).members & l.at(j).members)))
        return "meet is not the intersection at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!l.leq(i, v) || !l.leq(j, v)) return "join does not contain both arguments";
    }
  for (auto [p, e] : prime_factorization(n))
    sylow_subgroups(l, static_cast<int>(p));  // asserts the count congruences
  return std::nullopt;
}

CheckResult check_product_permute_consistency(EntryContext& c) {
  const SubgroupLattice& l = c.l;
  for (int h = 0; h < l.size(); ++h)
    for (int k = h; k < l.size(); ++k) {
      bool by_sets = permute(l, h, k);
      bool by_orders = static_cast<long long>(l.order_of(l.join(h, k))) *
                           l.order_of(l.meet(h, k)) ==
                       static_cast<long long>(l.order_of(h)) * l.order_of(k);
      bool listed = l.index_of(product_set(c.g, l.at(h).members, l.at(k).members)) >= 0;
      if (by_sets != by_orders || by_sets != listed)
        return "set/order/listing routes disagree for (" + std::to_string(h) + "," +
               std::to_string(k) + ")";
    }
  return std::nullopt;
}

CheckResult check_permutable_implies_modular(EntryContext& c) {
  for (int h = 0; h < c.l.size(); ++h)
    if (is_permutable_subgroup(c.l, h) && !is_modular_element(c.l, h))
      return sub(c.l, h) + " is permutable but not a modular element";
  return std::nullopt;
}

CheckResult check_iwasawa_iff_nilpotent_modular(EntryContext& c) {
  bool iw = is_iwasawa(c.l);
  bool nm = is_nilpotent(c.l) && is_modular_lattice(c.l);
  if (iw != nm)
    return std::string("Iwasawa check = ") + (iw ? "true" : "false") +
           " but nilpotent&modular = " + (nm ? "true" : "false");
  return std::nullopt;
}

CheckResult check_heredity(EntryContext& c) {
  const auto& top = c.cache().flags(c.l.full_index());
  struct Pred {
    const char* name;
    bool SubgroupFlagsCache::Flags::* member;
  };
  for (Pred p : std::initializer_list<Pred>{{"cyclic", &SubgroupFlagsCache::Flags::cyclic},
                                            {"nilpotent", &SubgroupFlagsCache::Flags::nilpotent},
                                            {"iwasawa", &SubgroupFlagsCache::Flags::iwasawa},
                                            {"modular", &SubgroupFlagsCache::Flags::modular}}) {
    if (!(top.*(p.member))) continue;
    for (int i = 0; i < c.l.size(); ++i)
      if (!(c.cache().flags(i).*(p.member)))
        return std::string(p.name) + " fails to pass down to " + sub(c.l, i);
  }
  return std::nullopt;
}

CheckResult check_schmidt_detection(EntryContext& c) {
  bool all_proper_nilpotent = true;
  for (int i = 0; i < c.l.full_index() && all_proper_nilpotent; ++i)
    all_proper_nilpotent = c.cache().flags(i).nilpotent;
  bool expected = !is_nilpotent(c.l) && all_proper_nilpotent;
  if (is_schmidt(c.g, c.l) != expected)
    return "maximal-subgroup route disagrees with the all-proper-subgroup definition";
  return std::nullopt;
}

CheckResult check_schmidt_structure(EntryContext& c) {
  if (c.cls().is_schmidt) {
    extract_schmidt_structure(c.g, c.l);  // throws StructureViolation on any broken bullet
    return std::nullopt;
  }
  try {
    extract_schmidt_structure(c.g, c.l);
    return std::string("extraction did not reject a non-Schmidt group");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSchmidt) throw;
  }
  return std::nullopt;
}

CheckResult check_schmidt_maximal_subgroups(EntryContext& c) {
  if (!c.cls().is_schmidt) return std::nullopt;
  const SchmidtStructure& s = *c.cls().schmidt;
  if (!c.cache().flags(s.sylow_p).modular) return std::nullopt;

  const SubgroupLattice& l = c.l;
  int yq = c.g.power(s.y, s.q);
  int yq_sub = l.index_of(generated_subgroup(c.g, ElementSet::single(c.g.order, yq)));
  if (yq_sub < 0) return std::string("<y^q> not listed");
  int p_times_yq = l.join(s.sylow_p, yq_sub);

  std::set<int> allowed{p_times_yq};
  for (int qi : l.conjugacy_classes()[l.conjugacy_class_of(s.sylow_q)]) {
    int m = l.join(s.frattini_p, qi);
    allowed.insert(m);
    if (!subgroup_table(c.g, l.at(m).members).is_abelian())
      return "Phi(P)Q_i at " + sub(l, m) + " is not abelian";
  }
  for (int i = 0; i < l.size(); ++i)
    if (l.is_maximal(i) && !allowed.count(i))
      return "maximal " + sub(l, i) + " is neither P x <y^q> nor Phi(P)Q_i";
  return std::nullopt;
}

CheckResult check_minimal_non_iwasawa_characterization(EntryContext& c) {
  // classify() itself refuses to return when its two routes disagree; this
  // recomputes the definitional side through the generic path as well.
  bool by_definition = is_minimal_non(group_is_iwasawa, c.g, c.l);
  if (by_definition != c.cls().is_minimal_non_iwasawa)
    return "generic minimal-non evaluation disagrees with the classification report";
  bool characterization =
      c.cls().is_minimal_non_modular_p_group ||
      (c.cls().is_schmidt && c.cache().flags(c.cls().schmidt->sylow_p).modular);
  if (characterization != by_definition)
    return std::string("definition says ") + (by_definition ? "true" : "false") +
           ", characterization says " + (characterization ? "true" : "false");
  return std::nullopt;
}

CheckResult check_modular_critical_class(EntryContext& c) {
  bool in_c = c.cls().in_class_c;
  bool characterization = c.cls().is_schmidt &&
                          c.l.order_of(c.cls().schmidt->sylow_p) == c.cls().schmidt->p;
  if (in_c != characterization)
    return std::string("membership says ") + (in_c ? "true" : "false") +
           ", Schmidt-with-|P|=p says " + (characterization ? "true" : "false");
  if (in_c) {
    const SchmidtStructure& s = *c.cls().schmidt;
    if (c.l.order_of(s.sylow_p) != s.p) return "|P| != p on a critical group";
    if (c.l.order_of(s.sylow_p) / c.l.order_of(s.derived_p) != s.p)
      return "|P/P'| != p on a critical group";
  }
  return std::nullopt;
}

CheckResult check_critical_minimal_non_cyclic(EntryContext& c) {
  if (!c.cls().in_class_c) return std::nullopt;
  if (!is_minimal_non(group_is_cyclic, c.g, c.l))
    return std::string("critical group is not minimal non-cyclic");
  for (int i = 0; i < c.l.size(); ++i)
    if (c.l.is_maximal(i) && !c.cache().flags(i).cyclic)
      return "maximal " + sub(c.l, i) + " of a critical group is not cyclic";
  return std::nullopt;
}

CheckResult check_sd_one_iff_iwasawa(EntryContext& c) {
  bool sd_one = c.deg().sd == Rational(1);
  bool iw = is_iwasawa(c.l);
  if (sd_one != iw)
    return "sd = " + c.deg().sd.str() + " but Iwasawa = " + (iw ? "true" : "false");
  return std::nullopt;
}

CheckResult check_fg_constant_on_classes(EntryContext& c) {
  const DegreeReport& rep = c.deg();
  for (const auto& cls : c.l.conjugacy_classes())
    for (int i : cls)
      if (rep.f_values[i] != rep.f_values[cls[0]] || rep.g_values[i] != rep.g_values[cls[0]])
        return "f or g varies on the conjugacy class of " + sub(c.l, i);
  return std::nullopt;
}

CheckResult check_image_sizes_iff_iwasawa(EntryContext& c) {
  bool iw = is_iwasawa(c.l);
  bool imf1 = c.deg().f_image.size() == 1;
  bool img1 = c.deg().g_image.size() == 1;
  if (imf1 != iw || img1 != iw)
    return "|Im f| = " + std::to_string(c.deg().f_image.size()) +
           ", |Im g| = " + std::to_string(c.deg().g_image.size()) +
           " vs Iwasawa = " + (iw ? "true" : "false");
  return std::nullopt;
}

CheckResult check_minimal_non_iwasawa_imf_two(EntryContext& c) {
  if (c.cls().is_minimal_non_iwasawa && c.deg().f_image.size() != 2)
    return "|Im f| = " + std::to_string(c.deg().f_image.size()) +
           " on a minimal non-Iwasawa group";
  return std::nullopt;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"lattice-invariants", check_lattice_invariants},
      {"product-permute-consistency", check_product_permute_consistency},
      {"permutable-implies-modular", check_permutable_implies_modular},
      {"iwasawa-iff-nilpotent-modular", check_iwasawa_iff_nilpotent_modular},
      {"heredity", check_heredity},
      {"schmidt-detection", check_schmidt_detection},
      {"schmidt-structure", check_schmidt_structure},
      {"schmidt-maximal-subgroups", check_schmidt_maximal_subgroups},
      {"minimal-non-iwasawa-characterization", check_minimal_non_iwasawa_characterization},
      {"modular-critical-class", check_modular_critical_class},
      {"critical-minimal-non-cyclic", check_critical_minimal_non_cyclic},
      {"sd-one-iff-iwasawa", check_sd_one_iff_iwasawa},
      {"fg-constant-on-classes", check_fg_constant_on_classes},
      {"image-sizes-iff-iwasawa", check_image_sizes_iff_iwasawa},
      {"minimal-non-iwasawa-imf-two", check_minimal_non_iwasawa_imf_two},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& all_theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Check& c : checks()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

VerificationSummary run_verification(const CorpusManifest& corpus,
                                     const std::vector<std::string>& theorem_ids) {
  std::vector<const Check*> selected;
  if (theorem_ids.empty()) {
    for (const Check& c : checks()) selected.push_back(&c);
  } else {
    for (const std::string& id : theorem_ids) {
      const Check* found = nullptr;
      for (const Check& c : checks())
        if (c.id == id) found = &c;
      if (!found) fail(ErrorKind::ParseError, "unknown theorem id \"" + id + "\"");
      selected.push_back(found);
    }
  }

  VerificationSummary summary;
  for (const Check* c : selected) summary.theorems.push_back({c->id, 0, 0});

  std::vector<EntryContext> contexts;
  for (const CorpusEntry& entry : corpus.entries) {
    try {
      EntryContext ctx;
      ctx.label = entry.label;
      ctx.g = group_from_spec(entry.group);
      ctx.g.name = entry.label;
      ctx.l = enumerate_subgroups(ctx.g);
      contexts.push_back(std::move(ctx));
    } catch (const std::exception& e) {
      summary.failures.push_back({entry.label, "load", e.what()});
    }
  }

  for (std::size_t ci = 0; ci < selected.size(); ++ci) {
    for (EntryContext& ctx : contexts) {
      CheckResult result;
      try {
        result = selected[ci]->fn(ctx);
      } catch (const std::exception& e) {
        result = std::string(e.what());
      }
      if (result) {
        ++summary.theorems[ci].fail;
        summary.failures.push_back({ctx.label, selected[ci]->id, *result});
      } else {
        ++summary.theorems[ci].pass;
      }
    }
  }
  return summary;
}

nlohmann::ordered_json verification_json(const VerificationSummary& summary) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json theorems = nlohmann::ordered_json::array();
  int pass = 0;
  for (const auto& t : summary.theorems) {
    theorems.push_back({{"id", t.id}, {"pass", t.pass}, {"fail", t.fail}});
    pass += t.pass;
  }
  j["theorems"] = theorems;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : summary.failures)
    failures.push_back({{"label", f.label}, {"theorem", f.theorem}, {"witness", f.witness}});
  j["failures"] = failures;
  j["total_pass"] = pass;
  j["total_fail"] = summary.failures.size();
  j["ok"] = summary.ok();
  return j;
}

}  // namespace iwasawa
