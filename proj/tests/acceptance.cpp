// Acceptance suite: every criterion is exercised end to end and printed as
// one PASS/FAIL line. All rational comparisons are exact. Exits nonzero if
// anything fails.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "iwasawa/classify.hpp"
#include "iwasawa/corpus.hpp"
#include "iwasawa/degrees.hpp"
#include "iwasawa/group_io.hpp"
#include "iwasawa/verify.hpp"
#include "oracles.hpp"

using namespace iwasawa;

namespace {

const std::string kSource = IWASAWA_SOURCE_DIR;
const std::string kCli = IWASAWA_CLI_PATH;

struct Harness {
  int failures = 0;

  void run(int number, const std::string& name, const std::function<void()>& body) {
    try {
      body();
      std::printf("PASS  criterion %2d  %s\n", number, name.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  criterion %2d  %s\n      %s\n", number, name.c_str(), e.what());
    }
  }
};

[[noreturn]] void bail(const std::string& msg) { throw std::runtime_error(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) bail(msg);
}

struct CorpusCache {
  struct Entry {
    std::string label;
    GroupTable g;
    SubgroupLattice l;
    ClassificationReport cls;
  };
  std::vector<Entry> entries;

  CorpusCache() {
    for (const CorpusEntry& ce : builtin_corpus().entries) {
      Entry e;
      e.label = ce.label;
      e.g = group_from_spec(ce.group);
      e.g.name = ce.label;
      e.l = enumerate_subgroups(e.g);
      e.cls = classify(e.g, e.l);
      entries.push_back(std::move(e));
    }
  }
};

CorpusCache& corpus_cache() {
  static CorpusCache cache;
  return cache;
}

int run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) bail("could not spawn the CLI");
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------------------

void criterion_family_closed_form() {
  struct Case {
    int p, q, n_max;
  };
  for (Case c : {Case{3, 2, 5}, Case{5, 2, 2}, Case{7, 3, 2}, Case{13, 3, 2}}) {
    auto rows = family_report(c.p, c.q, c.n_max);  // asserts internally as well
    require(static_cast<int>(rows.size()) == c.n_max, "missing family rows");
    for (const FamilyRow& row : rows) {
      long long size = 2 * row.n + 1 + c.p;
      require(row.lattice_size == size, "lattice size differs from 2n+1+p");
      Rational expected = Rational(1) - Rational(static_cast<long long>(c.p) * c.p - c.p,
                                                 size * size);
      require(row.sd_bruteforce == expected, "brute-force sd differs from the closed form");
      require(row.sd_closed_form == expected, "closed form evaluated inconsistently");
    }
  }
}

void criterion_s3_three_routes() {
  SubgroupLattice l = enumerate_subgroups(named("S_3"));
  DegreeReport rep = degree_report(l);
  Rational by_pairs = rep.sd;
  Rational by_closed_form = family_sd_closed_form(3, 2, 1);

  long long counted = 0;
  for (int c : rep.c_counts) counted += c;
  long long size = l.size(), p = 3;
  require(counted == (size - p) * size + p * (size - p + 1),
          "C(H) counts do not match the split into normal and conjugate parts");
  Rational by_counts(counted, size * size);

  require(by_pairs == Rational(5, 6), "all-pairs route is not 5/6");
  require(by_closed_form == Rational(5, 6), "closed-form route is not 5/6");
  require(by_counts == Rational(5, 6), "C(H)-count route is not 5/6");
}

void criterion_characterization_corpus() {
  std::set<std::string> positives;
  for (auto& e : corpus_cache().entries) {
    bool by_definition = is_minimal_non(group_is_iwasawa, e.g, e.l);
    require(by_definition == e.cls.is_minimal_non_iwasawa,
            e.label + ": definition route disagrees with the report");
    SubgroupFlagsCache cache(e.l);
    bool characterization =
        e.cls.is_minimal_non_modular_p_group ||
        (e.cls.is_schmidt && cache.flags(e.cls.schmidt->sylow_p).modular);
    require(characterization == by_definition,
            e.label + ": characterization route disagrees with the definition");
    if (by_definition) positives.insert(e.label);
  }
  std::set<std::string> expected{"D8",   "S3",     "A4",   "SL23", "Dic3",
                                 "Z3sZ8", "Z3sZ16", "Dic5", "Z7sZ3"};
  require(positives == expected, "minimal non-Iwasawa corpus members are not the expected set");
}

void criterion_modular_critical_class() {
  std::set<std::string> critical;
  for (auto& e : corpus_cache().entries) {
    if (e.cls.is_minimal_non_iwasawa && e.cls.is_modular) critical.insert(e.label);
    if (e.cls.in_class_c) {
      require(e.cls.schmidt.has_value(), e.label + ": critical group without Schmidt data");
      require(e.l.order_of(e.cls.schmidt->sylow_p) == e.cls.schmidt->p,
              e.label + ": critical group with |P| != p");
    }
    if (e.label == "A4" || e.label == "SL23") {
      require(e.cls.is_minimal_non_iwasawa && !e.cls.is_modular,
              e.label + " should be minimal non-Iwasawa and non-modular");
      require(e.cls.pentagon.has_value(), e.label + " has no pentagon witness");
    }
  }
  std::set<std::string> expected{"S3", "Dic3", "Z3sZ8", "Z3sZ16", "Dic5", "Z7sZ3"};
  require(critical == expected, "modular-critical corpus members are not the expected set");
}

void criterion_critical_minimal_non_cyclic() {
  int seen = 0;
  for (auto& e : corpus_cache().entries) {
    if (!e.cls.in_class_c) continue;
    ++seen;
    require(is_minimal_non(group_is_cyclic, e.g, e.l),
            e.label + ": critical group is not minimal non-cyclic");
    for (int i = 0; i < e.l.size(); ++i)
      if (e.l.is_maximal(i))
        require(is_cyclic(subgroup_table(e.g, e.l.at(i).members)),
                e.label + ": maximal subgroup is not cyclic");
  }
  require(seen == 6, "expected six critical groups in the corpus");
}

void criterion_schmidt_structure() {
  std::set<std::string> schmidt_labels;
  for (auto& e : corpus_cache().entries) {
    if (!e.cls.is_schmidt) continue;
    schmidt_labels.insert(e.label);
    extract_schmidt_structure(e.g, e.l);  // every structural bullet re-asserted

    const SchmidtStructure& s = *e.cls.schmidt;
    int yq = e.g.power(s.y, s.q);
    require(center(e.g).members.contains(yq), e.label + ": y^q is not central");
    require(s.center == s.frattini_g, e.label + ": Z(G) != Phi(G)");
    require(e.l.at(s.derived_g).members == e.l.at(s.sylow_p).members,
            e.label + ": G' != P");

    if (e.label == "A4") {
      require(s.r == 2 && s.p_abelian && e.l.order_of(s.sylow_p) == 4,
              "A4 structure is off");
      for (int i = 1; i < e.l.size() - 1; ++i)
        require(!(e.l.is_normal(i) && e.l.order_of(i) < 4 && e.l.order_of(i) > 1 &&
                  e.l.leq(i, s.sylow_p)),
                "A4: P is not minimal normal");
    }
    if (e.label == "SL23") {
      require(!s.p_abelian, "SL23: P should be non-abelian");
      require(s.derived_p == s.frattini_p, "SL23: P' != Phi(P)");
      GroupTable pt = subgroup_table(e.g, e.l.at(s.sylow_p).members);
      require(center(pt).order == 2 && e.l.order_of(s.sylow_p) / center(pt).order == 4,
              "SL23: |P/Z(P)| != 4");
    }
  }
  std::set<std::string> expected{"S3",   "A4",    "SL23",   "Dic3",
                                 "Dic5", "Z3sZ8", "Z3sZ16", "Z7sZ3"};
  require(schmidt_labels == expected, "Schmidt corpus members are not the expected set");
}

void criterion_section_equivalences() {
  VerificationSummary s = run_verification(
      builtin_corpus(),
      {"permutable-implies-modular", "iwasawa-iff-nilpotent-modular", "sd-one-iff-iwasawa",
       "image-sizes-iff-iwasawa", "fg-constant-on-classes"});
  if (!s.ok()) {
    std::ostringstream os;
    for (const auto& f : s.failures) os << f.label << "[" << f.theorem << "] " << f.witness << "; ";
    bail(os.str());
  }
}

void criterion_problem_fixtures() {
  auto count_for = [](const char* label) {
    for (auto& e : corpus_cache().entries)
      if (e.label == label) return count_non_iwasawa_proper(e.g, e.l).count;
    bail(std::string("corpus entry missing: ") + label);
  };
  require(count_for("QD16") == 1, "QD16 should have exactly one non-Iwasawa proper subgroup");
  require(count_for("S3xZ5") == 1, "S3xZ5 should have exactly one non-Iwasawa proper subgroup");

  auto imf_for = [](const char* label) {
    for (auto& e : corpus_cache().entries)
      if (e.label == label) return image_sizes(e.l).first;
    bail(std::string("corpus entry missing: ") + label);
  };
  require(imf_for("S3xZ5") == 2, "|Im f|(S3xZ5) != 2");
  require(imf_for("A4xZ5") == 2, "|Im f|(A4xZ5) != 2");
}

void criterion_oracle_equivalence() {
  for (auto& e : corpus_cache().entries) {
    if (e.g.order > 48) continue;
    std::set<ElementSet> listed;
    for (int i = 0; i < e.l.size(); ++i) listed.insert(e.l.at(i).members);
    require(listed == test::cyclic_union_subgroup_oracle(e.g),
            e.label + ": enumeration differs from the cyclic-union oracle");
    if (e.g.order <= 16)
      require(listed == test::subsets_subgroup_oracle(e.g),
              e.label + ": enumeration differs from the all-subsets oracle");
    if (e.g.order <= 24)
      require(frattini(e.l).members == test::frattini_nongenerator_oracle(e.g),
              e.label + ": Frattini differs from the non-generator oracle");
  }
}

void criterion_validator_and_exit_codes() {
  for (const char* name : {"S_3", "Z_6"}) {
    GroupTable g = named(name);
    int n = g.order;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<std::vector<int>> raw(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) raw[x][y] = g.mul(x, y);
        raw[a][b] = (raw[a][b] + 1) % n;
        try {
          from_cayley_table(raw);
          bail("mutated table was accepted");
        } catch (const Error& e) {
          bool named_kind = e.kind() == ErrorKind::NotAssociative ||
                            e.kind() == ErrorKind::NotLatinSquare ||
                            e.kind() == ErrorKind::NoIdentity;
          require(named_kind, "mutation rejected with an unexpected kind");
          require(std::string(e.what()).size() > 15, "witness message looks empty");
        }
      }
  }

  require(run_cli("verify") == 0, "verify on the builtin corpus should exit 0");
  require(run_cli("verify --corpus " + kSource + "/tests/fixtures/bad_corpus.json") == 1,
          "verify on a corrupted corpus should exit 1");
  require(run_cli("classify /no/such/file.json") == 2, "missing input should exit 2");
  require(run_cli("family --p 4 --q 2 --n-max 1") == 2, "non-prime p should exit 2");
  require(run_cli("verify --corpus /no/such/manifest.json") == 2,
          "missing manifest should exit 2");
  require(run_cli("classify " + kSource + "/corpus/examples/nonassociative_loop.json") == 2,
          "non-associative table should exit 2");
  require(run_cli("classify " + kSource + "/corpus/examples/s3.json") == 0,
          "classify on a good file should exit 0");

  // Reports are byte-deterministic for a fixed input and flag set.
  auto capture = [&](const std::string& out) {
    std::string cmd = kCli + " classify " + kSource + "/corpus/examples/qd16.json --json --sd > " +
                      out + " 2>/dev/null";
    require(std::system(cmd.c_str()) == 0, "classify --json failed");
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  };
  std::string first = capture("/tmp/iwasawa_det1.json");
  std::string second = capture("/tmp/iwasawa_det2.json");
  require(!first.empty() && first == second, "classify --json output is not deterministic");
}

}  // namespace

int main() {
  Harness h;
  h.run(1, "family sd: brute force equals the closed form, |L| = 2n+1+p",
        criterion_family_closed_form);
  h.run(2, "sd(S_3) = 5/6 by pairs, closed form, and C(H) counts", criterion_s3_three_routes);
  h.run(3, "minimal non-Iwasawa characterization agrees both ways on the corpus",
        criterion_characterization_corpus);
  h.run(4, "modular-critical class is exactly the Schmidt groups with |P| = p",
        criterion_modular_critical_class);
  h.run(5, "critical groups are minimal non-cyclic", criterion_critical_minimal_non_cyclic);
  h.run(6, "Schmidt structure bullets hold on every detected Schmidt group",
        criterion_schmidt_structure);
  h.run(7, "permutable/modular/Iwasawa/sd/image equivalences hold corpus-wide",
        criterion_section_equivalences);
  h.run(8, "unique non-Iwasawa subgroup and |Im f| = 2 fixtures", criterion_problem_fixtures);
  h.run(9, "enumeration and Frattini match the independent oracles",
        criterion_oracle_equivalence);
  h.run(10, "mutated tables are rejected with named witnesses; exit codes are 0/1/2",
        criterion_validator_and_exit_codes);

  if (h.failures) {
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
