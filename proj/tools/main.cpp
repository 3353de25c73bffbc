// iwasawa — classify finite groups from their subgroup lattices, extract
// Schmidt decompositions, compute exact subgroup commutativity degrees, and
// verify the structural equivalences over a corpus of groups.
//
// Exit codes: 0 success / all checks pass, 1 verification failures,
// 2 input or validation errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "iwasawa/classify.hpp"
#include "iwasawa/corpus.hpp"
#include "iwasawa/degrees.hpp"
#include "iwasawa/dot.hpp"
#include "iwasawa/group_io.hpp"
#include "iwasawa/report_json.hpp"
#include "iwasawa/verify.hpp"

namespace {

using namespace iwasawa;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::StructureViolation:
      return 1;
    default:
      return 2;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << content;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& path, bool as_json, const std::string& dot_path,
                 bool with_sd) {
  GroupTable g = load_group_file(path);
  SubgroupLattice l = enumerate_subgroups(g);
  ClassificationReport report = classify(g, l);
  NonIwasawaProper niw = count_non_iwasawa_proper(g, l);

  if (!dot_path.empty()) write_file(dot_path, hasse_dot(l));

  if (as_json) {
    nlohmann::ordered_json j = classification_json(report, l);
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (int w : niw.witnesses) witnesses.push_back(subgroup_ref_json(l, w));
    j["non_iwasawa_proper_count"] = niw.count;
    j["non_iwasawa_proper"] = witnesses;
    if (with_sd) j["degrees"] = degree_json(degree_report(l));
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << (g.name.empty() ? path : g.name) << ": order " << g.order << ", "
            << l.size() << " subgroups\n";
  std::cout << "  abelian:                      " << yesno(report.is_abelian) << "\n";
  std::cout << "  cyclic:                       " << yesno(report.is_cyclic) << "\n";
  std::cout << "  nilpotent:                    " << yesno(report.is_nilpotent) << "\n";
  std::cout << "  modular lattice:              " << yesno(report.is_modular) << "\n";
  std::cout << "  Iwasawa:                      " << yesno(report.is_iwasawa) << "\n";
  std::cout << "  Schmidt:                      " << yesno(report.is_schmidt) << "\n";
  std::cout << "  minimal non-Iwasawa:          " << yesno(report.is_minimal_non_iwasawa) << "\n";
  std::cout << "  minimal non-modular p-group:  " << yesno(report.is_minimal_non_modular_p_group)
            << "\n";
  std::cout << "  modular-critical (class C):   " << yesno(report.in_class_c) << "\n";
  if (report.schmidt) {
    const SchmidtStructure& s = *report.schmidt;
    std::cout << "  Schmidt decomposition: p=" << s.p << " q=" << s.q << " r=" << s.r
              << " |P|=" << l.order_of(s.sylow_p) << (s.p_abelian ? " (P abelian)" : " (P non-abelian)")
              << "\n";
  }
  if (report.pentagon)
    std::cout << "  pentagon witness: x=" << report.pentagon->x << " y=" << report.pentagon->y
              << " z=" << report.pentagon->z << " bottom=" << report.pentagon->bottom
              << " top=" << report.pentagon->top << "\n";
  if (report.non_permuting)
    std::cout << "  non-permuting pair: (" << report.non_permuting->h << ","
              << report.non_permuting->k << ")\n";
  std::cout << "  non-Iwasawa proper subgroups: " << niw.count << "\n";
  if (with_sd) {
    DegreeReport deg = degree_report(l);
    std::cout << "  sd = " << deg.sd.str() << "  |Im f| = " << deg.f_image.size()
              << "  |Im g| = " << deg.g_image.size() << "\n";
  }
  return 0;
}

int cmd_sd(const std::string& path, int relative_index) {
  GroupTable g = load_group_file(path);
  SubgroupLattice l = enumerate_subgroups(g);
  if (relative_index >= 0) {
    if (relative_index >= l.size())
      fail(ErrorKind::IndexOutOfRange, "subgroup index " + std::to_string(relative_index) +
                                           " out of range (lattice has " +
                                           std::to_string(l.size()) + " subgroups)");
    nlohmann::ordered_json j;
    j["subgroup"] = subgroup_ref_json(l, relative_index);
    j["relative_sd"] = rational_json(relative_sd(l, relative_index));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << degree_json(degree_report(l)).dump(2) << "\n";
  return 0;
}

int cmd_family(int p, int q, int n_max, const std::string& t_flag, const std::string& csv_path) {
  int t = 0;
  if (t_flag != "auto") t = std::stoi(t_flag);
  std::vector<FamilyRow> rows = family_report(p, q, n_max, t);
  std::string csv = family_csv(rows);
  if (!csv_path.empty()) write_file(csv_path, csv);
  std::cout << csv;
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& theorems, bool as_json) {
  CorpusManifest manifest = corpus_path.empty() ? builtin_corpus() : load_manifest(corpus_path);

  std::vector<std::string> ids;
  if (theorems != "all") {
    std::string cur;
    for (char ch : theorems + ",") {
      if (ch == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }

  VerificationSummary summary = run_verification(manifest, ids);
  if (as_json) {
    std::cout << verification_json(summary).dump(2) << "\n";
  } else {
    for (const auto& t : summary.theorems)
      std::cout << t.id << ": " << t.pass << " pass, " << t.fail << " fail\n";
    for (const auto& f : summary.failures)
      std::cout << "FAIL " << f.label << " [" << f.theorem << "] " << f.witness << "\n";
    std::cout << (summary.ok() ? "all checks passed" : "verification failed") << "\n";
  }
  return summary.ok() ? 0 : 1;
}

int cmd_lattice_dot(const std::string& path, const std::string& out_path) {
  GroupTable g = load_group_file(path);
  std::string dot = hasse_dot(enumerate_subgroups(g));
  if (out_path.empty())
    std::cout << dot;
  else
    write_file(out_path, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group classification engine: subgroup lattices, Iwasawa/"
               "Schmidt/modular status, subgroup commutativity degrees"};
  app.require_subcommand(1);

  std::string group_path, dot_path, csv_path, corpus_path, out_path;
  std::string theorems = "all", t_flag = "auto";
  bool as_json = false, with_sd = false;
  int relative_index = -1, p = 0, q = 0, n_max = 1;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a group file");
  classify_cmd->add_option("path", group_path, "group spec (JSON)")->required();
  classify_cmd->add_flag("--json", as_json, "emit the full JSON report");
  classify_cmd->add_option("--dot", dot_path, "also write the Hasse diagram (DOT)");
  classify_cmd->add_flag("--sd", with_sd, "include the commutativity degree report");

  CLI::App* sd_cmd = app.add_subcommand("sd", "subgroup commutativity degree report");
  sd_cmd->add_option("path", group_path, "group spec (JSON)")->required();
  sd_cmd->add_option("--relative", relative_index, "relative degree sd(H,G) for this subgroup index");

  CLI::App* family_cmd =
      app.add_subcommand("family", "modular-critical family table for Z_p : Z_{q^n}");
  family_cmd->add_option("--p", p, "prime p")->required();
  family_cmd->add_option("--q", q, "prime q dividing p-1")->required();
  family_cmd->add_option("--n-max", n_max, "largest exponent n")->required();
  family_cmd->add_option("--t", t_flag, "action exponent, or \"auto\"");
  family_cmd->add_option("--csv", csv_path, "write the table to this CSV file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem checks over a corpus");
  verify_cmd->add_option("--corpus", corpus_path, "manifest path (default: builtin corpus)");
  verify_cmd->add_option("--theorems", theorems, "comma-separated check ids, or \"all\"");
  verify_cmd->add_flag("--json", as_json, "emit the JSON summary");

  CLI::App* dot_cmd = app.add_subcommand("lattice-dot", "Hasse diagram of the subgroup lattice");
  dot_cmd->add_option("path", group_path, "group spec (JSON)")->required();
  dot_cmd->add_option("-o,--out", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return cmd_classify(group_path, as_json, dot_path, with_sd);
    if (sd_cmd->parsed()) return cmd_sd(group_path, relative_index);
    if (family_cmd->parsed()) return cmd_family(p, q, n_max, t_flag, csv_path);
    if (verify_cmd->parsed()) return cmd_verify(corpus_path, theorems, as_json);
    if (dot_cmd->parsed()) return cmd_lattice_dot(group_path, out_path);
  } catch (const iwasawa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
