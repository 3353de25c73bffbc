#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "iwasawa/corpus.hpp"

namespace iwasawa {

struct VerificationFailure {
  std::string label;    // corpus entry
  std::string theorem;  // check id, or "load" for ingestion errors
  std::string witness;
};

struct VerificationSummary {
  struct TheoremCount {
    std::string id;
    int pass = 0;
    int fail = 0;
  };
  std::vector<TheoremCount> theorems;
  std::vector<VerificationFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Check ids accepted by run_verification, in run order.
const std::vector<std::string>& all_theorem_ids();

/// Runs the selected checks over every corpus entry. Entries that fail to
/// parse or validate are recorded under "load" and skipped; the run always
/// continues. Unknown ids raise ParseError.
VerificationSummary run_verification(const CorpusManifest& corpus,
                                     const std::vector<std::string>& theorem_ids);

nlohmann::ordered_json verification_json(const VerificationSummary& summary);

}  // namespace iwasawa
