#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace iwasawa {

/// One labeled group of the verification corpus. The spec is kept as raw
/// JSON so a broken entry surfaces as a recorded failure at verification
/// time instead of aborting the whole run.
struct CorpusEntry {
  std::string label;
  nlohmann::json group;
  std::string note;
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
};

/// The corpus compiled into the binary; byte-identical to the manifest
/// checked into corpus/manifest.json.
const CorpusManifest& builtin_corpus();

/// Manifest document: {"entries":[{"label":..., "group":<spec>|"file":<path>,
/// "note":...}, ...]}. "file" paths resolve relative to base_dir. Labels
/// must be unique.
CorpusManifest parse_manifest(const nlohmann::json& doc, const std::string& base_dir);

CorpusManifest load_manifest(const std::string& path);

}  // namespace iwasawa
