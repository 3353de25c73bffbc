#include "iwasawa/corpus.hpp"

#include <fstream>
#include <set>

#include "iwasawa/corpus_manifest_data.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

using nlohmann::json;

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

}  // namespace

CorpusManifest parse_manifest(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    fail(ErrorKind::ParseError, "manifest must be an object with an \"entries\" array");

  CorpusManifest m;
  std::set<std::string> labels;
  for (const json& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("label") || !e["label"].is_string())
      fail(ErrorKind::ParseError, "every manifest entry needs a string \"label\"");
    CorpusEntry entry;
    entry.label = e["label"].get<std::string>();
    if (!labels.insert(entry.label).second)
      fail(ErrorKind::ParseError, "duplicate corpus label \"" + entry.label + "\"");
    if (e.contains("note") && e["note"].is_string()) entry.note = e["note"].get<std::string>();

    if (e.contains("group")) {
      entry.group = e["group"];
    } else if (e.contains("file") && e["file"].is_string()) {
      std::string path = base_dir + "/" + e["file"].get<std::string>();
      std::ifstream in(path);
      if (!in) fail(ErrorKind::ParseError, "cannot open corpus file " + path);
      try {
        in >> entry.group;
      } catch (const json::exception& err) {
        fail(ErrorKind::ParseError, path + ": " + err.what());
      }
    } else {
      fail(ErrorKind::ParseError, "entry \"" + entry.label + "\" needs \"group\" or \"file\"");
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open manifest " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
  return parse_manifest(doc, dir_of(path));
}

const CorpusManifest& builtin_corpus() {
  static const CorpusManifest manifest =
      parse_manifest(json::parse(detail::kBuiltinManifestJson), ".");
  return manifest;
}

}  // namespace iwasawa
