#pragma once

#include <string>

#include <json.hpp>

#include "iwasawa/group.hpp"

namespace iwasawa {

/// The one ingestion path for groups, shared by the library, corpus and
/// CLI. Spec kinds:
///   {"kind":"cayley",     "table":[[...], ...]}
///   {"kind":"perm",       "degree":k, "generators":[[...], ...]}
///   {"kind":"named",      "name":"..."}
///   {"kind":"cyclic",     "n":k}
///   {"kind":"product",    "factors":[<spec>, ...]}
///   {"kind":"metacyclic", "p":..,"q":..,"n":..,"t":<int>|"auto"}
/// Malformed documents raise ParseError; group-level validation failures
/// raise their own kinds (NotAssociative, OrderCapExceeded, ...).
GroupTable group_from_spec(const nlohmann::json& spec);

GroupTable load_group_file(const std::string& path);

}  // namespace iwasawa
