#include "iwasawa/group_io.hpp"

#include <fstream>

namespace iwasawa {

namespace {

using nlohmann::json;

const json& require(const json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end())
    fail(ErrorKind::ParseError, std::string("group spec is missing \"") + key + "\"");
  return *it;
}

int require_int(const json& spec, const char* key) {
  const json& v = require(spec, key);
  if (!v.is_number_integer())
    fail(ErrorKind::ParseError, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::vector<int>> int_matrix(const json& v, const char* key) {
  if (!v.is_array()) fail(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array");
  std::vector<std::vector<int>> out;
  for (const json& row : v) {
    if (!row.is_array())
      fail(ErrorKind::ParseError, std::string("\"") + key + "\" rows must be arrays");
    std::vector<int> r;
    for (const json& x : row) {
      if (!x.is_number_integer())
        fail(ErrorKind::ParseError, std::string("\"") + key + "\" entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

GroupTable group_from_spec(const json& spec) {
  if (!spec.is_object()) fail(ErrorKind::ParseError, "group spec must be a JSON object");
  const json& kind_v = require(spec, "kind");
  if (!kind_v.is_string()) fail(ErrorKind::ParseError, "\"kind\" must be a string");
  std::string kind = kind_v.get<std::string>();

  if (kind == "cayley") {
    auto raw = int_matrix(require(spec, "table"), "table");
    if (static_cast<int>(raw.size()) > order_cap())
      fail(ErrorKind::OrderCapExceeded, "table order " + std::to_string(raw.size()) +
                                            " exceeds cap " + std::to_string(order_cap()));
    return from_cayley_table(raw);
  }
  if (kind == "perm") {
    int degree = require_int(spec, "degree");
    auto images = int_matrix(require(spec, "generators"), "generators");
    std::vector<Permutation> gens;
    for (auto& im : images) {
      Permutation p;
      p.degree = static_cast<int>(im.size());
      p.images = std::move(im);
      gens.push_back(std::move(p));
    }
    return from_permutations(degree, gens);
  }
  if (kind == "named") {
    const json& name = require(spec, "name");
    if (!name.is_string()) fail(ErrorKind::ParseError, "\"name\" must be a string");
    return named(name.get<std::string>());
  }
  if (kind == "cyclic") {
    int n = require_int(spec, "n");
    if (n < 1) fail(ErrorKind::ParseError, "cyclic \"n\" must be >= 1");
    if (n > order_cap())
      fail(ErrorKind::OrderCapExceeded, "cyclic order " + std::to_string(n) +
                                            " exceeds cap " + std::to_string(order_cap()));
    return cyclic(n);
  }
  if (kind == "product") {
    const json& factors = require(spec, "factors");
    if (!factors.is_array() || factors.empty())
      fail(ErrorKind::ParseError, "\"factors\" must be a nonempty array");
    GroupTable g = group_from_spec(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
      g = direct_product(g, group_from_spec(factors[i]));
    return g;
  }
  if (kind == "metacyclic") {
    MetacyclicParams params;
    params.p = require_int(spec, "p");
    params.q = require_int(spec, "q");
    params.n = require_int(spec, "n");
    const json& t = require(spec, "t");
    if (t.is_string() && t.get<std::string>() == "auto")
      params.t = least_metacyclic_action(params.p, params.q);
    else if (t.is_number_integer())
      params.t = t.get<int>();
    else
      fail(ErrorKind::ParseError, "\"t\" must be an integer or \"auto\"");
    return metacyclic(params);
  }
  fail(ErrorKind::ParseError, "unknown group kind \"" + kind + "\"");
}

GroupTable load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
  return group_from_spec(doc);
}

}  // namespace iwasawa
