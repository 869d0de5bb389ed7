#include "concord/copula_json.hpp"

#include <fstream>
#include <initializer_list>

namespace concord {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(Errc::BadCopulaSpec, "unknown field \"" + it.key() + "\"");
  }
  for (const char* k : keys)
    if (!j.contains(k)) fail(Errc::BadCopulaSpec, std::string("missing field \"") + k + "\"");
}

std::vector<double> doubles_of(const json& j, const char* name) {
  if (!j.is_array()) fail(Errc::BadCopulaSpec, std::string(name) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) fail(Errc::BadCopulaSpec, std::string(name) + " entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> ints_of(const json& j, const char* name) {
  if (!j.is_array()) fail(Errc::BadCopulaSpec, std::string(name) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(Errc::BadCopulaSpec, std::string(name) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

CopulaExpr copula_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail(Errc::BadCopulaSpec, "copula spec must be an object with a \"type\" string");
  const std::string type = j["type"].get<std::string>();
  if (type == "M") {
    require_keys(j, {"type"});
    return CopulaExpr::frechet_upper();
  }
  if (type == "W") {
    require_keys(j, {"type"});
    return CopulaExpr::frechet_lower();
  }
  if (type == "Pi") {
    require_keys(j, {"type"});
    return CopulaExpr::product();
  }
  if (type == "shuffle") {
    require_keys(j, {"type", "shuffle"});
    const json& s = j["shuffle"];
    if (!s.is_object()) fail(Errc::BadCopulaSpec, "\"shuffle\" must be an object");
    require_keys(s, {"breaks", "perm", "flips"});
    return CopulaExpr::shuffle(ShuffleOfM(doubles_of(s["breaks"], "breaks"),
                                          ints_of(s["perm"], "perm"),
                                          ints_of(s["flips"], "flips")));
  }
  if (type == "mixture") {
    require_keys(j, {"type", "mixture"});
    const json& m = j["mixture"];
    if (!m.is_object()) fail(Errc::BadCopulaSpec, "\"mixture\" must be an object");
    require_keys(m, {"terms"});
    if (!m["terms"].is_array() || m["terms"].empty())
      fail(Errc::BadCopulaSpec, "\"terms\" must be a non-empty array");
    std::vector<CopulaExpr::Term> terms;
    terms.reserve(m["terms"].size());
    for (const auto& t : m["terms"]) {
      if (!t.is_object()) fail(Errc::BadCopulaSpec, "mixture terms must be objects");
      require_keys(t, {"weight", "copula"});
      if (!t["weight"].is_number()) fail(Errc::BadCopulaSpec, "\"weight\" must be a number");
      terms.push_back({t["weight"].get<double>(), copula_from_json(t["copula"])});
    }
    return CopulaExpr::mixture(std::move(terms));
  }
  fail(Errc::BadCopulaSpec, "unknown copula type \"" + type + "\"");
}

json copula_to_json(const CopulaExpr& c) {
  switch (c.tag()) {
    case CopulaExpr::Tag::FrechetUpper:
      return json{{"type", "M"}};
    case CopulaExpr::Tag::FrechetLower:
      return json{{"type", "W"}};
    case CopulaExpr::Tag::Product:
      return json{{"type", "Pi"}};
    case CopulaExpr::Tag::Shuffle: {
      const ShuffleOfM& s = c.as_shuffle();
      return json{{"type", "shuffle"},
                  {"shuffle",
                   {{"breaks", s.breaks()}, {"perm", s.perm()}, {"flips", s.flips()}}}};
    }
    case CopulaExpr::Tag::Mixture: {
      json terms = json::array();
      for (const auto& t : c.terms())
        terms.push_back({{"weight", t.weight}, {"copula", copula_to_json(t.copula)}});
      return json{{"type", "mixture"}, {"mixture", {{"terms", terms}}}};
    }
  }
  return json();  // unreachable
}

CopulaExpr load_copula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadCopulaSpec, "cannot open copula spec file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(Errc::BadCopulaSpec, std::string("invalid JSON: ") + e.what());
  }
  return copula_from_json(j);
}

}  // namespace concord
