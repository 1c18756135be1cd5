#include "qident/catalog/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qident/catalog/builtins.hpp"
#include "qident/catalog/sequences.hpp"
#include "qident/dsl/parser.hpp"
#include "qident/error.hpp"
#include "qident/partitions/counters.hpp"
#include "qident/partitions/weights.hpp"

#ifndef QIDENT_DEFAULT_CATALOG
#define QIDENT_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace qident::catalog {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::CatalogError, where + ": " + msg);
}

BigRational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return BigRational(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigRational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a rational string");
}

dsl::ExprPtr parse_dsl(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a DSL string");
  try {
    return dsl::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

SideSpec parse_side(const json& j, const std::string& where) {
  SideSpec side;
  if (j.is_string()) {
    side.expr = parse_dsl(j, where);
    return side;
  }
  if (!j.is_object()) fail(where, "a side is a DSL string or an object");

  if (j.contains("dsl")) {
    side.expr = parse_dsl(j["dsl"], where);
  } else if (j.contains("builtin")) {
    side.kind = SideSpec::Kind::Builtin;
    side.name = j["builtin"].get<std::string>();
    if (!has_builtin(side.name)) throw Error(ErrorKind::UnknownBuiltin, where + ": " + side.name);
    if (j.contains("args"))
      for (const auto& [k, v] : j["args"].items()) side.args[k] = parse_dsl(v, where + ".args." + k);
  } else if (j.contains("counter")) {
    side.kind = SideSpec::Kind::Counter;
    side.name = j["counter"].get<std::string>();
    if (!partitions::has_counter(side.name)) throw Error(ErrorKind::UnknownCounter, where + ": " + side.name);
    if (j.contains("extra")) side.extra = j["extra"].get<int>();
  } else if (j.contains("weighted")) {
    side.kind = SideSpec::Kind::Weighted;
    side.name = j["weighted"].get<std::string>();
    if (!partitions::has_weight(side.name)) throw Error(ErrorKind::UnknownWeight, where + ": " + side.name);
  } else if (j.contains("sequence")) {
    side.kind = SideSpec::Kind::Sequence;
    side.name = j["sequence"].get<std::string>();
    if (!has_sequence(side.name)) throw Error(ErrorKind::UnknownSequence, where + ": " + side.name);
  } else if (j.contains("sum")) {
    side.kind = SideSpec::Kind::Sum;
    if (!j["sum"].is_array() || j["sum"].empty()) fail(where, "sum needs a nonempty array");
    for (std::size_t i = 0; i < j["sum"].size(); ++i)
      side.terms.push_back(parse_side(j["sum"][i], where + ".sum[" + std::to_string(i) + "]"));
  } else {
    fail(where, "side object needs one of dsl, builtin, counter, weighted, sequence, sum");
  }

  if (j.contains("scale")) side.scale = parse_rational(j["scale"], where + ".scale");
  if (j.contains("times")) side.times = parse_dsl(j["times"], where + ".times");
  if (j.contains("subs"))
    for (const auto& [k, v] : j["subs"].items()) side.subs.emplace_back(k, parse_dsl(v, where + ".subs." + k));
  if (j.contains("at0")) side.at0 = parse_rational(j["at0"], where + ".at0");
  return side;
}

IdentityEntry parse_entry(const json& j, std::size_t index) {
  IdentityEntry e;
  std::string where = "entry " + std::to_string(index);
  if (!j.is_object() || !j.contains("id")) fail(where, "missing id");
  e.id = j["id"].get<std::string>();
  where = e.id;
  e.description = j.value("description", "");
  if (j.contains("tags"))
    for (const auto& t : j["tags"]) {
      auto tag = parse_tag(t.get<std::string>());
      if (!tag) fail(where, "unknown tag " + t.get<std::string>());
      e.tags.push_back(*tag);
    }
  const std::string mode = j.value("mode", "symbolic");
  if (mode == "symbolic")
    e.default_mode = Mode::Symbolic;
  else if (mode == "specialize")
    e.default_mode = Mode::Specialized;
  else
    fail(where, "mode must be symbolic or specialize");
  e.order = j.value("order", 40);
  if (j.contains("max_order")) e.max_order = j["max_order"].get<int>();
  if (j.contains("params"))
    for (const auto& [name, dom] : j["params"].items()) {
      try {
        e.params.emplace_back(name, ParamDomain::parse(dom.get<std::string>()));
      } catch (const Error& err) {
        fail(where + ".params." + name, err.what());
      }
    }

  if (!j.contains("lhs") || !j.contains("rhs")) fail(where, "lhs and rhs are required");
  e.sides.push_back(parse_side(j["lhs"], where + ".lhs"));
  e.sides.push_back(parse_side(j["rhs"], where + ".rhs"));
  if (j.contains("extra_sides"))
    for (std::size_t i = 0; i < j["extra_sides"].size(); ++i)
      e.sides.push_back(parse_side(j["extra_sides"][i], where + ".extra_sides[" + std::to_string(i) + "]"));

  if (j.contains("builder_overrides"))
    for (const auto& o : j["builder_overrides"]) {
      const std::string target = o.value("side", "");
      std::size_t idx = 0;
      if (target == "lhs")
        idx = 0;
      else if (target == "rhs")
        idx = 1;
      else if (target.rfind("extra_sides[", 0) == 0)
        idx = 2 + std::stoul(target.substr(12));
      else
        fail(where, "builder override targets lhs, rhs or extra_sides[i]");
      if (idx >= e.sides.size()) fail(where, "builder override target out of range");
      e.sides[idx] = parse_side(o, where + ".builder_overrides");
    }

  if (j.contains("paper_anchor")) e.anchor = j["paper_anchor"].value("location", "");
  return e;
}

}  // namespace

ParamDomain ParamDomain::parse(const std::string& text) {
  ParamDomain d;
  d.text = text;
  static const std::regex unit_re(R"(unit(\*q(\^(\d+))?)?(:below=([A-Za-z_]\w*))?)");
  static const std::regex int_re(R"(int:(-?\d+)\.\.(-?\d+))");
  std::smatch m;
  if (text == "zc") {
    d.kind = Kind::SymbolicZC;
  } else if (std::regex_match(text, m, unit_re)) {
    d.kind = Kind::Unit;
    if (m[1].matched) d.q_power = m[3].matched ? std::stoi(m[3].str()) : 1;
    if (m[5].matched) d.below = m[5].str();
  } else if (std::regex_match(text, m, int_re)) {
    d.kind = Kind::SmallInt;
    d.lo = std::stoi(m[1].str());
    d.hi = std::stoi(m[2].str());
    if (d.lo > d.hi) throw Error(ErrorKind::CatalogError, "empty integer range " + text);
  } else if (!text.empty() && text[0] == '=') {
    d.kind = Kind::Fixed;
    d.fixed = dsl::parse(text.substr(1));
  } else {
    throw Error(ErrorKind::CatalogError, "unknown parameter domain '" + text + "'");
  }
  return d;
}

std::string SideSpec::describe() const {
  std::string out;
  switch (kind) {
    case Kind::Dsl: out = dsl::to_string(expr); break;
    case Kind::Builtin: out = "builtin " + name; break;
    case Kind::Counter: out = "counter " + name; break;
    case Kind::Weighted: out = "weighted " + name; break;
    case Kind::Sequence: out = "sequence " + name; break;
    case Kind::Sum:
      for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + ("[" + terms[i].describe() + "]");
      break;
  }
  if (!scale.is_one()) out = scale.to_string() + " * (" + out + ")";
  if (times) out = "(" + dsl::to_string(times) + ") * (" + out + ")";
  return out;
}

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::Core: return "core";
    case Tag::Weighted: return "weighted";
    case Tag::ProofIngredient: return "proof-ingredient";
    case Tag::Remark: return "remark";
  }
  return "?";
}

std::optional<Tag> parse_tag(const std::string& name) {
  for (Tag t : {Tag::Core, Tag::Weighted, Tag::ProofIngredient, Tag::Remark})
    if (name == tag_name(t)) return t;
  return std::nullopt;
}

bool IdentityEntry::has_tag(Tag tag) const {
  for (Tag t : tags)
    if (t == tag) return true;
  return false;
}

Catalog Catalog::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::CatalogError, std::string("catalog is not valid JSON: ") + e.what());
  }
  const json& arr = root.is_object() && root.contains("entries") ? root["entries"] : root;
  if (!arr.is_array()) throw Error(ErrorKind::CatalogError, "catalog must be an array of entries");
  Catalog cat;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      cat.entries_.push_back(parse_entry(arr[i], i));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::CatalogError, "entry " + std::to_string(i) + ": " + e.what());
    }
    if (!seen.insert(cat.entries_.back().id).second)
      throw Error(ErrorKind::CatalogError, "duplicate id " + cat.entries_.back().id);
  }
  return cat;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CatalogError, "cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const IdentityEntry& Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + id + "'");
}

bool Catalog::contains(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return true;
  return false;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("QIDENT_CATALOG"); env && *env) return env;
  return QIDENT_DEFAULT_CATALOG;
}

}  // namespace qident::catalog
