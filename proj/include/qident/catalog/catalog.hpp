#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qident/dsl/ast.hpp"
#include "qident/qseries.hpp"

namespace qident::catalog {

/// How a parameter is drawn or bound.
struct ParamDomain {
  enum class Kind {
    SymbolicZC,  // "zc": z or c left symbolic, a unit rational in specialize mode
    Unit,        // "unit" or "unit*q^k": nonzero rational with |r| <= 1/2, times q^k
    SmallInt,    // "int:lo..hi": every integer in the range
    Fixed,       // "=<dsl>": a monomial expression in earlier parameters
  };

  Kind kind = Kind::Unit;
  int q_power = 0;                   // Unit
  std::optional<std::string> below;  // Unit: |r| < |value of this parameter|
  int lo = 0, hi = 0;                // SmallInt
  dsl::ExprPtr fixed;                // Fixed
  std::string text;

  static ParamDomain parse(const std::string& text);
};

/// One side of an identity.
struct SideSpec {
  enum class Kind { Dsl, Builtin, Counter, Weighted, Sequence, Sum };

  Kind kind = Kind::Dsl;
  dsl::ExprPtr expr;                          // Dsl
  std::string name;                           // Builtin, Counter, Weighted, Sequence
  std::map<std::string, dsl::ExprPtr> args;   // Builtin
  std::optional<int> extra;                   // Counter
  std::vector<SideSpec> terms;                // Sum
  BigRational scale{1};
  dsl::ExprPtr times;
  std::vector<std::pair<std::string, dsl::ExprPtr>> subs;
  std::optional<BigRational> at0;             // constant term of coefficient sequences

  std::string describe() const;
};

enum class Tag { Core, Weighted, ProofIngredient, Remark };

const char* tag_name(Tag tag);
std::optional<Tag> parse_tag(const std::string& name);

struct IdentityEntry {
  std::string id;
  std::string description;
  std::vector<Tag> tags;
  Mode default_mode = Mode::Symbolic;
  int order = 40;
  std::optional<int> max_order;
  std::vector<std::pair<std::string, ParamDomain>> params;
  std::vector<SideSpec> sides;
  std::string anchor;

  bool has_tag(Tag tag) const;
};

class Catalog {
 public:
  static Catalog from_json_text(const std::string& text);
  static Catalog from_file(const std::string& path);

  const std::vector<IdentityEntry>& entries() const { return entries_; }
  /// Throws UnknownIdentity.
  const IdentityEntry& find(const std::string& id) const;
  bool contains(const std::string& id) const;

 private:
  std::vector<IdentityEntry> entries_;
};

/// `QIDENT_CATALOG` if set, else the path baked in at build time.
std::string default_catalog_path();

}  // namespace qident::catalog
