#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qident/catalog/catalog.hpp"
#include "qident/dsl/eval.hpp"
#include "qident/error.hpp"

namespace qident::catalog {

enum class Verdict { Pass, Fail, Error };

const char* verdict_name(Verdict v);

struct Mismatch {
  int power = 0;
  std::string lhs;
  std::string rhs;
  std::size_t side_a = 0;
  std::size_t side_b = 1;
  std::size_t point = 0;
};

struct Report {
  std::string id;
  Verdict verdict = Verdict::Pass;
  Mode mode = Mode::Symbolic;
  int order = 0;
  std::uint64_t seed = 0;
  /// One map per evaluated point, parameter name to rendered value.
  std::vector<std::map<std::string, std::string>> params;
  std::optional<Mismatch> first_mismatch;
  std::optional<ErrorKind> error_kind;
  std::string error_message;
  bool remark = false;
  double ms = 0;
};

struct VerifyOptions {
  std::optional<int> order;  // default: the entry's own order
  bool force_specialize = false;
  std::uint64_t seed = 0;
  int points = 3;
};

/// Evaluates one side at a fully bound environment.
QSeries evaluate_side(const SideSpec& side, const dsl::Env& env);

Report verify(const IdentityEntry& entry, const VerifyOptions& opts);
Report verify(const Catalog& catalog, const std::string& id, const VerifyOptions& opts);

/// Reports in catalog order; `jobs` <= 0 means hardware concurrency.
std::vector<Report> verify_all(const Catalog& catalog, const VerifyOptions& opts, int jobs,
                               const std::vector<IdentityEntry>* subset = nullptr);

std::string render_monomial(const Monomial& m);

/// Schema {id, verdict, mode, order, seed, params, first_mismatch, ms}; `ms` is
/// null unless timing is requested, so repeated runs are byte-identical.
std::string reports_to_json(const std::vector<Report>& reports, bool timing);
std::string reports_to_text(const std::vector<Report>& reports, bool timing);

}  // namespace qident::catalog
