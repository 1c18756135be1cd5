// qident: verify q-series identities, expand DSL expressions, print partition tables.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qident/catalog/catalog.hpp"
#include "qident/catalog/verify.hpp"
#include "qident/dsl/eval.hpp"
#include "qident/dsl/parser.hpp"
#include "qident/error.hpp"
#include "qident/partitions/counters.hpp"
#include "qident/partitions/weights.hpp"

namespace {

using namespace qident;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyFlags {
  std::optional<int> order;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  int points = 3;
  std::string format = "text";
  bool timing = false;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& f) {
  cmd->add_option("--order,-N", f.order, "Truncation order (default: each entry's own, normally 40)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--mode", f.mode, "auto uses each entry's policy; specialize forces random rational points")
      ->check(CLI::IsMember({"auto", "specialize"}));
  cmd->add_option("--seed", f.seed, "Seed for random specialization");
  cmd->add_option("--points", f.points, "Random points per specialized entry")->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format)->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", f.timing, "Include wall time per entry");
}

catalog::VerifyOptions to_options(const VerifyFlags& f) {
  catalog::VerifyOptions o;
  o.order = f.order;
  o.force_specialize = f.mode == "specialize";
  o.seed = f.seed;
  o.points = f.points;
  return o;
}

int emit(const std::vector<catalog::Report>& reports, const VerifyFlags& f) {
  std::cout << (f.format == "json" ? catalog::reports_to_json(reports, f.timing)
                                   : catalog::reports_to_text(reports, f.timing));
  for (const auto& r : reports)
    if (r.verdict != catalog::Verdict::Pass) return kExitFail;
  return kExitOk;
}

std::vector<catalog::Tag> parse_tags(const std::vector<std::string>& names) {
  std::vector<catalog::Tag> out;
  for (const auto& n : names) {
    auto t = catalog::parse_tag(n);
    if (!t) throw CLI::ValidationError("unknown tag '" + n + "' (core, weighted, proof-ingredient, remark)");
    out.push_back(*t);
  }
  return out;
}

std::vector<catalog::IdentityEntry> select(const catalog::Catalog& cat, const std::vector<std::string>& only,
                                           const std::vector<std::string>& skip) {
  const auto only_tags = parse_tags(only), skip_tags = parse_tags(skip);
  std::vector<catalog::IdentityEntry> out;
  for (const auto& e : cat.entries()) {
    bool keep = only_tags.empty();
    for (auto t : only_tags) keep = keep || e.has_tag(t);
    for (auto t : skip_tags) keep = keep && !e.has_tag(t);
    if (keep) out.push_back(e);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of q-series identities and partition statistics"};
  app.require_subcommand(1);
  std::string catalog_path = catalog::default_catalog_path();
  app.add_option("--catalog", catalog_path, "Catalog JSON (default: $QIDENT_CATALOG or the shipped file)");

  std::vector<std::string> only, skip;
  auto* list = app.add_subcommand("list", "List catalog identities with their anchors");
  list->add_option("--only", only, "Keep entries carrying any of these tags");
  list->add_option("--skip", skip, "Drop entries carrying any of these tags");

  std::vector<std::string> ids;
  VerifyFlags vflags;
  auto* verify = app.add_subcommand("verify", "Verify one or more identities");
  verify->add_option("id", ids, "Identity ids")->required();
  add_verify_flags(verify, vflags);

  int jobs = 0;
  auto* verify_all = app.add_subcommand("verify-all", "Verify every catalog identity");
  add_verify_flags(verify_all, vflags);
  verify_all->add_option("--jobs,-j", jobs, "Worker threads (default: hardware concurrency)");
  verify_all->add_option("--only", only, "Keep entries carrying any of these tags");
  verify_all->add_option("--skip", skip, "Drop entries carrying any of these tags");

  std::string expr_text;
  int expand_order = 10;
  std::optional<std::string> z_value, c_value;
  auto* expand = app.add_subcommand("expand", "Expand a DSL expression as a truncated q-series");
  expand->add_option("expr", expr_text, "Expression, e.g. \"sum(n=1..inf, q^n/(1-q^n))\"")->required();
  expand->add_option("--order,-N", expand_order)->check(CLI::NonNegativeNumber);
  expand->add_option("--z", z_value, "Rational value for z");
  expand->add_option("--c", c_value, "Rational value for c");

  std::string table_name;
  int max_n = 10;
  std::optional<int> extra;
  auto* table = app.add_subcommand("table", "TSV table of a partition counter");
  table->add_option("counter", table_name, "Counter name (p, d, spt, N2, NSC, ...)")->required();
  table->add_option("--max", max_n)->check(CLI::PositiveNumber);
  table->add_option("--extra", extra, "Rank m for the counter N");

  auto* wtable = app.add_subcommand("wtable", "TSV table of a weighted partition sum");
  wtable->add_option("weight", table_name, "Weight id (W_FFW, W_RANKS_L, ...)")->required();
  wtable->add_option("--max", max_n)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) {
      dsl::Env env;
      env.order = expand_order;
      if (z_value && c_value) env.mode = Mode::Specialized;
      if (z_value) env.params["z"] = Monomial{BigRational::parse(*z_value)};
      if (c_value) env.params["c"] = Monomial{BigRational::parse(*c_value)};
      std::cout << dsl::eval(dsl::parse(expr_text), env).to_string() << "\n";
      return kExitOk;
    }
    if (*table) {
      if (!partitions::has_counter(table_name)) {
        std::cerr << "unknown counter '" << table_name << "'\n";
        return kExitUsage;
      }
      std::cout << "n\t" << table_name << "\n";
      for (int n = 1; n <= max_n; ++n) std::cout << n << "\t" << partitions::count(table_name, n, extra) << "\n";
      return kExitOk;
    }
    if (*wtable) {
      if (!partitions::has_weight(table_name)) {
        std::cerr << "unknown weight '" << table_name << "'\n";
        return kExitUsage;
      }
      std::cout << "n\t" << table_name << "\n";
      for (int n = 1; n <= max_n; ++n) std::cout << n << "\t" << partitions::weighted_sum(table_name, n) << "\n";
      return kExitOk;
    }

    const auto cat = catalog::Catalog::from_file(catalog_path);
    if (*list) {
      for (const auto& e : select(cat, only, skip)) {
        std::cout << e.id << "\t";
        for (std::size_t i = 0; i < e.tags.size(); ++i) std::cout << (i ? "," : "") << catalog::tag_name(e.tags[i]);
        std::cout << "\t" << e.anchor << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      for (const auto& id : ids)
        if (!cat.contains(id)) {
          std::cerr << "unknown identity '" << id << "'\n";
          return kExitUsage;
        }
      std::vector<catalog::Report> reports;
      for (const auto& id : ids) reports.push_back(catalog::verify(cat, id, to_options(vflags)));
      return emit(reports, vflags);
    }
    if (*verify_all) {
      const auto subset = select(cat, only, skip);
      return emit(catalog::verify_all(cat, to_options(vflags), jobs, &subset), vflags);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    const bool usage = e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::CatalogError ||
                       e.kind() == ErrorKind::UnknownCounter || e.kind() == ErrorKind::UnknownWeight ||
                       e.kind() == ErrorKind::UnknownIdentity || e.kind() == ErrorKind::InvalidArgument;
    return usage ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
