#include "qident/catalog/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "memo.hpp"
#include "qident/catalog/builtins.hpp"
#include "qident/catalog/sequences.hpp"

namespace qident::catalog {

namespace {

constexpr int kRedraws = 25;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_pole_error(ErrorKind k) {
  return k == ErrorKind::DivisionByZero || k == ErrorKind::ZeroAtPole || k == ErrorKind::NonInvertibleConstantTerm ||
         k == ErrorKind::NotDivisible;
}

Monomial bound_or_symbolic(const dsl::Env& env, const std::string& name, Monomial symbolic) {
  if (auto it = env.params.find(name); it != env.params.end()) return it->second;
  if (env.mode == Mode::Specialized)
    throw Error(ErrorKind::UnboundVariable, "variable " + name + " is unbound in specialize mode");
  return symbolic;
}

void add_at(QSeries& s, const Monomial& m) {
  if (m.is_zero()) return;
  if (m.eq < 0) throw Error(ErrorKind::NegativeValuation, "weighted term with a negative power of q");
  if (m.eq > s.order()) return;
  const int n = static_cast<int>(m.eq);
  s.set(n, s[n] + m.coefficient_poly());
}

QSeries coefficient_series(const SideSpec& side, const dsl::Env& env) {
  QSeries out(env.order, env.mode);
  if (side.at0) out.set(0, LaurentPoly(*side.at0));
  for (int n = 1; n <= env.order; ++n) {
    if (side.kind == SideSpec::Kind::Counter)
      out.set(n, LaurentPoly(BigRational(detail::counter(side.name, n, side.extra))));
    else
      out.set(n, LaurentPoly(sequence_value(side.name, n)));
  }
  return out;
}

QSeries weighted_series(const SideSpec& side, const dsl::Env& env) {
  const Monomial z = bound_or_symbolic(env, "z", Monomial{BigRational(1), 1, 0, 0});
  const Monomial c = bound_or_symbolic(env, "c", Monomial{BigRational(1), 0, 1, 0});
  QSeries out(env.order, env.mode);
  if (side.at0) out.set(0, LaurentPoly(*side.at0));
  for (int n = 1; n <= env.order; ++n)
    for (const auto& [e, coef] : detail::weighted(side.name, n).terms())
      add_at(out, Monomial{coef, 0, 0, n} * z.pow(e.z) * c.pow(e.c));
  return out;
}

std::string render_param(const dsl::Env& env, const std::string& name) {
  if (auto it = env.ints.find(name); it != env.ints.end()) return std::to_string(it->second);
  if (auto it = env.params.find(name); it != env.params.end()) return render_monomial(it->second);
  return "symbolic";
}

class PointDrawer {
 public:
  PointDrawer(const IdentityEntry& entry, Mode mode, std::uint64_t seed)
      : entry_(entry), mode_(mode), rng_(seed ^ fnv1a(entry.id)) {}

  bool has_random() const {
    for (const auto& [name, dom] : entry_.params)
      if (dom.kind == ParamDomain::Kind::Unit || (dom.kind == ParamDomain::Kind::SymbolicZC && mode_ == Mode::Specialized))
        return true;
    return false;
  }

  /// Binds every parameter of the entry on top of `base` (which carries the
  /// integer parameters already).
  dsl::Env draw(dsl::Env env) {
    std::vector<BigRational> used;
    for (const auto& [name, dom] : entry_.params) {
      switch (dom.kind) {
        case ParamDomain::Kind::SmallInt: break;
        case ParamDomain::Kind::SymbolicZC:
          if (mode_ == Mode::Specialized) env.params[name] = Monomial{unit(used, std::nullopt, env)};
          break;
        case ParamDomain::Kind::Unit:
          env.params[name] = Monomial{unit(used, dom.below, env), 0, 0, dom.q_power};
          break;
        case ParamDomain::Kind::Fixed: {
          auto m = dsl::eval_monomial(dom.fixed, env);
          if (!m) throw Error(ErrorKind::NotAMonomial, "parameter " + name + " is not a monomial");
          env.params[name] = *m;
          break;
        }
      }
    }
    return env;
  }

 private:
  BigRational unit(std::vector<BigRational>& used, const std::optional<std::string>& below, const dsl::Env& env) {
    std::optional<BigRational> bound;
    if (below) {
      auto it = env.params.find(*below);
      if (it == env.params.end())
        throw Error(ErrorKind::CatalogError, entry_.id + ": bound '" + *below + "' must be drawn first");
      bound = it->second.coef.abs();
    }
    std::uniform_int_distribution<int> den_dist(2, 100);
    for (;;) {
      const int den = den_dist(rng_);
      std::uniform_int_distribution<int> num_dist(-den / 2, den / 2);
      const int num = num_dist(rng_);
      if (num == 0) continue;
      BigRational r(num, den);
      if (bound && !(r.abs() < *bound)) continue;
      if (std::any_of(used.begin(), used.end(), [&](const BigRational& u) { return u.abs() == r.abs(); })) continue;
      used.push_back(r);
      return r;
    }
  }

  const IdentityEntry& entry_;
  Mode mode_;
  std::mt19937_64 rng_;
};

std::vector<std::map<std::string, long long>> int_grid(const IdentityEntry& entry) {
  std::vector<std::map<std::string, long long>> grid(1);
  for (const auto& [name, dom] : entry.params) {
    if (dom.kind != ParamDomain::Kind::SmallInt) continue;
    std::vector<std::map<std::string, long long>> next;
    for (const auto& g : grid)
      for (int v = dom.lo; v <= dom.hi; ++v) {
        auto h = g;
        h[name] = v;
        next.push_back(std::move(h));
      }
    grid = std::move(next);
  }
  return grid;
}

std::optional<Mismatch> compare(const std::vector<QSeries>& sides) {
  std::optional<Mismatch> best;
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      const int N = std::min(sides[i].order(), sides[j].order());
      for (int n = 0; n <= N; ++n) {
        if (sides[i][n] == sides[j][n]) continue;
        if (!best || n < best->power) best = Mismatch{n, sides[i][n].to_string(), sides[j][n].to_string(), i, j, 0};
        break;
      }
    }
  return best;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

std::string render_monomial(const Monomial& m) {
  if (m.is_zero()) return "0";
  std::string vars;
  auto add = [&](const char* v, long long e) {
    if (e == 0) return;
    if (!vars.empty()) vars += "*";
    vars += v;
    if (e != 1) vars += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  };
  add("z", m.ez);
  add("c", m.ec);
  add("q", m.eq);
  if (vars.empty()) return m.coef.to_string();
  if (m.coef.is_one()) return vars;
  if (m.coef == BigRational(-1)) return "-" + vars;
  return m.coef.to_string() + "*" + vars;
}

QSeries evaluate_side(const SideSpec& side, const dsl::Env& base) {
  dsl::Env env = base;
  for (const auto& [name, expr] : side.subs) {
    auto m = dsl::eval_monomial(expr, env);
    if (!m) throw Error(ErrorKind::NotAMonomial, "substitution for " + name + " is not a monomial");
    env.params[name] = *m;
  }

  QSeries out(env.order, env.mode);
  bool times_applied = false;
  switch (side.kind) {
    case SideSpec::Kind::Dsl:
      out = dsl::eval(side.times ? dsl::Expr::binary(dsl::Expr::Kind::Mul, side.times, side.expr) : side.expr, env);
      times_applied = true;
      break;
    case SideSpec::Kind::Builtin: {
      std::map<std::string, Monomial> args;
      for (const auto& [name, expr] : side.args) {
        auto m = dsl::eval_monomial(expr, env);
        if (!m) throw Error(ErrorKind::NotAMonomial, "builtin argument " + name + " is not a monomial");
        args[name] = *m;
      }
      out = builtin_builder(side.name, args, env.order, env.mode);
      break;
    }
    case SideSpec::Kind::Counter:
    case SideSpec::Kind::Sequence: out = coefficient_series(side, env); break;
    case SideSpec::Kind::Weighted: out = weighted_series(side, env); break;
    case SideSpec::Kind::Sum:
      for (const auto& term : side.terms) out += evaluate_side(term, env);
      break;
  }
  if (side.times && !times_applied) out = dsl::eval(side.times, env) * out;
  if (!side.scale.is_one()) out *= LaurentPoly(side.scale);
  return out;
}

Report verify(const IdentityEntry& entry, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.id = entry.id;
  r.mode = opts.force_specialize ? Mode::Specialized : entry.default_mode;
  r.order = opts.order.value_or(entry.order);
  if (entry.max_order) r.order = std::min(r.order, *entry.max_order);
  r.seed = opts.seed;
  r.remark = entry.has_tag(Tag::Remark);

  auto finish = [&](Report& rep) -> Report {
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  try {
    PointDrawer drawer(entry, r.mode, opts.seed);
    const int points = drawer.has_random() ? std::max(1, opts.points) : 1;
    std::size_t point_index = 0;
    for (const auto& ints : int_grid(entry)) {
      dsl::Env base;
      base.order = r.order;
      base.mode = r.mode;
      base.ints = ints;
      for (int k = 0; k < points; ++k, ++point_index) {
        std::vector<QSeries> values;
        dsl::Env env;
        for (int attempt = 0;; ++attempt) {
          env = drawer.draw(base);
          values.clear();
          try {
            for (const auto& side : entry.sides) values.push_back(evaluate_side(side, env));
            break;
          } catch (const Error& e) {
            if (!drawer.has_random() || !is_pole_error(e.kind()) || attempt + 1 >= kRedraws) throw;
          }
        }
        std::map<std::string, std::string> rendered;
        for (const auto& [name, dom] : entry.params) rendered[name] = render_param(env, name);
        r.params.push_back(std::move(rendered));
        if (auto mm = compare(values)) {
          mm->point = point_index;
          r.verdict = Verdict::Fail;
          r.first_mismatch = mm;
          return finish(r);
        }
      }
    }
  } catch (const Error& e) {
    r.verdict = Verdict::Error;
    r.error_kind = e.kind();
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.error_kind = ErrorKind::InvalidArgument;
    r.error_message = e.what();
  }
  return finish(r);
}

Report verify(const Catalog& catalog, const std::string& id, const VerifyOptions& opts) {
  return verify(catalog.find(id), opts);
}

std::vector<Report> verify_all(const Catalog& catalog, const VerifyOptions& opts, int jobs,
                               const std::vector<IdentityEntry>* subset) {
  const auto& entries = subset ? *subset : catalog.entries();
  std::vector<Report> out(entries.size());
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = verify(entries[i], opts);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string reports_to_json(const std::vector<Report>& reports, bool timing) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["id"] = r.id;
    j["verdict"] = verdict_name(r.verdict);
    j["mode"] = mode_name(r.mode);
    j["order"] = r.order;
    j["seed"] = r.seed;
    j["params"] = json::array();
    for (const auto& p : r.params) {
      json o = json::object();
      for (const auto& [k, v] : p) o[k] = v;
      j["params"].push_back(o);
    }
    if (r.first_mismatch) {
      const auto& m = *r.first_mismatch;
      j["first_mismatch"] = {{"power", m.power}, {"lhs", m.lhs}, {"rhs", m.rhs},
                             {"sides", {m.side_a, m.side_b}}, {"point", m.point}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    j["ms"] = timing ? json(std::round(r.ms * 1000) / 1000) : json(nullptr);
    if (r.error_kind)
      j["error"] = {{"kind", std::string(error_kind_name(*r.error_kind))}, {"message", r.error_message}};
    if (r.remark) j["remark"] = true;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports, bool timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << verdict_name(r.verdict) << "  " << r.id << "  " << mode_name(r.mode) << " N=" << r.order;
    if (r.remark) os << "  (remark-level)";
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", r.ms);
      os << "  " << buf << " ms";
    }
    if (r.first_mismatch) {
      const auto& m = *r.first_mismatch;
      os << "\n    first mismatch at q^" << m.power << " between sides " << m.side_a << " and " << m.side_b
         << ": " << m.lhs << " vs " << m.rhs;
      if (m.point < r.params.size() && !r.params[m.point].empty()) {
        os << "\n    seed " << r.seed << ", params";
        for (const auto& [k, v] : r.params[m.point]) os << " " << k << "=" << v;
      }
    }
    if (r.error_kind) os << "\n    " << error_kind_name(*r.error_kind) << ": " << r.error_message;
    os << "\n";
  }
  return os.str();
}

}  // namespace qident::catalog
