#include "qident/partitions/weights.hpp"

#include <functional>
#include <map>
#include <tuple>

#include "qident/error.hpp"
#include "qident/partitions/stats.hpp"

namespace qident::partitions {

namespace {

int sgn(long long k) { return k % 2 == 0 ? 1 : -1; }

LaurentPoly z_pow(int e) { return LaurentPoly::monomial(1, e, 0); }

/// Σ_{i<s} (sign·x)^i for x = z or c.
LaurentPoly geometric(Var v, int sign, int s) {
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < s; ++i) {
    Exponent e = v == Var::Z ? Exponent{i, 0} : Exponent{0, i};
    terms.emplace_back(e, BigRational(sign < 0 ? sgn(i) : 1));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// (x + shift)^k, cached per thread since the same powers recur constantly.
const LaurentPoly& binomial_power(Var v, int shift, int k) {
  thread_local std::map<std::tuple<int, int, int>, LaurentPoly> cache;
  auto key = std::make_tuple(static_cast<int>(v), shift, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentPoly base = LaurentPoly::variable(v) + LaurentPoly(shift);
  return cache.emplace(key, base.pow(static_cast<unsigned>(k))).first->second;
}

/// c^{l-ν}(c-1)^{ν-1}
LaurentPoly c_factor(const PartitionStats& st) {
  return binomial_power(Var::C, -1, st.nu_d - 1).shifted(1, {0, st.l - st.nu_d});
}

long long two_pow(int k) { return 1LL << k; }

struct Accumulator {
  std::map<Exponent, BigRational> acc;

  void add(const LaurentPoly& p, const BigRational& scale = 1) {
    for (const auto& [e, coef] : p.terms()) acc[e] += coef * scale;
  }

  LaurentPoly finish(const BigRational& scale = 1) const {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (const auto& [e, coef] : acc) terms.emplace_back(e, coef * scale);
    return LaurentPoly::from_terms(std::move(terms));
  }
};

using PlainWeight = std::function<LaurentPoly(const PartitionStats&, const Partition&)>;

struct WeightDef {
  WeightInfo info;
  enum class Kind { Plain, Divisor, Overpartition } kind = Kind::Plain;
  PlainWeight plain;
  std::function<LaurentPoly(int)> divisor;
  std::function<BigRational(const Overpartition&, const PartitionStats&)> over;
  BigRational scale = 1;
};

WeightDef plain(std::string id, PartitionClass cls, std::string desc, PlainWeight f) {
  WeightDef d;
  d.info = {std::move(id), cls, std::move(desc)};
  d.plain = std::move(f);
  return d;
}

WeightDef divisor(std::string id, std::string desc, std::function<LaurentPoly(int)> f) {
  WeightDef d;
  d.info = {std::move(id), PartitionClass::All, std::move(desc)};
  d.kind = WeightDef::Kind::Divisor;
  d.divisor = std::move(f);
  return d;
}

WeightDef over(std::string id, std::string desc, BigRational scale,
               std::function<BigRational(const Overpartition&, const PartitionStats&)> f) {
  WeightDef d;
  d.info = {std::move(id), PartitionClass::Overpartitions, std::move(desc)};
  d.kind = WeightDef::Kind::Overpartition;
  d.over = std::move(f);
  d.scale = scale;
  return d;
}

constexpr auto kAll = PartitionClass::All;
constexpr auto kDistinct = PartitionClass::Distinct;

const std::vector<WeightDef>& registry() {
  static const std::vector<WeightDef> table = [] {
    std::vector<WeightDef> t;
    t.push_back(plain("W_FFW", kDistinct, "(-1)^(#-1) (1 + c + ... + c^(s-1))",
                      [](const PartitionStats& st, const Partition&) {
                        return geometric(Var::C, 1, st.s) * BigRational(sgn(st.num_parts - 1));
                      }));
    t.push_back(plain("W_FFW_RHS", kAll, "c^(l-nu_d) (c-1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) { return c_factor(st); }));
    t.push_back(plain("W_GWPI_L", kDistinct, "(-1)^(#-1) z^(l+1-s) (z^s - c^s)/(z - c)",
                      [](const PartitionStats& st, const Partition&) {
                        return geometric_weight(st.s).shifted(sgn(st.num_parts - 1), {st.l + 1 - st.s, 0});
                      }));
    t.push_back(plain("W_GWPI_R", kAll, "z^# c^(l-nu_d) (c-1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return c_factor(st).shifted(1, {st.num_parts, 0});
                      }));
    t.push_back(plain("W_SIGMA_L", kDistinct, "(-1)^rank (1 - c + ... + (-c)^(s-1))",
                      [](const PartitionStats& st, const Partition&) {
                        return geometric(Var::C, -1, st.s) * BigRational(sgn(st.rank));
                      }));
    t.push_back(plain("W_SIGMA_R", kAll, "(-1)^(#-1) c^(l-nu_d) (c-1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return c_factor(st) * BigRational(sgn(st.num_parts - 1));
                      }));
    t.push_back(plain("W_CTO1_L", kDistinct, "(-1)^(#-1) z^(l+1-s) (1 + z + ... + z^(s-1))",
                      [](const PartitionStats& st, const Partition&) {
                        return geometric(Var::Z, 1, st.s).shifted(sgn(st.num_parts - 1), {st.l + 1 - st.s, 0});
                      }));
    t.push_back(divisor("W_CTO1_R", "sum of z^d over divisors d of n", [](int d) { return z_pow(d); }));
    t.push_back(plain("W_CTOM1_L", kDistinct, "(-1)^(#+s) z^(l+1-s) (1 - z + ... + (-z)^(s-1))",
                      [](const PartitionStats& st, const Partition&) {
                        return geometric(Var::Z, -1, st.s).shifted(sgn(st.num_parts + st.s), {st.l + 1 - st.s, 0});
                      }));
    t.push_back(plain("W_CTOM1_R", kAll, "(-1)^(l-1) z^# 2^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly::monomial(sgn(st.l - 1) * two_pow(st.nu_d - 1), st.num_parts, 0);
                      }));
    t.push_back(plain("W_CEZ_L", kDistinct, "(-1)^(#-1) z^l s",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly::monomial(sgn(st.num_parts - 1) * st.s, st.l, 0);
                      }));
    t.push_back(plain("W_CEZ_R", kAll, "z^(#+l-nu_d) (z-1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return binomial_power(Var::Z, -1, st.nu_d - 1).shifted(1, {st.num_parts + st.l - st.nu_d, 0});
                      }));
    t.push_back(plain("W_RANKS_L", kDistinct, "(-1)^rank s",
                      [](const PartitionStats& st, const Partition&) { return LaurentPoly(sgn(st.rank) * st.s); }));
    t.push_back(plain("W_RANKS_R", kAll, "(-1)^rank 2^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(sgn(st.rank) * two_pow(st.nu_d - 1));
                      }));
    t.push_back(plain("W_CEMZ_L", kDistinct, "[s odd] (-1)^(#-1) z^l",
                      [](const PartitionStats& st, const Partition&) {
                        if (st.s % 2 == 0) return LaurentPoly();
                        return LaurentPoly::monomial(sgn(st.num_parts - 1), st.l, 0);
                      }));
    t.push_back(plain("W_CEMZ_R", kAll, "(-1)^(l-1) z^(#+l-nu_d) (z+1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return binomial_power(Var::Z, 1, st.nu_d - 1)
                            .shifted(sgn(st.l - 1), {st.num_parts + st.l - st.nu_d, 0});
                      }));
    t.push_back(plain("W_ALLA_L", kDistinct, "[s odd] (-1)^(#-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(st.s % 2 == 0 ? 0 : sgn(st.num_parts - 1));
                      }));
    t.push_back(plain("W_ALLA_R", kAll, "(-1)^(l-1) 2^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(sgn(st.l - 1) * two_pow(st.nu_d - 1));
                      }));
    t.push_back(plain("W_DEO_L", kDistinct, "[s odd] (-1)^(rank-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(st.s % 2 == 0 ? 0 : sgn(st.rank - 1));
                      }));
    t.push_back(plain("W_G5WPI_L", kAll, "z^(l+#-L-nu_d+1) (z-1)^(nu_d-1) (z^L - c^L)/(z - c)",
                      [](const PartitionStats& st, const Partition&) {
                        return (binomial_power(Var::Z, -1, st.nu_d - 1) * geometric_weight(st.L))
                            .shifted(1, {st.l + st.num_parts - st.L - st.nu_d + 1, 0});
                      }));
    t.push_back(plain("W_G5WPI_R", kAll, "c^(l-nu_d) (c-1)^(nu_d-1) z^# L",
                      [](const PartitionStats& st, const Partition&) {
                        return c_factor(st).shifted(st.L, {st.num_parts, 0});
                      }));
    t.push_back(plain("W_CEQMZ_L", kAll, "[L odd] z^(l+#-nu_d) (z-1)^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        if (st.L % 2 == 0) return LaurentPoly();
                        return binomial_power(Var::Z, -1, st.nu_d - 1).shifted(1, {st.l + st.num_parts - st.nu_d, 0});
                      }));
    t.push_back(plain("W_CEQMZ_R", kAll, "(-1)^(l-1) z^(l+#-nu_d) (z+1)^(nu_d-1) L",
                      [](const PartitionStats& st, const Partition&) {
                        return binomial_power(Var::Z, 1, st.nu_d - 1)
                            .shifted(sgn(st.l - 1) * st.L, {st.l + st.num_parts - st.nu_d, 0});
                      }));
    t.push_back(divisor("W_G5Z1_L", "sum of (c^d - 1)/(c - 1) over divisors d of n",
                        [](int d) { return geometric(Var::C, 1, d); }));
    t.push_back(plain("W_G5Z1_R", kAll, "c^(l-nu_d) (c-1)^(nu_d-1) L",
                      [](const PartitionStats& st, const Partition&) { return c_factor(st) * BigRational(st.L); }));
    t.push_back(plain("W_CLPTI_R", kAll, "(-1)^(l-1) 2^(nu_d-1) L",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(sgn(st.l - 1) * two_pow(st.nu_d - 1) * st.L);
                      }));
    t.push_back(divisor("W_CLI_L", "sum of (-1)^d d over divisors d of n",
                        [](int d) { return LaurentPoly(static_cast<long long>(sgn(d)) * d); }));
    t.push_back(plain("W_CLI_R", kAll, "[L odd] (-1)^(rank-1) 2^(nu_d-1)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(st.L % 2 == 0 ? 0 : sgn(st.rank - 1) * two_pow(st.nu_d - 1));
                      }));
    t.push_back(plain("W_G5ZM1_L", kAll, "(-1)^(rank-L) 2^(nu_d-1) ((-1)^L - c^L)/(-1 - c)",
                      [](const PartitionStats& st, const Partition&) {
                        std::vector<LaurentPoly::Term> terms;
                        for (int i = 0; i < st.L; ++i) terms.emplace_back(Exponent{0, i}, BigRational(sgn(st.L - 1 - i)));
                        return LaurentPoly::from_terms(std::move(terms)) *
                               BigRational(sgn(st.rank - st.L) * two_pow(st.nu_d - 1));
                      }));
    t.push_back(plain("W_G5ZM1_R", kAll, "(-1)^# c^(l-nu_d) (c-1)^(nu_d-1) L",
                      [](const PartitionStats& st, const Partition&) {
                        return c_factor(st) * BigRational(sgn(st.num_parts) * st.L);
                      }));
    t.push_back(over("W_DO_OVERP", "1/2 (-1)^(l-1) L over all overpartitions", BigRational(1, 2),
                     [](const Overpartition&, const PartitionStats& st) { return BigRational(sgn(st.l - 1) * st.L); }));
    t.push_back(over("W_NEWDN_A", "2L - 1 over overpartitions whose largest part is overlined", 1,
                     [](const Overpartition& op, const PartitionStats& st) {
                       return op.largest_overlined() ? BigRational(2 * st.L - 1) : BigRational(0);
                     }));
    t.push_back(plain("W_NEWDN_B", PartitionClass::NoGaps, "[L >= 2] L(L-1) prod_{i<l} (2 nu(i) - 1)",
                      [](const PartitionStats& st, const Partition&) {
                        if (st.L < 2) return LaurentPoly();
                        long long prod = static_cast<long long>(st.L) * (st.L - 1);
                        for (std::size_t i = 0; i + 1 < st.mult.size(); ++i) prod *= 2 * st.mult[i].second - 1;
                        return LaurentPoly(prod);
                      }));
    t.push_back(plain("W_GAR1", PartitionClass::QGarvan, "(-1)^((lo+1)/2 + #), lo the largest odd part",
                      [](const PartitionStats& st, const Partition& p) {
                        return LaurentPoly(sgn((largest_odd_part(p) + 1) / 2 + st.num_parts));
                      }));
    t.push_back(plain("W_GAR2", PartitionClass::OddParts, "2^(nu_d-1) (-1)^((l+1)/2 + #)",
                      [](const PartitionStats& st, const Partition&) {
                        return LaurentPoly(two_pow(st.nu_d - 1) * sgn((st.l + 1) / 2 + st.num_parts));
                      }));
    return t;
  }();
  return table;
}

const WeightDef& find(const std::string& id) {
  for (const auto& d : registry())
    if (d.info.id == id) return d;
  throw Error(ErrorKind::UnknownWeight, "unknown weight '" + id + "'");
}

}  // namespace

LaurentPoly weighted_sum(const std::string& id, int n) {
  const WeightDef& def = find(id);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "weighted sums need n >= 1");
  Accumulator acc;
  switch (def.kind) {
    case WeightDef::Kind::Plain:
      for_each_partition(def.info.cls, n, [&](const Partition& p) { acc.add(def.plain(stats(p), p)); });
      break;
    case WeightDef::Kind::Divisor:
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc.add(def.divisor(d));
      break;
    case WeightDef::Kind::Overpartition:
      for_each_overpartition(n, [&](const Overpartition& op) { acc.add(LaurentPoly(def.over(op, stats(op.parts)))); });
      break;
  }
  return acc.finish(def.scale);
}

bool has_weight(const std::string& id) {
  for (const auto& d : registry())
    if (d.info.id == id) return true;
  return false;
}

const std::vector<WeightInfo>& weights() {
  static const std::vector<WeightInfo> infos = [] {
    std::vector<WeightInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

}  // namespace qident::partitions
