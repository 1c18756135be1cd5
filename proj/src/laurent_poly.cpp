#include "qident/laurent_poly.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <ostream>

#include "qident/error.hpp"

namespace qident {

namespace {

std::int32_t checked_exp(long long v) {
  if (v < INT32_MIN || v > INT32_MAX) throw Error(ErrorKind::ExponentOverflow, "exponent out of 32-bit range");
  return static_cast<std::int32_t>(v);
}

std::string render_term(const Exponent& e, const BigRational& coef) {
  std::string vars;
  auto append = [&](const char* name, std::int32_t k) {
    if (k == 0) return;
    if (!vars.empty()) vars += '*';
    vars += name;
    if (k != 1) vars += '^' + std::to_string(k);
  };
  append("z", e.z);
  append("c", e.c);
  if (vars.empty()) return coef.to_string();
  if (coef.is_one()) return vars;
  if (coef == BigRational(-1)) return "-" + vars;
  return coef.to_string() + "*" + vars;
}

}  // namespace

Exponent add_exponents(Exponent a, Exponent b) {
  return {checked_exp(static_cast<long long>(a.z) + b.z), checked_exp(static_cast<long long>(a.c) + b.c)};
}

LaurentPoly::LaurentPoly(BigRational constant) {
  if (!constant.is_zero()) terms_.emplace_back(Exponent{}, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigRational coef, std::int32_t ez, std::int32_t ec) {
  LaurentPoly p;
  if (!coef.is_zero()) p.terms_.emplace_back(Exponent{ez, ec}, std::move(coef));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponent{});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Exponent{} && terms_[0].second.is_one();
}

BigRational LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) return it->second;
  return BigRational();
}

std::int32_t LaurentPoly::min_exp(Var v) const {
  if (terms_.empty()) return 0;
  if (v == Var::Z) return terms_.front().first.z;
  std::int32_t m = INT32_MAX;
  for (const auto& t : terms_) m = std::min(m, t.first.c);
  return m;
}

std::int32_t LaurentPoly::max_exp(Var v) const {
  if (terms_.empty()) return 0;
  if (v == Var::Z) return terms_.back().first.z;
  std::int32_t m = INT32_MIN;
  for (const auto& t : terms_) m = std::max(m, t.first.c);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const BigRational& coef, Exponent shift) {
  if (coef.is_zero() || p.is_zero()) return;
  const bool unit_shift = shift == Exponent{};
  std::vector<Term> merged;
  merged.reserve(terms_.size() + p.terms_.size());
  auto a = terms_.begin();
  auto b = p.terms_.begin();
  while (a != terms_.end() || b != p.terms_.end()) {
    if (b == p.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    Exponent eb = unit_shift ? b->first : add_exponents(b->first, shift);
    if (a == terms_.end() || eb < a->first) {
      merged.emplace_back(eb, coef.is_one() ? b->second : b->second * coef);
      ++b;
    } else if (a->first < eb) {
      merged.push_back(std::move(*a++));
    } else {
      BigRational sum = coef.is_one() ? a->second + b->second : a->second + b->second * coef;
      if (!sum.is_zero()) merged.emplace_back(eb, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, BigRational(1), Exponent{});
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, BigRational(-1), Exponent{});
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
  } else if (!rhs.is_one()) {
    for (auto& t : terms_) t.second *= rhs;
  }
  return *this;
}

LaurentPoly LaurentPoly::shifted(const BigRational& coef, Exponent shift) const {
  LaurentPoly out;
  if (coef.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.emplace_back(add_exponents(t.first, shift), t.second * coef);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].second, a.terms_[0].first);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].second, b.terms_[0].first);
  std::vector<LaurentPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) products.emplace_back(add_exponents(x.first, y.first), x.second * y.second);
  }
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [e, coef] = b.terms_[0];
    return shifted(BigRational(1) / coef, Exponent{-e.z, -e.c});
  }
  // Degree in each variable is additive over the Laurent ring, so every
  // quotient exponent lies in this box; leaving it proves non-divisibility.
  const long long zlo = static_cast<long long>(min_exp(Var::Z)) - b.min_exp(Var::Z);
  const long long zhi = static_cast<long long>(max_exp(Var::Z)) - b.max_exp(Var::Z);
  const long long clo = static_cast<long long>(min_exp(Var::C)) - b.min_exp(Var::C);
  const long long chi = static_cast<long long>(max_exp(Var::C)) - b.max_exp(Var::C);
  auto not_divisible = [&]() {
    return Error(ErrorKind::NotDivisible, "(" + to_string() + ") is not divisible by (" + b.to_string() + ")");
  };
  if (zlo > zhi || clo > chi) throw not_divisible();

  const auto& [lead_e, lead_c] = b.terms_.back();
  std::map<Exponent, BigRational> rem(terms_.begin(), terms_.end());
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    long long qz = static_cast<long long>(top->first.z) - lead_e.z;
    long long qc = static_cast<long long>(top->first.c) - lead_e.c;
    if (qz < zlo || qz > zhi || qc < clo || qc > chi) throw not_divisible();
    Exponent qe{static_cast<std::int32_t>(qz), static_cast<std::int32_t>(qc)};
    BigRational qcoef = top->second / lead_c;
    for (const auto& [be, bc] : b.terms_) {
      Exponent e = add_exponents(be, qe);
      auto it = rem.find(e);
      BigRational delta = bc * qcoef;
      if (it == rem.end()) {
        rem.emplace(e, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.emplace_back(qe, std::move(qcoef));
  }
  return from_terms(std::move(quotient));
}

BigRational LaurentPoly::eval(const BigRational& z0, const BigRational& c0) const {
  BigRational sum;
  for (const auto& [e, coef] : terms_) {
    if ((e.z < 0 && z0.is_zero()) || (e.c < 0 && c0.is_zero()))
      throw Error(ErrorKind::ZeroAtPole, "substituting 0 into a negative power in " + to_string());
    BigRational term = coef;
    if (e.z != 0) term *= z0.pow(e.z);
    if (e.c != 0) term *= c0.pow(e.c);
    sum += term;
  }
  return sum;
}

LaurentPoly LaurentPoly::substitute(Var v, const BigRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, coef] : terms_) {
    std::int32_t k = v == Var::Z ? e.z : e.c;
    if (k < 0 && value.is_zero())
      throw Error(ErrorKind::ZeroAtPole, "substituting 0 into a negative power in " + to_string());
    Exponent rest = v == Var::Z ? Exponent{0, e.c} : Exponent{e.z, 0};
    out.emplace_back(rest, k == 0 ? coef : coef * value.pow(k));
  }
  return from_terms(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    long long da = static_cast<long long>(a->first.z) + a->first.c;
    long long db = static_cast<long long>(b->first.z) + b->first.c;
    if (da != db) return da > db;
    return a->first.z > b->first.z;
  });
  std::string out;
  for (const Term* t : order) {
    std::string piece = render_term(t->first, t->second);
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly geometric_weight(int s) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "geometric_weight needs s >= 1");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) terms.emplace_back(Exponent{i, s - 1 - i}, BigRational(1));
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qident
