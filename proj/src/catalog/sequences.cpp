#include "qident/catalog/sequences.hpp"

#include <functional>
#include <utility>

#include "memo.hpp"
#include "qident/dsl/eval.hpp"
#include "qident/error.hpp"

namespace qident::catalog {

namespace {

using detail::counter;
using detail::partitions_p;

// Σ_k k χ12(k) p(n - (k²-1)/24), the q^n coefficient of H(q)/(q)_∞.
BigRational chi12_convolution(int n) {
  BigRational total(0);
  for (long long k = 1; (k * k - 1) / 24 <= n; ++k) {
    const int chi = dsl::chi12(k);
    if (chi == 0) continue;
    total += BigRational(k * chi * partitions_p(n - static_cast<int>((k * k - 1) / 24)));
  }
  return total;
}

int isqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

const std::vector<std::pair<std::string, std::function<BigRational(int)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<BigRational(int)>>> seqs = {
      {"n_p", [](int n) { return BigRational(static_cast<long long>(n) * partitions_p(n)); }},
      {"spt_rhs",
       [](int n) {
         return BigRational(static_cast<long long>(n) * partitions_p(n)) - BigRational(counter("N2", n), 2);
       }},
      {"alladi",
       [](int n) {
         const int r = isqrt(n);
         if (r * r != n) return BigRational(0);
         return BigRational(r % 2 == 1 ? 1 : -1);
       }},
      {"de_minus_do", [](int n) { return BigRational(counter("d_e", n) - counter("d_o", n)); }},
      {"signed_d81",
       [](int n) {
         const long long sign = (static_cast<long long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
         return BigRational(sign * counter("d81", n));
       }},
      {"wnrep", [](int n) { return BigRational(-2 * counter("d", n)) - chi12_convolution(n) / BigRational(2); }},
      {"root_seq", chi12_convolution},
      {"divisor_sum_signed",
       [](int n) {
         long long total = 0;
         for (int d = 1; d <= n; ++d)
           if (n % d == 0) total += (d % 2 == 0 ? d : -d);
         return BigRational(total);
       }},
  };
  return seqs;
}

}  // namespace

BigRational sequence_value(const std::string& name, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sequences start at n = 1");
  for (const auto& [id, f] : registry())
    if (id == name) return f(n);
  throw Error(ErrorKind::UnknownSequence, "unknown sequence '" + name + "'");
}

bool has_sequence(const std::string& name) {
  for (const auto& entry : registry())
    if (entry.first == name) return true;
  return false;
}

const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

}  // namespace qident::catalog
