#include "qident/partitions/counters.hpp"

#include <functional>
#include <map>

#include "qident/error.hpp"
#include "qident/partitions/enumerate.hpp"
#include "qident/partitions/stats.hpp"

namespace qident::partitions {

namespace {

using Counter = std::function<long long(int, std::optional<int>)>;

long long sum_over(PartitionClass cls, int n, const std::function<long long(const PartitionStats&)>& f) {
  long long total = 0;
  for_each_partition(cls, n, [&](const Partition& p) { total += f(stats(p)); });
  return total;
}

long long divisor_sum(int n, const std::function<long long(int)>& f) {
  long long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += f(d);
  return total;
}

long long ssptd_parity(int n, int parity) {
  return sum_over(PartitionClass::Distinct, n, [&](const PartitionStats& st) -> long long {
    return parity < 0 || st.num_parts % 2 == parity ? st.s : 0;
  });
}

const std::map<std::string, Counter>& registry() {
  static const std::map<std::string, Counter> table = {
      {"p", [](int n, auto) { return count_class(PartitionClass::All, n); }},
      {"d", [](int n, auto) { return divisor_count(n); }},
      {"d_o", [](int n, auto) { return divisor_sum(n, [](int d) { return d % 2 == 1 ? 1LL : 0LL; }); }},
      {"d_e", [](int n, auto) { return divisor_sum(n, [](int d) { return d % 2 == 0 ? 1LL : 0LL; }); }},
      {"d81",
       [](int n, auto) {
         return divisor_sum(n, [](int d) {
           const int r = d % 8;
           if (r == 1 || r == 7) return 1LL;
           if (r == 3 || r == 5) return -1LL;
           return 0LL;
         });
       }},
      {"spt",
       [](int n, auto) {
         return sum_over(PartitionClass::All, n, [](const PartitionStats& st) -> long long { return st.mult.front().second; });
       }},
      {"lpt", [](int n, auto) { return sum_over(PartitionClass::All, n, [](const PartitionStats& st) -> long long { return st.L; }); }},
      {"N",
       [](int n, std::optional<int> m) {
         if (!m) throw Error(ErrorKind::InvalidArgument, "counter N needs the rank m");
         return sum_over(PartitionClass::All, n, [&](const PartitionStats& st) -> long long { return st.rank == *m ? 1 : 0; });
       }},
      {"N2",
       [](int n, auto) {
         return sum_over(PartitionClass::All, n, [](const PartitionStats& st) -> long long {
           return static_cast<long long>(st.rank) * st.rank;
         });
       }},
      {"NSC",
       [](int n, auto) {
         long long total = 0;
         for_each_vector_partition(n, [&](const VectorPartition& vp) { total += vp.weight(); });
         return total;
       }},
      {"w",
       [](int n, auto) {
         return sum_over(PartitionClass::NoGaps, n, [](const PartitionStats& st) -> long long {
           long long prod = static_cast<long long>(st.L) * (st.L - 1) / 2;
           for (std::size_t i = 0; i + 1 < st.mult.size(); ++i) prod *= st.mult[i].second - 1;
           return prod;
         });
       }},
      {"ssptd", [](int n, auto) { return ssptd_parity(n, -1); }},
      {"ssptd_o", [](int n, auto) { return ssptd_parity(n, 1); }},
      {"ssptd_e", [](int n, auto) { return ssptd_parity(n, 0); }},
      {"a",
       [](int n, auto) {
         return sum_over(PartitionClass::All, n, [](const PartitionStats& st) -> long long {
           for (std::size_t i = 0; i + 1 < st.mult.size(); ++i)
             if (st.mult[i].second > 1) return 0;
           return 1;
         });
       }},
      {"pbar", [](int n, auto) { return count_class(PartitionClass::Overpartitions, n); }},
      {"rstar",
       [](int n, auto) {
         long long total = 0;
         for (long long k = 1; k * k <= 2LL * n; ++k) {
           for (long long m = -(k / 2); m <= (k - 1) / 2; ++m)
             if (k * k - 2 * m * m == n) total += (m - 1) % 2 == 0 ? 1 : -1;
         }
         return total;
       }},
  };
  return table;
}

}  // namespace

long long divisor_count(int n) {
  return divisor_sum(n, [](int) { return 1LL; });
}

long long count(const std::string& name, int n, std::optional<int> extra) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnknownCounter, "unknown counter '" + name + "'");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "counter argument must be positive");
  return it->second(n, extra);
}

bool has_counter(const std::string& name) { return registry().count(name) > 0; }

const std::vector<std::string>& counter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

}  // namespace qident::partitions
