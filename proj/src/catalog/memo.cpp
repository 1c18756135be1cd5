#include "memo.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qident/partitions/counters.hpp"
#include "qident/partitions/weights.hpp"

namespace qident::catalog::detail {

namespace {

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long long counter(const std::string& name, int n, std::optional<int> extra) {
  static std::map<std::tuple<std::string, int, std::optional<int>>, long long> cache;
  const auto key = std::make_tuple(name, n, extra);
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const long long value = partitions::count(name, n, extra);
  std::lock_guard lock(memo_mutex());
  return cache.emplace(key, value).first->second;
}

const LaurentPoly& weighted(const std::string& id, int n) {
  // std::map never moves its nodes, so returned references stay valid.
  static std::map<std::pair<std::string, int>, LaurentPoly> cache;
  const auto key = std::make_pair(id, n);
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LaurentPoly value = partitions::weighted_sum(id, n);
  std::lock_guard lock(memo_mutex());
  return cache.emplace(key, std::move(value)).first->second;
}

long long partitions_p(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return counter("p", n);
}

}  // namespace qident::catalog::detail
