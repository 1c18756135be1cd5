#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qident::partitions {

/// Named counting function at n; `extra` is the rank m for `N`.
/// Every counter is computed by enumeration or trial division.
long long count(const std::string& name, int n, std::optional<int> extra = std::nullopt);

bool has_counter(const std::string& name);
const std::vector<std::string>& counter_names();

long long divisor_count(int n);

}  // namespace qident::partitions
