#pragma once

#include <optional>
#include <string>

#include "qident/laurent_poly.hpp"

namespace qident::catalog::detail {

/// Thread-safe memoized views of the enumeration counters and weighted sums;
/// many entries and every specialization point reuse the same values.
long long counter(const std::string& name, int n, std::optional<int> extra = std::nullopt);
const LaurentPoly& weighted(const std::string& id, int n);

/// p(n) with p(0) = 1 and p(n) = 0 for n < 0.
long long partitions_p(int n);

}  // namespace qident::catalog::detail
