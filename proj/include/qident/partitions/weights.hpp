#pragma once

#include <string>
#include <vector>

#include "qident/laurent_poly.hpp"
#include "qident/partitions/enumerate.hpp"

namespace qident::partitions {

struct WeightInfo {
  std::string id;
  /// The class summed over; divisor-sum weights report ALL.
  PartitionClass cls;
  std::string description;
};

/// Σ over the weight's class of partitions of n of its weight, in Z[z^±, c^±].
LaurentPoly weighted_sum(const std::string& id, int n);

bool has_weight(const std::string& id);
const std::vector<WeightInfo>& weights();

}  // namespace qident::partitions
