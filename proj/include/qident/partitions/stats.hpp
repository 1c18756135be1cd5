#pragma once

#include <utility>
#include <vector>

#include "qident/partitions/enumerate.hpp"

namespace qident::partitions {

struct PartitionStats {
  int s = 0;          // smallest part
  int l = 0;          // largest part
  int num_parts = 0;  // #
  int rank = 0;       // l - #
  int L = 0;          // multiplicity of the largest part
  int nu_d = 0;       // number of distinct part values
  /// (part value, multiplicity) in ascending part order.
  std::vector<std::pair<int, int>> mult;

  int multiplicity(int part) const;
};

PartitionStats stats(const Partition& p);

/// Largest odd part, or 0 when there is none.
int largest_odd_part(const Partition& p);

}  // namespace qident::partitions
