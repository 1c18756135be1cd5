#include "qident/partitions/stats.hpp"

#include "qident/error.hpp"

namespace qident::partitions {

int PartitionStats::multiplicity(int part) const {
  for (const auto& [value, count] : mult)
    if (value == part) return count;
  return 0;
}

PartitionStats stats(const Partition& p) {
  if (p.empty()) throw Error(ErrorKind::InvalidArgument, "stats of the empty partition");
  PartitionStats st;
  st.l = p.front();
  st.s = p.back();
  st.num_parts = static_cast<int>(p.size());
  st.rank = st.l - st.num_parts;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (st.mult.empty() || st.mult.back().first != *it)
      st.mult.emplace_back(*it, 1);
    else
      ++st.mult.back().second;
  }
  st.nu_d = static_cast<int>(st.mult.size());
  st.L = st.mult.back().second;
  return st;
}

int largest_odd_part(const Partition& p) {
  for (int part : p)
    if (part % 2 != 0) return part;
  return 0;
}

}  // namespace qident::partitions
