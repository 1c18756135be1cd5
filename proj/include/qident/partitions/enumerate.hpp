#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qident::partitions {

/// Parts in weakly decreasing order.
using Partition = std::vector<int>;

enum class PartitionClass { All, Distinct, NoGaps, OddParts, QGarvan, Overpartitions, VectorSSelfConj };

std::optional<PartitionClass> parse_class(const std::string& name);
const char* class_name(PartitionClass cls);

struct Overpartition {
  Partition parts;
  /// Distinct part values whose first occurrence carries an overline, ascending.
  std::vector<int> overlined;

  bool largest_overlined() const;
};

/// (π₁, π₂, π₂) with π₁ distinct; the third component is implied.
struct VectorPartition {
  Partition pi1;
  Partition pi2;

  int weight() const { return pi1.size() % 2 == 1 ? 1 : -1; }
};

/// Streams the partitions of n in the given class (reverse-lexicographic
/// within each generator). Overpartition and vector classes have their own
/// visitors below.
void for_each_partition(PartitionClass cls, int n, const std::function<void(const Partition&)>& visit);

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit);
void for_each_vector_partition(int n, const std::function<void(const VectorPartition&)>& visit);

/// Pull-style generator over all partitions of n in reverse-lexicographic order.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n);
  /// Advances to the next partition; false once exhausted.
  bool next();
  const Partition& current() const { return current_; }

 private:
  int n_;
  bool started_ = false;
  Partition current_;
};

std::vector<Partition> enumerate(PartitionClass cls, int n);
long long count_class(PartitionClass cls, int n);

Partition conjugate(const Partition& p);

}  // namespace qident::partitions
