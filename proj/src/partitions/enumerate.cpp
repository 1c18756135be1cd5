#include "qident/partitions/enumerate.hpp"

#include <algorithm>

#include "qident/error.hpp"

namespace qident::partitions {

namespace {

struct ClassName {
  PartitionClass cls;
  const char* name;
};

constexpr ClassName kClassNames[] = {
    {PartitionClass::All, "ALL"},
    {PartitionClass::Distinct, "DISTINCT"},
    {PartitionClass::NoGaps, "NO_GAPS"},
    {PartitionClass::OddParts, "ODD_PARTS"},
    {PartitionClass::QGarvan, "Q_GARVAN"},
    {PartitionClass::Overpartitions, "OVERPARTITIONS"},
    {PartitionClass::VectorSSelfConj, "VECTOR_S_SELFCONJ"},
};

using Visit = std::function<void(const Partition&)>;

// Parts at most `max_part`, stepping by `step` (1 for all parts, 2 for odd).
void gen_bounded(int rem, int max_part, int step, Partition& cur, const Visit& visit) {
  if (rem == 0) {
    visit(cur);
    return;
  }
  int start = std::min(rem, max_part);
  if (step == 2 && start % 2 == 0) --start;
  for (int part = start; part >= 1; part -= step) {
    cur.push_back(part);
    gen_bounded(rem - part, part, step, cur, visit);
    cur.pop_back();
  }
}

void gen_distinct(int rem, int below, Partition& cur, const Visit& visit) {
  if (rem == 0) {
    visit(cur);
    return;
  }
  for (int part = std::min(rem, below - 1); part >= 1; --part) {
    // Parts 1..part sum to part(part+1)/2; prune when that cannot reach rem.
    if (static_cast<long long>(part) * (part + 1) / 2 < rem) break;
    cur.push_back(part);
    gen_distinct(rem - part, part, cur, visit);
    cur.pop_back();
  }
}

// Every value top, top - step, ... down to 1 or 2 appears at least once.
void gen_cover(int top, int step, int rem, Partition& cur, const Visit& visit) {
  if (top < 1) {
    if (rem == 0) visit(cur);
    return;
  }
  long long floor_rest = 0;
  for (int v = top - step; v >= 1; v -= step) floor_rest += v;
  for (int m = 1; static_cast<long long>(m) * top + floor_rest <= rem; ++m) {
    cur.insert(cur.end(), m, top);
    gen_cover(top - step, step, rem - m * top, cur, visit);
    cur.resize(cur.size() - m);
  }
}

void gen_no_gaps(int n, const Visit& visit) {
  Partition cur;
  for (int l = 1; static_cast<long long>(l) * (l + 1) / 2 <= n; ++l) gen_cover(l, 1, n, cur, visit);
}

void gen_q_garvan(int n, const Visit& visit) {
  Partition cur;
  // Largest part odd: odd parts covering 1, 3, ..., l.
  for (int l = 1; static_cast<long long>((l + 1) / 2) * ((l + 1) / 2) <= n; l += 2) gen_cover(l, 2, n, cur, visit);
  // Largest part even: copies of l over odd parts covering 1, 3, ..., l - 1.
  for (int l = 2; l <= n; l += 2) {
    long long odd_floor = static_cast<long long>(l / 2) * (l / 2);
    for (int m = 1; static_cast<long long>(m) * l + odd_floor <= n; ++m) {
      cur.assign(m, l);
      gen_cover(l - 1, 2, n - m * l, cur, visit);
    }
  }
}

}  // namespace

std::optional<PartitionClass> parse_class(const std::string& name) {
  for (const auto& e : kClassNames)
    if (name == e.name) return e.cls;
  return std::nullopt;
}

const char* class_name(PartitionClass cls) {
  for (const auto& e : kClassNames)
    if (cls == e.cls) return e.name;
  return "?";
}

bool Overpartition::largest_overlined() const {
  return !parts.empty() && !overlined.empty() && overlined.back() == parts.front();
}

void for_each_partition(PartitionClass cls, int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "partition size must be positive");
  Partition cur;
  switch (cls) {
    case PartitionClass::All: gen_bounded(n, n, 1, cur, visit); return;
    case PartitionClass::Distinct: gen_distinct(n, n + 1, cur, visit); return;
    case PartitionClass::NoGaps: gen_no_gaps(n, visit); return;
    case PartitionClass::OddParts: gen_bounded(n, n, 2, cur, visit); return;
    case PartitionClass::QGarvan: gen_q_garvan(n, visit); return;
    case PartitionClass::Overpartitions:
    case PartitionClass::VectorSSelfConj: break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string(class_name(cls)) + " objects are not plain partitions");
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit) {
  for_each_partition(PartitionClass::All, n, [&](const Partition& p) {
    std::vector<int> values;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      if (values.empty() || values.back() != *it) values.push_back(*it);
    Overpartition op{p, {}};
    const std::size_t k = values.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      op.overlined.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) op.overlined.push_back(values[i]);
      visit(op);
    }
  });
}

void for_each_vector_partition(int n, const std::function<void(const VectorPartition&)>& visit) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "partition size must be positive");
  VectorPartition vp;
  for (int size1 = n; size1 >= 1; --size1) {
    if ((n - size1) % 2 != 0) continue;
    const int size2 = (n - size1) / 2;
    for_each_partition(PartitionClass::Distinct, size1, [&](const Partition& p1) {
      vp.pi1 = p1;
      const int s1 = p1.back();
      if (size2 == 0) {
        vp.pi2.clear();
        visit(vp);
        return;
      }
      for_each_partition(PartitionClass::All, size2, [&](const Partition& p2) {
        if (p2.back() < s1) return;
        vp.pi2 = p2;
        visit(vp);
      });
    });
  }
}

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "partition size must be positive");
}

bool PartitionGenerator::next() {
  if (!started_) {
    started_ = true;
    current_.assign(1, n_);
    return true;
  }
  int ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++ones;
  }
  if (current_.empty()) return false;
  const int x = current_.back() - 1;
  current_.back() = x;
  int rem = ones + 1;
  while (rem > x) {
    current_.push_back(x);
    rem -= x;
  }
  if (rem > 0) current_.push_back(rem);
  return true;
}

std::vector<Partition> enumerate(PartitionClass cls, int n) {
  std::vector<Partition> out;
  for_each_partition(cls, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long long count_class(PartitionClass cls, int n) {
  long long count = 0;
  if (cls == PartitionClass::Overpartitions) {
    for_each_partition(PartitionClass::All, n, [&](const Partition& p) {
      int distinct = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (i == 0 || p[i] != p[i - 1]) ++distinct;
      count += 1LL << distinct;
    });
  } else if (cls == PartitionClass::VectorSSelfConj) {
    for_each_vector_partition(n, [&](const VectorPartition&) { ++count; });
  } else {
    for_each_partition(cls, n, [&](const Partition&) { ++count; });
  }
  return count;
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p.front());
  for (int j = 0; j < p.front(); ++j) {
    int count = 0;
    for (int part : p)
      if (part > j) ++count;
    out[j] = count;
  }
  return out;
}

}  // namespace qident::partitions
