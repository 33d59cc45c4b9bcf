#ifndef HYPERFIB_PARTITION_HPP
#define HYPERFIB_PARTITION_HPP

#include <vector>

namespace hyperfib {

// Partition of 0..element_count-1 into contiguous classes. Canonical form:
// class ids are assigned in order of first element occurrence.
struct Partition {
  int element_count = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  Partition() = default;
  // Builds the canonical partition from an arbitrary labeling.
  static Partition from_labels(const std::vector<int>& labels);
  static Partition singletons(int element_count);
  static Partition single_class(int element_count);

  int class_count() const { return static_cast<int>(classes.size()); }
  bool same_class(int a, int b) const { return class_of[a] == class_of[b]; }

  // Restriction to the first `count` elements, renumbered canonically.
  Partition prefix(int count) const;
  // Restriction to elements [offset, element_count), reindexed from zero.
  Partition suffix(int offset) const;

  bool operator==(const Partition&) const = default;
};

struct PartitionStats {
  int class_count = 0;
  double avg_class_size = 0.0;
  int nontrivial_count = 0;
};

PartitionStats fibre_stats(const Partition& p);

}  // namespace hyperfib

#endif
