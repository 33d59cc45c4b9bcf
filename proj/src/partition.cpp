#include "hyperfib/partition.hpp"

#include <unordered_map>

namespace hyperfib {

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.element_count = static_cast<int>(labels.size());
  p.class_of.resize(labels.size());
  std::unordered_map<int, int> renumber;
  renumber.reserve(labels.size());
  for (int i = 0; i < p.element_count; ++i) {
    auto [it, inserted] =
        renumber.try_emplace(labels[i], static_cast<int>(p.classes.size()));
    if (inserted) p.classes.emplace_back();
    p.class_of[i] = it->second;
    p.classes[it->second].push_back(i);
  }
  return p;
}

Partition Partition::singletons(int element_count) {
  Partition p;
  p.element_count = element_count;
  p.class_of.resize(element_count);
  p.classes.resize(element_count);
  for (int i = 0; i < element_count; ++i) {
    p.class_of[i] = i;
    p.classes[i] = {i};
  }
  return p;
}

Partition Partition::single_class(int element_count) {
  return from_labels(std::vector<int>(element_count, 0));
}

Partition Partition::prefix(int count) const {
  return from_labels({class_of.begin(), class_of.begin() + count});
}

Partition Partition::suffix(int offset) const {
  return from_labels({class_of.begin() + offset, class_of.end()});
}

PartitionStats fibre_stats(const Partition& p) {
  PartitionStats s;
  s.class_count = p.class_count();
  s.avg_class_size =
      s.class_count == 0 ? 0.0
                         : static_cast<double>(p.element_count) / s.class_count;
  for (const auto& c : p.classes)
    if (c.size() >= 2) ++s.nontrivial_count;
  return s;
}

}  // namespace hyperfib
