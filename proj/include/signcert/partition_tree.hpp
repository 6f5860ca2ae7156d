#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace signcert {

/// Laminar family of partitions of an ordered set C. Level 1 holds the
/// singletons; each further level pairs adjacent nodes of the previous one,
/// an odd trailing node passing through alone. The last level is {C}.
template <typename T>
class PartitionTree {
 public:
  using Node = std::vector<T>;
  using Partition = std::vector<Node>;

  static PartitionTree build(const std::vector<T>& base) {
    if (base.empty()) throw std::invalid_argument("partition tree over an empty set");
    PartitionTree t;
    t.base_ = base;
    Partition current;
    for (const T& e : base) current.push_back({e});
    t.levels_.push_back(current);
    while (current.size() > 1) {
      Partition next;
      for (std::size_t k = 0; k < current.size(); k += 2) {
        Node merged = current[k];
        if (k + 1 < current.size()) merged.insert(merged.end(), current[k + 1].begin(), current[k + 1].end());
        next.push_back(std::move(merged));
      }
      t.levels_.push_back(next);
      current = std::move(next);
    }
    return t;
  }

  const std::vector<T>& base() const { return base_; }
  int height() const { return static_cast<int>(levels_.size()); }

  /// V^i(C) for 1 <= i <= height().
  const Partition& level(int i) const {
    if (i < 1 || i > height()) {
      throw std::out_of_range("level " + std::to_string(i) + " outside [1, " + std::to_string(height()) + "]");
    }
    return levels_[i - 1];
  }

 private:
  std::vector<T> base_;
  std::vector<Partition> levels_;
};

}  // namespace signcert
