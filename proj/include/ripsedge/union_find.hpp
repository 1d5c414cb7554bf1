#pragma once

#include <numeric>
#include <vector>

namespace ripsedge {

// Path compression + union by size.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    int root = a;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[a] != root) {
      int next = parent_[a];
      parent_[a] = root;
      a = next;
    }
    return root;
  }

  // Returns true iff a and b were in different sets.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    --count_;
    return true;
  }

  bool connected(int a, int b) { return find(a) == find(b); }
  int count() const { return count_; }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int count_;
};

}  // namespace ripsedge
