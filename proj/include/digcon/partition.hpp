#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digcon {

using Vertex = std::uint32_t;

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// An equivalence relation on {0..n-1} in canonical form: blocks are
/// numbered in order of their least element.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary block labels (equal label = same block).
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition from_sets(DisjointSets& sets);
  /// Throws if the blocks overlap or do not cover 0..n-1.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<Vertex>>& blocks);
  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);
  /// Parses `{{0,1},{2}}`.  The ground set is 0..max element.
  static Partition parse(std::string_view text);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(Vertex v) const { return block_of_[v]; }
  const std::vector<std::size_t>& block_index() const { return block_of_; }
  bool same_block(Vertex u, Vertex v) const {
    return block_of_[u] == block_of_[v];
  }
  bool is_discrete() const { return block_count_ == size(); }

  std::vector<std::vector<Vertex>> blocks() const;

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

/// Intersection of two equivalences on the same ground set.
Partition meet(const Partition& a, const Partition& b);

}  // namespace digcon
