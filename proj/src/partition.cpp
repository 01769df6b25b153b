#include "digcon/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "digcon/error.hpp"

namespace digcon {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.try_emplace(labels[v], renumber.size());
    p.block_of_[v] = it->second;
  }
  p.block_count_ = renumber.size();
  return p;
}

Partition Partition::from_sets(DisjointSets& sets) {
  std::vector<std::size_t> labels(sets.size());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = sets.find(v);
  return from_labels(labels);
}

Partition Partition::from_blocks(
    std::size_t n, const std::vector<std::vector<Vertex>>& blocks) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("partition has an empty block");
    for (Vertex v : blocks[b]) {
      if (v >= n)
        throw Error("partition element " + std::to_string(v) +
                    " out of range 0.." + std::to_string(n - 1));
      if (labels[v] != kUnset)
        throw Error("partition element " + std::to_string(v) +
                    " appears in two blocks");
      labels[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (labels[v] == kUnset)
      throw Error("partition does not cover vertex " + std::to_string(v));
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::full(std::size_t n) {
  return from_labels(std::vector<std::size_t>(n, 0));
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<Vertex>> blocks;
  std::size_t depth = 0;
  std::size_t max_element = 0;
  bool any = false;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("bad partition '" + std::string(text) + "': " + msg);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '{') {
      if (++depth > 2) fail("nesting too deep");
      if (depth == 2) blocks.emplace_back();
      ++i;
    } else if (c == '}') {
      if (depth == 0) fail("unbalanced braces");
      --depth;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (depth != 2) fail("element outside a block");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      blocks.back().push_back(static_cast<Vertex>(value));
      max_element = std::max(max_element, value);
      any = true;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (depth != 0) fail("unbalanced braces");
  return from_blocks(any ? max_element + 1 : 0, blocks);
}

std::vector<std::vector<Vertex>> Partition::blocks() const {
  std::vector<std::vector<Vertex>> out(block_count_);
  for (std::size_t v = 0; v < block_of_.size(); ++v)
    out[block_of_[v]].push_back(static_cast<Vertex>(v));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> image(block_count_, kUnset);
  for (std::size_t v = 0; v < size(); ++v) {
    auto& target = image[block_of_[v]];
    if (target == kUnset)
      target = coarser.block_of_[v];
    else if (target != coarser.block_of_[v])
      return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) os << ',';
    first_block = false;
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i)
      os << (i ? "," : "") << block[i];
    os << '}';
  }
  os << '}';
  return os.str();
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("meet of partitions of different sizes");
  std::vector<std::size_t> labels(a.size());
  for (std::size_t v = 0; v < a.size(); ++v)
    labels[v] = a.block_of(static_cast<Vertex>(v)) * b.block_count() +
                b.block_of(static_cast<Vertex>(v));
  return Partition::from_labels(labels);
}

}  // namespace digcon
