#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digcon {

using Element = std::uint32_t;

/// An explicit k-ary operation on {0..size-1}.  Values are stored in
/// lexicographic argument order with the first argument most significant.
class TermTable {
 public:
  TermTable() = default;
  /// Throws if the value count is not size^arity or a value is out of range.
  TermTable(std::size_t size, std::size_t arity, std::vector<Element> values);

  static TermTable projection(std::size_t size, std::size_t arity, std::size_t coordinate);

  std::size_t size() const { return size_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Element>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  /// Throws on arity mismatch or out-of-range arguments.
  Element apply(std::span<const Element> args) const;
  Element operator()(std::initializer_list<Element> args) const {
    return apply(std::span<const Element>(args.begin(), args.size()));
  }
  Element at(std::size_t cell) const { return values_[cell]; }

  /// Argument tuple of a cell index.
  std::vector<Element> arguments(std::size_t cell) const;
  std::size_t cell_of(std::span<const Element> args) const;

  bool is_idempotent() const;

  friend bool operator==(const TermTable&, const TermTable&) = default;
  friend auto operator<=>(const TermTable&, const TermTable&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t arity_ = 0;
  std::vector<Element> values_;
};

/// size^arity, or throws when it does not fit in `limit`.
std::size_t table_length(std::size_t size, std::size_t arity, std::size_t limit);

/// `term <arity> <size>` followed by a `table ...` line.
std::string to_text(const TermTable& t);
TermTable parse_term_table(std::string_view text);

}  // namespace digcon
