#include "digcon/term_table.hpp"

#include <sstream>

#include "digcon/error.hpp"

namespace digcon {

std::size_t table_length(std::size_t size, std::size_t arity, std::size_t limit) {
  std::size_t length = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size != 0 && length > limit / size)
      throw BudgetExceeded("table with " + std::to_string(size) + "^" +
                               std::to_string(arity) + " cells",
                           0);
    length *= size;
  }
  return length;
}

TermTable::TermTable(std::size_t size, std::size_t arity, std::vector<Element> values)
    : size_(size), arity_(arity), values_(std::move(values)) {
  if (size == 0) throw Error("term table over an empty universe");
  std::size_t expected = table_length(size, arity, std::size_t{1} << 40);
  if (values_.size() != expected)
    throw Error("table has " + std::to_string(values_.size()) + " values, expected " +
                std::to_string(size) + "^" + std::to_string(arity) + " = " +
                std::to_string(expected));
  for (Element v : values_)
    if (v >= size)
      throw Error("table value " + std::to_string(v) + " out of range 0.." +
                  std::to_string(size - 1));
}

TermTable TermTable::projection(std::size_t size, std::size_t arity, std::size_t coordinate) {
  if (coordinate >= arity) throw Error("projection coordinate out of range");
  std::size_t length = table_length(size, arity, std::size_t{1} << 40);
  std::size_t stride = 1;
  for (std::size_t i = coordinate + 1; i < arity; ++i) stride *= size;
  std::vector<Element> values(length);
  for (std::size_t cell = 0; cell < length; ++cell)
    values[cell] = static_cast<Element>((cell / stride) % size);
  return TermTable(size, arity, std::move(values));
}

std::size_t TermTable::cell_of(std::span<const Element> args) const {
  if (args.size() != arity_)
    throw Error("term of arity " + std::to_string(arity_) + " applied to " +
                std::to_string(args.size()) + " arguments");
  std::size_t cell = 0;
  for (Element a : args) {
    if (a >= size_) throw Error("argument " + std::to_string(a) + " out of range");
    cell = cell * size_ + a;
  }
  return cell;
}

Element TermTable::apply(std::span<const Element> args) const {
  return values_[cell_of(args)];
}

std::vector<Element> TermTable::arguments(std::size_t cell) const {
  std::vector<Element> args(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    args[i] = static_cast<Element>(cell % size_);
    cell /= size_;
  }
  return args;
}

bool TermTable::is_idempotent() const {
  // The diagonal cell of x is x * (1 + s + ... + s^(k-1)).
  std::size_t step = 0, power = 1;
  for (std::size_t i = 0; i < arity_; ++i) {
    step += power;
    power *= size_;
  }
  for (std::size_t x = 0; x < size_; ++x)
    if (values_[x * step] != x) return false;
  return true;
}

std::string to_text(const TermTable& t) {
  std::ostringstream os;
  os << "term " << t.arity() << ' ' << t.size() << "\ntable";
  for (Element v : t.values()) os << ' ' << v;
  os << '\n';
  return os.str();
}

TermTable parse_term_table(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string keyword;
  std::size_t arity = 0, size = 0;
  if (!(is >> keyword) || keyword != "term" || !(is >> arity >> size))
    throw ParseError(1, "expected 'term <arity> <size>'");
  if (!(is >> keyword) || keyword != "table") throw ParseError(2, "expected 'table'");
  std::vector<Element> values;
  Element v = 0;
  while (is >> v) values.push_back(v);
  if (!is.eof()) throw ParseError(2, "non-numeric table value");
  return TermTable(size, arity, std::move(values));
}

}  // namespace digcon
