#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "digcon/error.hpp"
#include "digcon/term_table.hpp"

namespace digcon {

/// How a closure item was first obtained: either seed number `parents[0]`
/// (no op) or operation `op` applied to the items `parents`.
struct Derivation {
  std::optional<std::size_t> op;
  std::vector<std::size_t> parents;
};

template <class Item>
struct Closure {
  std::vector<Item> items;
  std::vector<Derivation> derivations;
  /// Item index of each seed entry (duplicate seeds share an item).
  std::vector<std::size_t> seed_items;
};

struct ElementVectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Element e : v) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Breadth-first closure of `seed` under operations of the given arities.
/// `apply(op, argument_item_indices, items)` evaluates one operation.  Round
/// r applies every operation to the argument tuples that use at least one
/// item found in round r-1; the items new in a round are appended in
/// increasing `Item` order.  Throws BudgetExceeded once more than
/// `max_items` items exist.
template <class Item, class Apply, class Hash = std::hash<Item>>
Closure<Item> close_under(std::span<const Item> seed, std::span<const std::size_t> arities,
                          Apply&& apply, std::uint64_t max_items, const std::string& what,
                          Hash hash = Hash{}) {
  Closure<Item> out;
  std::unordered_map<Item, std::size_t, Hash> index(16, hash);
  auto over_budget = [&](std::size_t count) {
    if (count > max_items) throw BudgetExceeded(what, out.items.size());
  };

  for (std::size_t j = 0; j < seed.size(); ++j) {
    auto [it, inserted] = index.try_emplace(seed[j], out.items.size());
    if (inserted) {
      out.items.push_back(seed[j]);
      out.derivations.push_back(Derivation{std::nullopt, {j}});
      over_budget(out.items.size());
    }
    out.seed_items.push_back(it->second);
  }

  std::size_t layer_begin = 0;
  std::size_t layer_end = out.items.size();
  std::vector<std::size_t> args;
  while (layer_begin < layer_end) {
    std::map<Item, Derivation> fresh;
    for (std::size_t op = 0; op < arities.size(); ++op) {
      const std::size_t r = arities[op];
      args.assign(r, 0);
      // The first argument drawn from the newest layer sits at position p.
      for (std::size_t p = 0; p < r; ++p) {
        if (p > 0 && layer_begin == 0) break;
        auto lower = [&](std::size_t i) { return i == p ? layer_begin : std::size_t{0}; };
        auto upper = [&](std::size_t i) { return i < p ? layer_begin : layer_end; };
        for (std::size_t i = 0; i < r; ++i) args[i] = lower(i);
        while (true) {
          Item result = apply(op, std::span<const std::size_t>(args), out.items);
          if (!index.contains(result) && !fresh.contains(result)) {
            fresh.emplace(std::move(result), Derivation{op, args});
            over_budget(out.items.size() + fresh.size());
          }
          std::size_t i = r;
          while (i > 0) {
            --i;
            if (++args[i] < upper(i)) break;
            args[i] = lower(i);
            if (i == 0) {
              i = r + 1;  // odometer wrapped
              break;
            }
          }
          if (i == r + 1 || r == 0) break;
        }
      }
    }
    layer_begin = layer_end;
    for (auto& [item, derivation] : fresh) {
      index.emplace(item, out.items.size());
      out.items.push_back(item);
      out.derivations.push_back(std::move(derivation));
    }
    layer_end = out.items.size();
  }
  return out;
}

}  // namespace digcon
