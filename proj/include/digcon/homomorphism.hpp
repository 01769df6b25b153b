#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "digcon/digraph.hpp"

namespace digcon {

struct HomSearchOptions {
  /// Empty, or one entry per source vertex; set entries pin the image.
  std::vector<std::optional<Vertex>> fixed;
  bool injective = false;
  /// Maximum number of value assignments tried.
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t max_results = std::numeric_limits<std::uint64_t>::max();
};

struct HomSearchStats {
  std::uint64_t expansions = 0;
  std::uint64_t solutions = 0;
  bool budget_exhausted = false;
  /// The whole search space was explored.
  bool complete = false;
};

/// Receives each image array; returning false stops the search.
using HomVisitor = std::function<bool(std::span<const Vertex>)>;

/// Backtracking search for edge-preserving maps `from` -> `to` that extend
/// `options.fixed`.  Source vertices are assigned in index order and values
/// are tried in increasing order, so solutions arrive in lexicographic order
/// of their image arrays.  Arc consistency is maintained after every
/// assignment.  Never throws on budget exhaustion; see the returned stats.
HomSearchStats search_homomorphisms(const Digraph& from, const Digraph& to,
                                    const HomSearchOptions& options,
                                    const HomVisitor& visit);

/// All homomorphisms in lexicographic order.  Throws BudgetExceeded with the
/// number of maps found so far if the budget runs out.
std::vector<VertexMap> enumerate_homomorphisms(const Digraph& from, const Digraph& to,
                                               const HomSearchOptions& options = {});

struct Retraction {
  VertexMap coretraction;  // h -> g, injective
  VertexMap retraction;    // g -> h
};

/// Lexicographically first (coretraction, retraction) pair with
/// retraction ∘ coretraction = id, or nullopt when `h` is not a retract of `g`.
std::optional<Retraction> is_retract(const Digraph& h, const Digraph& g,
                                     std::uint64_t budget = kDefaultBudget);

/// A bijection carrying the edges of `a` exactly onto those of `b`.
std::optional<VertexMap> find_isomorphism(const Digraph& a, const Digraph& b,
                                          std::uint64_t budget = kDefaultBudget);

inline bool is_isomorphic(const Digraph& a, const Digraph& b,
                          std::uint64_t budget = kDefaultBudget) {
  return find_isomorphism(a, b, budget).has_value();
}

}  // namespace digcon
