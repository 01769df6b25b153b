#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "digcon/algebra.hpp"
#include "digcon/digraph.hpp"
#include "digcon/homomorphism.hpp"
#include "digcon/term_table.hpp"

namespace digcon {

struct PolymorphismQuery {
  Digraph digraph;
  std::size_t arity = 1;
  bool idempotent = false;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t budget = kDefaultBudget;
};

struct PolymorphismResult {
  std::vector<TermTable> tables;
  HomSearchStats stats;
  /// The budget ran out before the search space was exhausted.
  bool truncated = false;
};

/// Streams every k-ary polymorphism (in lexicographic table order) to
/// `visit`; returning false stops early.  Diagonal cells are pinned when
/// the query is idempotent.
HomSearchStats for_each_polymorphism(const PolymorphismQuery& q,
                                     const std::function<bool(const TermTable&)>& visit);

PolymorphismResult find_polymorphisms(const PolymorphismQuery& q);

/// Up to `count` distinct polymorphisms, found by complete searches below
/// randomly fixed table prefixes.  Deterministic for a given seed.
std::vector<TermTable> sample_polymorphisms(const PolymorphismQuery& q, std::size_t count,
                                            std::uint64_t seed, std::size_t max_attempts = 10'000);

/// Direct check: every tuple of edges is carried to an edge.
bool is_polymorphism(const Digraph& g, const TermTable& t);

/// 1-based coordinate i when t is the i-th projection.
std::optional<std::size_t> is_projection(const TermTable& t);

/// Subsets of {1..k} stored as bitmasks, bit i standing for coordinate i+1.
struct MajorFamily {
  std::size_t arity = 0;
  std::vector<std::uint32_t> subsets;  // sorted
  std::optional<std::uint32_t> least;

  bool contains(std::uint32_t s) const;
};

inline constexpr std::size_t kMaxMajorArity = 12;

/// Index sets {i : c_i = 2} of the argument tuples c with t(c) = 2.
MajorFamily major_subsets(const TermTable& t);

/// Nonempty, upward closed and closed under intersection.
bool filter_check(const MajorFamily& m);

/// On arguments from {0,2}, t is 2 exactly when every coordinate in
/// `m.least` is 2.  Throws if `m` has no least member.
bool meet_restriction_check(const TermTable& t, const MajorFamily& m);

/// Idempotent and o(x,x,x,y,y,y) = o(x,y,y,x,x,y) = o(y,x,y,x,y,x).
bool olsak_check(const TermTable& t);

/// First idempotent 6-ary term operation of `a` passing olsak_check.
std::optional<TermTable> olsak_search(const FiniteAlgebra& a,
                                      std::uint64_t max_tables = kDefaultTermBudget);

std::string subset_to_string(std::uint32_t mask, std::size_t arity);
std::string to_string(const MajorFamily& m);

}  // namespace digcon
