#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digcon/digraph.hpp"
#include "digcon/partition.hpp"

namespace digcon {

enum class Connectivity { kWeak, kStrong, kExtreme, kRadical };

std::string to_string(Connectivity kind);
/// Accepts "weak", "strong", "extreme", "radical".
Connectivity parse_connectivity(std::string_view name);

/// Weak: components of the symmetrized edge relation.
/// Strong: mutual directed reachability.
/// Extreme: components of the double-edge relation u<->v.
/// Radical: see radical().
Partition equivalence(const Digraph& g, Connectivity kind);

/// The radical fixpoint: stage 0 is the extreme equivalence, each further
/// stage pulls back the extreme equivalence of the quotient by the previous
/// one.  `stages` grows strictly until the fixpoint, which is listed twice;
/// when stage 0 is already stable it is the only stage.
struct RadicalTrace {
  std::vector<Partition> stages;
  Partition result;
};

RadicalTrace radical(const Digraph& g);

/// Brute force over all set partitions: the finest equivalence whose
/// quotient is antisymmetric.  Requires a reflexive digraph with at most
/// `max_vertices` vertices.  Throws Contradiction if the antisymmetric
/// quotients have no least element.
Partition smallest_antisymmetric_oracle(const Digraph& g, std::size_t max_vertices = 8);

/// Transitive closure of "u and v lie in the range of one homomorphism
/// h -> g".
Partition h_equivalence(const Digraph& g, const Digraph& h,
                        std::uint64_t budget = kDefaultBudget);

enum class PathMode { kOriented, kDirected, kSymmetric };

std::string to_string(PathMode mode);
PathMode parse_path_mode(std::string_view name);

/// Shortest path from a to b of the given kind; among shortest paths the
/// lexicographically least vertex sequence.  [a] when a == b.
std::optional<std::vector<Vertex>> find_path(const Digraph& g, Vertex a, Vertex b,
                                             PathMode mode);

/// Least n such that every edge a->b has a directed path back from b to a of
/// length at most n-1; nullopt if some edge has no return path.
std::optional<std::size_t> hm_bound(const Digraph& g);

struct ChainReport {
  Partition extreme;
  Partition radical;
  Partition strong;
  Partition weak;
  bool extreme_in_radical = false;
  bool radical_in_strong = false;
  bool strong_in_weak = false;
  /// The quotient by the radical equivalence is antisymmetric.
  bool radical_quotient_antisymmetric = false;

  bool holds() const {
    return extreme_in_radical && radical_in_strong && strong_in_weak &&
           radical_quotient_antisymmetric;
  }
};

ChainReport verify_chain(const Digraph& g);

}  // namespace digcon
