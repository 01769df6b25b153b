#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digcon/closure.hpp"
#include "digcon/digraph.hpp"
#include "digcon/partition.hpp"
#include "digcon/term_table.hpp"

namespace digcon {

struct Operation {
  std::string name;
  TermTable table;

  std::size_t arity() const { return table.arity(); }
};

/// A finite algebra on {0..size-1} given by full operation tables.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Requires at least one operation, all of positive arity over `size`.
  FiniteAlgebra(std::string name, std::size_t size, std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  const std::vector<Operation>& ops() const { return ops_; }
  std::vector<std::size_t> arities() const;
  bool is_idempotent() const;

 private:
  std::string name_;
  std::size_t size_ = 0;
  std::vector<Operation> ops_;
};

///     algebra <name>
///     size <s>
///     op <name> <arity>
///     table <s^arity values>
///     ...
///     end
FiniteAlgebra parse_algebra(std::string_view text);
std::string to_text(const FiniteAlgebra& a);

/// Bundled algebras: the 2-element meet semilattice, the idempotent reduct
/// of Z_2 (the ternary x+y+z), the meet of the chain 0<1<2, and a
/// one-element algebra with one binary operation.
FiniteAlgebra semilattice2();
FiniteAlgebra affine_z2();
FiniteAlgebra chain3_meet();
FiniteAlgebra trivial_algebra();
/// Looks up "sl2", "z2aff", "chain3meet", "trivial".
FiniteAlgebra bundled_algebra(std::string_view name);

/// The direct power a^m, elements ordered as m-tuples lexicographically.
FiniteAlgebra power_algebra(const FiniteAlgebra& a, std::size_t m);

/// Least subuniverse containing `seed`, as a sorted element list.
std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, std::span<const Element> seed);

/// Edge relation is a subuniverse of a^2.
bool is_compatible(const Digraph& g, const FiniteAlgebra& a);

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Subuniverse of a^2 generated by a set of pairs, with derivations.
Closure<Edge> generate_edges(const FiniteAlgebra& a, std::span<const Edge> seed,
                             std::uint64_t max_edges = kDefaultBudget);

/// The digraph on a's universe whose edges are generated by the edges of
/// `seed`, with seed vertex i placed at element `placement[i]`.  Throws if
/// `placement` does not generate a.
Digraph generated_digraph(const FiniteAlgebra& a, const Digraph& seed,
                          std::span<const Element> placement);

struct FreeAlgebraResult {
  FiniteAlgebra algebra;
  std::vector<Element> generators;
  /// Element i as a k-ary term operation of the base algebra.
  std::vector<TermTable> element_tables;
};

/// The free algebra on k generators in the variety generated by `a`,
/// realized as the subalgebra of a^(a^k) generated by the k projections.
FreeAlgebraResult free_algebra(const FiniteAlgebra& a, std::size_t k,
                               std::uint64_t max_elements = kDefaultFreeAlgebraBudget);

struct FreeDigraph {
  FreeAlgebraResult free;
  Digraph digraph;
  /// generators[i] is the element standing for seed vertex i.
  std::vector<Element> generators;
  /// Edge closure with derivations, in discovery order.
  Closure<Edge> edges;
};

/// The compatible digraph freely generated by `seed` in the variety of `a`.
FreeDigraph freely_generated_digraph(const FiniteAlgebra& a, const Digraph& seed,
                                     std::uint64_t max_elements = kDefaultFreeAlgebraBudget);

/// Term operations of arity k (closure of the projections), optionally only
/// the idempotent ones, in discovery order.
std::vector<TermTable> term_tables(const FiniteAlgebra& a, std::size_t k,
                                   bool idempotent_only = false,
                                   std::uint64_t max_tables = kDefaultTermBudget);

/// Labels each weak component of a free digraph by the unary operation
/// obtained from its members' tables on the diagonal.  Throws Contradiction
/// if two members of one component carry different labels.
std::map<std::size_t, TermTable> weak_component_labels(const FreeAlgebraResult& fr,
                                                       const Digraph& fg);

}  // namespace digcon
