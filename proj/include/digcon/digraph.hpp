#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digcon/error.hpp"
#include "digcon/partition.hpp"

namespace digcon {

using Edge = std::pair<Vertex, Vertex>;

/// A finite digraph on the vertices 0..n-1.  Edges have set semantics and
/// loops are ordinary edges.  Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  /// Duplicate edges are dropped; an out-of-range endpoint throws.
  Digraph(std::string name, std::size_t n, std::span<const Edge> edges);
  Digraph(std::string name, std::size_t n, std::initializer_list<Edge> edges)
      : Digraph(std::move(name), n, std::span<const Edge>(edges.begin(), edges.size())) {}

  const std::string& name() const { return name_; }
  std::size_t size() const { return out_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// All edges, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted successor / predecessor lists.
  std::span<const Vertex> out(Vertex u) const { return out_[u]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_double_edge(Vertex u, Vertex v) const {
    return has_edge(u, v) && has_edge(v, u);
  }
  bool is_reflexive() const;

  Digraph renamed(std::string name) const;

  /// Same vertex count and edge set; names are ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.size() == b.size() && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// A total map between vertex sets.
struct VertexMap {
  std::size_t target_size = 0;
  std::vector<Vertex> image;

  std::size_t source_size() const { return image.size(); }
  Vertex operator()(Vertex v) const { return image[v]; }
  /// (*this ∘ inner)(v) = (*this)(inner(v)).
  VertexMap after(const VertexMap& inner) const;
  bool is_identity() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Edge-preservation predicate, checked edge by edge.
bool is_homomorphism(const Digraph& from, const Digraph& to, const VertexMap& map);

/// True iff no two distinct vertices are joined in both directions.
bool is_antisymmetric(const Digraph& g);

/// Text format:
///
///     digraph <name>
///     vertices <n>
///     [reflexive]
///     edges
///     <u> <v>
///     end
///
/// `#` starts a comment.  Errors carry the offending line number.
Digraph parse_digraph(std::string_view text);
std::string to_text(const Digraph& g);

/// Blocks of `p` become vertices in canonical order; A→B iff some a→b.
Digraph quotient(const Digraph& g, const Partition& p);

/// Vertices are k-tuples in lexicographic order (first coordinate most
/// significant); edges are componentwise.  `max_vertices` bounds n^k.
Digraph power(const Digraph& g, std::size_t k,
              std::uint64_t max_vertices = kDefaultBudget);

/// Subdigraph induced by `subset`, re-indexed in increasing vertex order.
Digraph induced(const Digraph& g, std::span<const Vertex> subset);

/// Reflexive digraph on n vertices whose non-loop edges are the set bits of
/// `mask`, enumerated over ordered pairs (u,v), u != v, in lexicographic order.
Digraph reflexive_digraph_from_mask(std::size_t n, std::uint64_t mask);

}  // namespace digcon
