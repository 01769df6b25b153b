#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digcon/algebra.hpp"
#include "digcon/digraph.hpp"
#include "digcon/term_table.hpp"

namespace digcon {

/// Generator that a chain of double edges starting at x must reach.
enum class Endpoint { kY = 1, kZ = 2 };

std::string to_string(Endpoint e);
Endpoint parse_endpoint(std::string_view name);

/// Terms t_1..t_n, s_1..s_n for the chain of identities
///
///     t_1(x,x,y,y,z,z) = x
///     t_i(x,x,y,y,z,z) = s_i(x,y,y,z,z,x)
///     s_i(x,x,y,y,z,z) = t_i(x,y,y,z,z,x)
///     t_i(x,x,y,y,z,z) = t_{i-1}(x,y,y,z,z,x)   (1 < i)
///     e                = t_n(x,y,y,z,z,x)       (e the endpoint)
///
/// `path` is the symmetric path (n+1 vertices) in the digraph freely
/// generated by the 3-cycle that the terms were read off from; it may be
/// empty for hand-written witnesses.
struct IdentityWitness {
  std::size_t n = 0;
  std::vector<TermTable> t_terms;
  std::vector<TermTable> s_terms;
  std::vector<Vertex> path;
  Endpoint endpoint = Endpoint::kY;
};

/// Evaluates every identity over all (x,y,z) in a^3.
bool check_identity_system(const FiniteAlgebra& a, const IdentityWitness& w);

inline constexpr std::size_t kDefaultMaxChain = 16;

/// Looks for a symmetric path from x to the endpoint in the digraph freely
/// generated by x→y→z→x (with loops) and reads the terms off the edge
/// derivations.  The returned witness has been validated.  Throws
/// Contradiction if reconstruction produces terms that fail the identities.
std::optional<IdentityWitness> search_identity_witness(
    const FiniteAlgebra& a, Endpoint endpoint, std::size_t max_n = kDefaultMaxChain,
    std::uint64_t max_elements = kDefaultFreeAlgebraBudget);

/// (x,y) is an edge iff x→u, u→y and y→u for some u.
Digraph rho_digraph(const Digraph& g);

struct CollapseReport {
  bool weak_strong = false;
  bool weak_radical = false;
  bool weak_extreme = false;
  bool strong_radical = false;
  bool strong_extreme = false;
  bool radical_extreme = false;
};

CollapseReport collapse_report(const Digraph& g);

/// `witness n=<n> endpoint=<y|z>`, the 2n term blocks t_1..t_n, s_1..s_n,
/// then `path v0 ... vn`.
std::string to_text(const IdentityWitness& w);
IdentityWitness parse_witness(std::string_view text);

}  // namespace digcon
