#pragma once

#include <string_view>

#include "digcon/digraph.hpp"

namespace digcon {

/// Reflexive 3-vertex digraph with 0<->1, 1->2, 2->0.
Digraph digraph_d();
/// Reflexive 4-vertex digraph with 0<->1, 1->2, 2<->3, 3->0.
Digraph digraph_k();
/// The complete reflexive digraph on two vertices.
Digraph digraph_n();
/// Reflexive directed n-cycle 0->1->...->n-1->0, n >= 1.
Digraph reflexive_cycle(std::size_t n);
/// The 7-vertex digraph freely generated by the 3-cycle x->y->z->x in the
/// variety of semilattices.  Vertex i is the meet of the generators in the
/// i-th nonempty subset of {x,y,z}, ordered x, y, z, xy, xz, yz, xyz.
Digraph digraph_fig3();

/// Looks up "D", "K", "N", "fig3", or "C" with `size`.  A size suffix is also
/// accepted in the name ("C3").
Digraph gallery(std::string_view name, std::size_t size = 0);

}  // namespace digcon
