#include "digcon/gallery.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace digcon {

namespace {

Digraph reflexive(std::string name, std::size_t n, std::vector<Edge> edges) {
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v);
  return Digraph(std::move(name), n, edges);
}

}  // namespace

Digraph digraph_d() {
  return reflexive("D", 3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
}

Digraph digraph_k() {
  return reflexive("K", 4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {3, 0}});
}

Digraph digraph_n() { return reflexive("N", 2, {{0, 1}, {1, 0}}); }

Digraph reflexive_cycle(std::size_t n) {
  if (n == 0) throw Error("cycle length must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return reflexive("C" + std::to_string(n), n, std::move(edges));
}

Digraph digraph_fig3() {
  enum : Vertex { x, y, z, xy, xz, yz, xyz };
  return reflexive("fig3", 7,
                   {{x, y}, {x, xy},
                    {y, z}, {y, yz},
                    {z, x}, {z, xz},
                    {xy, y}, {xy, xz}, {xy, yz}, {xy, xyz},
                    {xz, x}, {xz, xy}, {xz, yz}, {xz, xyz},
                    {yz, z}, {yz, xy}, {yz, xz}, {yz, xyz},
                    {xyz, xy}, {xyz, xz}, {xyz, yz}});
}

Digraph gallery(std::string_view name, std::size_t size) {
  if (name == "D") return digraph_d();
  if (name == "K") return digraph_k();
  if (name == "N") return digraph_n();
  if (name == "fig3") return digraph_fig3();
  if (!name.empty() && name[0] == 'C') {
    if (name.size() > 1) {
      std::size_t n = 0;
      auto digits = name.substr(1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{} || end != digits.data() + digits.size())
        throw Error("unknown gallery digraph '" + std::string(name) + "'");
      return reflexive_cycle(n);
    }
    return reflexive_cycle(size);
  }
  throw Error("unknown gallery digraph '" + std::string(name) + "'");
}

}  // namespace digcon
