// Acceptance suite: one PASS/FAIL line per criterion.
//
// Each criterion runs through the library's suite; derived values are
// additionally recomputed here by the brute-force oracles and a criterion
// passes only if both agree.

#include <iostream>
#include <map>
#include <set>

#include "digcon/conditions.hpp"
#include "digcon/connectivity.hpp"
#include "digcon/gallery.hpp"
#include "digcon/paper_check.hpp"
#include "digcon/polymorph.hpp"
#include "oracles.hpp"

using namespace digcon;

namespace {

// Independent recomputation of the values the criteria rely on: criterion
// id -> disagreement notes.
std::map<int, std::string> oracle_checks() {
  std::map<int, std::string> notes;
  auto note = [&](int id, bool ok, const std::string& what) {
    if (!ok) notes[id] += (notes[id].empty() ? "" : "; ") + what;
  };

  const Digraph d = digraph_d(), k = digraph_k();
  note(1, oracle::same(oracle::extreme(d), {0, 0, 1}), "oracle extreme(D)");
  note(1, oracle::same(oracle::strong(d), {0, 0, 0}), "oracle strong(D)");
  note(1, oracle::same(oracle::extreme(k), {0, 0, 1, 1}), "oracle extreme(K)");
  for (const Digraph* g : {&d, &k}) {
    const auto minimal = oracle::minimal_antisymmetric(*g);
    note(1, minimal.size() == 1 && oracle::block_count(minimal.front()) == 1, "oracle radical");
  }

  std::size_t radical_bad = 0, nequiv_bad = 0, chain_bad = 0;
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    const Digraph g = reflexive_digraph_from_mask(4, mask);
    const auto minimal = oracle::minimal_antisymmetric(g);
    if (minimal.size() != 1 ||
        radical(g).result != Partition::from_labels(minimal.front()))
      ++radical_bad;
    if (!oracle::same(oracle::h_equivalence(g, digraph_n()), oracle::extreme(g))) ++nequiv_bad;
    const auto e = oracle::extreme(g), s = oracle::strong(g), w = oracle::weak(g);
    const auto r = radical(g).result.block_index();
    if (!oracle::finer_or_equal(e, r) || !oracle::finer_or_equal(r, s) ||
        !oracle::finer_or_equal(s, w) || !oracle::antisymmetric_quotient(g, r))
      ++chain_bad;
  }
  note(2, chain_bad == 0, "oracle chain violations: " + std::to_string(chain_bad));
  note(3, radical_bad == 0, "oracle mismatches: " + std::to_string(radical_bad));
  note(4, nequiv_bad == 0, "oracle mismatches: " + std::to_string(nequiv_bad));

  for (std::size_t arity = 1; arity <= 2; ++arity) {
    const auto all = oracle::polymorphisms(k, arity, true);
    note(5, all.size() == arity, "oracle count at arity " + std::to_string(arity));
    const auto dp = oracle::polymorphisms(d, arity, true);
    const auto found = find_polymorphisms(PolymorphismQuery{d, arity, true});
    std::vector<std::vector<Element>> got;
    for (const auto& t : found.tables) got.push_back(t.values());
    note(6, got == dp, "enumeration differs from exhaustive tables");
  }

  const std::vector<Element> meet{0, 0, 0, 0, 1, 1, 0, 1, 2};
  note(7, oracle::preserves(d, 2, oracle::as_op(TermTable(3, 2, meet))), "oracle preservation");

  const auto union_edges = oracle::semilattice_three_cycle_edges();
  std::set<unsigned> union_vertices;
  for (auto [a, b] : union_edges) union_vertices.insert(a), union_vertices.insert(b);
  note(8, union_vertices.size() == 7, "union model vertex count");
  const FreeDigraph fd = freely_generated_digraph(semilattice2(), three_cycle_seed());
  note(8, fd.digraph.edge_count() == union_edges.size(), "edge count differs from union model");
  // No symmetric path from x = {x} (mask 1) to z = {z} (mask 4).
  {
    std::vector<std::vector<bool>> dbl(8, std::vector<bool>(8, false));
    for (auto [a, b] : union_edges)
      if (union_edges.count({b, a})) dbl[a][b] = true;
    std::set<unsigned> seen{1}, frontier{1};
    while (!frontier.empty()) {
      std::set<unsigned> next;
      for (unsigned a : frontier)
        for (unsigned b = 1; b < 8; ++b)
          if (dbl[a][b] && seen.insert(b).second) next.insert(b);
      frontier = next;
    }
    note(8, !seen.count(4), "union model has a symmetric x-z path");
  }

  const FreeDigraph free_d = freely_generated_digraph(affine_z2(), d);
  note(10, oracle::block_count(oracle::extreme(free_d.digraph)) == 1, "oracle extreme components");

  const auto r = oracle::rho(d);
  note(13, r.size() == 8, "oracle rho(D) edge count");
  const Digraph rd = rho_digraph(d);
  note(13, std::set<Edge>(rd.edges().begin(), rd.edges().end()) == r, "rho(D) differs from oracle");

  for (const auto& inst : affine_instances(50, PaperCheckOptions{}.seed)) {
    const auto& g = inst.digraph;
    const auto e = oracle::extreme(g);
    note(12, oracle::same(e, oracle::weak(g)), "oracle weak != extreme");
    note(15, oracle::same(oracle::h_equivalence(g, k), e), "oracle K-equivalence");
    note(15, oracle::same(oracle::h_equivalence(g, d), e), "oracle D-equivalence");
    const auto rg = oracle::rho(g);
    note(13, oracle::preserves(Digraph("rho", g.size(), std::vector<Edge>(rg.begin(), rg.end())),
                               3, oracle::as_op(inst.algebra.ops()[0].table)),
         "oracle rho compatibility");
  }
  return notes;
}

}  // namespace

// Usage: acceptance [--expect-fail ID]...
// Exits 0 iff the failing criteria are exactly the expected ones.
int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--expect-fail") expected.insert(std::stoi(argv[i + 1]));

  const auto notes = oracle_checks();
  std::set<int> failed;
  for (auto r : run_paper_check()) {
    if (auto it = notes.find(r.id); it != notes.end() && !it->second.empty()) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + it->second;
    }
    if (!r.pass) failed.insert(r.id);
    std::cout << format_result(r) << '\n';
  }
  std::cout << failed.size() << " of 16 criteria failed";
  if (!expected.empty()) {
    std::cout << " (expected:";
    for (int id : expected) std::cout << ' ' << id;
    std::cout << ')';
  }
  std::cout << '\n';
  return failed == expected ? 0 : 1;
}
