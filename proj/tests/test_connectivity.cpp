#include <doctest.h>

#include <random>

#include "digcon/connectivity.hpp"
#include "digcon/gallery.hpp"
#include "oracles.hpp"

using namespace digcon;

namespace {

Partition labels_to_partition(const std::vector<std::size_t>& labels) {
  return Partition::from_labels(labels);
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p, bool reflexive) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if ((reflexive && u == v) || coin(rng)) edges.emplace_back(u, v);
  return Digraph("r", n, edges);
}

}  // namespace

TEST_CASE("gallery equivalences") {
  const Digraph d = digraph_d(), k = digraph_k();
  CHECK(equivalence(d, Connectivity::kExtreme).to_string() == "{{0,1},{2}}");
  CHECK(equivalence(d, Connectivity::kStrong).to_string() == "{{0,1,2}}");
  CHECK(equivalence(k, Connectivity::kExtreme).to_string() == "{{0,1},{2,3}}");
  CHECK(radical(d).result.to_string() == "{{0,1,2}}");
  CHECK(radical(k).result.to_string() == "{{0,1,2,3}}");
  CHECK(radical(gallery("C3")).result.is_discrete());

  const auto trace = radical(d);
  REQUIRE(trace.stages.size() == 3);
  CHECK(trace.stages[0] == equivalence(d, Connectivity::kExtreme));
  CHECK(trace.stages[1] == trace.stages[2]);
  CHECK(radical(gallery("C3")).stages.size() == 1);
}

TEST_CASE("equivalences agree with matrix closures") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 9);
    const Digraph g = random_digraph(rng, size(rng), 0.25, i % 2 == 0);
    CHECK(equivalence(g, Connectivity::kWeak) == labels_to_partition(oracle::weak(g)));
    CHECK(equivalence(g, Connectivity::kStrong) == labels_to_partition(oracle::strong(g)));
    CHECK(equivalence(g, Connectivity::kExtreme) == labels_to_partition(oracle::extreme(g)));
  }
}

TEST_CASE("radical is the least equivalence with antisymmetric quotient") {
  // Exhaustive on 3 and 4 vertices against an independent enumeration of
  // set partitions.
  for (std::size_t n : {3u, 4u}) {
    const std::uint64_t pairs = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Digraph g = reflexive_digraph_from_mask(n, mask);
      const auto minimal = oracle::minimal_antisymmetric(g);
      REQUIRE(minimal.size() == 1);
      const Partition expected = labels_to_partition(minimal.front());
      CHECK(radical(g).result == expected);
      CHECK(smallest_antisymmetric_oracle(g) == expected);
    }
  }
}

TEST_CASE("oracle preconditions") {
  CHECK(smallest_antisymmetric_oracle(digraph_d()).to_string() == "{{0,1,2}}");
  CHECK(smallest_antisymmetric_oracle(gallery("C3")).is_discrete());
  CHECK(smallest_antisymmetric_oracle(gallery("C", 1)).block_count() == 1);
  CHECK_THROWS_AS(smallest_antisymmetric_oracle(Digraph("c", 3, {{0, 1}})), Error);
  CHECK_THROWS_AS(smallest_antisymmetric_oracle(gallery("C", 9)), Error);
}

TEST_CASE("chain of equivalences") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const Digraph g = random_digraph(rng, size(rng), 0.2, i % 3 != 0);
    const ChainReport r = verify_chain(g);
    CHECK(r.holds());
    CHECK(is_antisymmetric(quotient(g, equivalence(g, Connectivity::kStrong))));
  }
  const ChainReport d = verify_chain(digraph_d());
  CHECK(d.holds());
  CHECK(d.extreme != d.radical);
  CHECK(d.radical == d.strong);
  CHECK(d.strong == d.weak);
}

TEST_CASE("H-equivalence") {
  CHECK(h_equivalence(digraph_d(), digraph_d()).block_count() == 1);
  CHECK(h_equivalence(gallery("C3"), digraph_n()).is_discrete());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const Digraph g = random_digraph(rng, size(rng), 0.35, true);
    for (const Digraph& h : {digraph_n(), digraph_d(), digraph_k(), gallery("C3")})
      CHECK(h_equivalence(g, h) == labels_to_partition(oracle::h_equivalence(g, h)));
    CHECK(h_equivalence(g, digraph_n()) == equivalence(g, Connectivity::kExtreme));
  }
}

TEST_CASE("paths") {
  const Digraph d = digraph_d();
  CHECK(find_path(d, 0, 2, PathMode::kDirected) == std::vector<Vertex>{0, 1, 2});
  CHECK(find_path(d, 2, 2, PathMode::kSymmetric) == std::vector<Vertex>{2});
  CHECK_FALSE(find_path(d, 0, 2, PathMode::kSymmetric));
  CHECK(find_path(d, 2, 1, PathMode::kOriented) == std::vector<Vertex>{2, 1});
  CHECK_FALSE(find_path(gallery("fig3"), 0, 2, PathMode::kSymmetric));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    const Digraph g = random_digraph(rng, size(rng), 0.3, false);
    const auto ext = oracle::extreme(g);
    const auto str = oracle::strong(g);
    for (Vertex a = 0; a < g.size(); ++a)
      for (Vertex b = 0; b < g.size(); ++b) {
        const auto sym = find_path(g, a, b, PathMode::kSymmetric);
        CHECK(sym.has_value() == (ext[a] == ext[b]));
        if (sym) {
          CHECK(sym->front() == a);
          CHECK(sym->back() == b);
          for (std::size_t j = 1; j < sym->size(); ++j)
            CHECK(g.has_double_edge((*sym)[j - 1], (*sym)[j]));
        }
        const auto there = find_path(g, a, b, PathMode::kDirected);
        const auto back = find_path(g, b, a, PathMode::kDirected);
        CHECK((there && back) == (str[a] == str[b]));
      }
  }
}

TEST_CASE("return-path bound") {
  CHECK(hm_bound(digraph_d()) == 3u);
  CHECK(hm_bound(digraph_n()) == 2u);
  CHECK(hm_bound(gallery("C", 1)) == 1u);
  // A 3-cycle plus a looped vertex with an edge into the cycle.
  const Digraph g("c3+", 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 0}, {3, 0}});
  CHECK_FALSE(hm_bound(g));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    const Digraph h = random_digraph(rng, size(rng), 0.4, true);
    const auto bound = hm_bound(h);
    std::size_t worst = 1;
    bool every = true;
    for (auto [a, b] : h.edges()) {
      const auto p = find_path(h, b, a, PathMode::kDirected);
      if (!p) every = false;
      else worst = std::max(worst, p->size());
    }
    CHECK(bound.has_value() == every);
    if (bound) CHECK(*bound == worst);
  }
}
