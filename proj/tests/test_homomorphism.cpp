#include <doctest.h>

#include <random>

#include "digcon/gallery.hpp"
#include "digcon/homomorphism.hpp"
#include "oracles.hpp"

using namespace digcon;

namespace {

std::vector<std::vector<Vertex>> images(const std::vector<VertexMap>& maps) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& m : maps) out.push_back(m.image);
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Digraph("r", n, edges);
}

}  // namespace

TEST_CASE("homomorphisms from N into D") {
  const auto maps = enumerate_homomorphisms(digraph_n(), digraph_d());
  CHECK(images(maps) ==
        std::vector<std::vector<Vertex>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("small homomorphism facts") {
  CHECK(enumerate_homomorphisms(digraph_k(), gallery("C", 1)).size() == 1);
  CHECK(enumerate_homomorphisms(gallery("C3"), digraph_d()).size() >= 3);
}

TEST_CASE("search agrees with brute force") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<std::size_t> hs(1, 4), gs(1, 4);
    const Digraph h = random_digraph(rng, hs(rng), 0.4);
    const Digraph g = random_digraph(rng, gs(rng), 0.5);
    const auto expected = oracle::homs(h, g);
    CHECK(images(enumerate_homomorphisms(h, g)) == expected);

    HomSearchOptions inj;
    inj.injective = true;
    std::vector<std::vector<Vertex>> injective;
    for (const auto& f : expected)
      if (std::set<Vertex>(f.begin(), f.end()).size() == f.size()) injective.push_back(f);
    CHECK(images(enumerate_homomorphisms(h, g, inj)) == injective);

    HomSearchOptions pinned;
    pinned.fixed.assign(h.size(), std::nullopt);
    pinned.fixed[0] = 0;
    std::vector<std::vector<Vertex>> with_zero;
    for (const auto& f : expected)
      if (f[0] == 0) with_zero.push_back(f);
    CHECK(images(enumerate_homomorphisms(h, g, pinned)) == with_zero);
  }
}

TEST_CASE("budget and early stop") {
  HomSearchOptions tight;
  tight.budget = 5;
  CHECK_THROWS_AS(enumerate_homomorphisms(power(digraph_k(), 2), digraph_k(), tight),
                  BudgetExceeded);

  HomSearchOptions few;
  few.max_results = 2;
  CHECK(enumerate_homomorphisms(digraph_n(), digraph_d(), few).size() == 2);

  std::size_t seen = 0;
  const auto stats = search_homomorphisms(digraph_n(), digraph_d(), {}, [&](auto) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
  CHECK_FALSE(stats.complete);
}

TEST_CASE("retracts") {
  const auto self = is_retract(digraph_d(), digraph_d());
  REQUIRE(self);
  CHECK(self->coretraction.is_identity());
  CHECK(self->retraction.is_identity());

  const auto n = is_retract(digraph_n(), digraph_d());
  REQUIRE(n);
  CHECK(n->coretraction.image == std::vector<Vertex>{0, 1});
  CHECK(n->retraction.image == std::vector<Vertex>{0, 1, 0});
  CHECK(n->retraction.after(n->coretraction).is_identity());

  CHECK(is_retract(digraph_d(), gallery("fig3")));
  CHECK_FALSE(is_retract(digraph_n(), gallery("C3")));
}

TEST_CASE("retracts agree with brute force") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 150; ++i) {
    std::uniform_int_distribution<std::size_t> hs(1, 3), gs(1, 4);
    const Digraph h = random_digraph(rng, hs(rng), 0.5);
    const Digraph g = random_digraph(rng, gs(rng), 0.5);
    bool expected = false;
    for (const auto& beta : oracle::homs(h, g)) {
      for (const auto& alpha : oracle::homs(g, h)) {
        bool id = true;
        for (Vertex v = 0; v < h.size(); ++v) id = id && alpha[beta[v]] == v;
        if (id) expected = true;
      }
    }
    const auto r = is_retract(h, g);
    CHECK(r.has_value() == expected);
    if (r) {
      CHECK(is_homomorphism(h, g, r->coretraction));
      CHECK(is_homomorphism(g, h, r->retraction));
      CHECK(r->retraction.after(r->coretraction).is_identity());
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(gallery("C3"), Digraph("c", 3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {2, 1}, {1, 0}})));
  CHECK_FALSE(is_isomorphic(gallery("C3"), digraph_d()));
  CHECK_FALSE(is_isomorphic(digraph_d(), digraph_k()));
}
