#include <doctest.h>

#include <random>

#include "digcon/gallery.hpp"
#include "digcon/polymorph.hpp"
#include "oracles.hpp"

using namespace digcon;

namespace {

std::vector<std::vector<Element>> values(const std::vector<TermTable>& ts) {
  std::vector<std::vector<Element>> out;
  for (const auto& t : ts) out.push_back(t.values());
  return out;
}

// Major subsets straight from the definition.
std::set<std::uint32_t> majors(const TermTable& t) {
  std::set<std::uint32_t> out;
  for (std::size_t c = 0; c < t.cell_count(); ++c) {
    const auto args = t.arguments(c);
    if (t.at(c) != 2) continue;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == 2) s |= 1u << i;
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("polymorphisms agree with exhaustive tables") {
  for (const Digraph& g : {digraph_d(), digraph_n(), gallery("C3"), gallery("C", 1)}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (bool idem : {true, false}) {
        if (!idem && g.size() == 3 && k == 2) continue;  // 3^9 tables, covered below
        const auto found = find_polymorphisms(PolymorphismQuery{g, k, idem});
        CHECK_FALSE(found.truncated);
        CHECK(values(found.tables) == oracle::polymorphisms(g, k, idem));
      }
    }
  }
  const auto all = find_polymorphisms(PolymorphismQuery{digraph_d(), 2, false});
  CHECK(values(all.tables) == oracle::polymorphisms(digraph_d(), 2, false));
}

TEST_CASE("polymorphisms of K") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto result = find_polymorphisms(PolymorphismQuery{digraph_k(), k, true});
    REQUIRE_FALSE(result.truncated);
    REQUIRE(result.tables.size() == k);
    std::set<std::size_t> coords;
    for (const auto& t : result.tables) {
      CHECK(is_polymorphism(digraph_k(), t));
      auto c = is_projection(t);
      REQUIRE(c);
      coords.insert(*c);
    }
    CHECK(coords.size() == k);
  }
}

TEST_CASE("polymorphisms of D include the chain meet") {
  const auto result = find_polymorphisms(PolymorphismQuery{digraph_d(), 2, true});
  const TermTable meet(3, 2, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  CHECK(std::find(result.tables.begin(), result.tables.end(), meet) != result.tables.end());
  for (const auto& t : result.tables) CHECK(is_polymorphism(digraph_d(), t));
}

TEST_CASE("single loop has only the constant") {
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK(find_polymorphisms(PolymorphismQuery{gallery("C", 1), k, false}).tables.size() == 1);
}

TEST_CASE("search limits") {
  PolymorphismQuery q{digraph_d(), 3, true};
  q.limit = 5;
  CHECK(find_polymorphisms(q).tables.size() == 5);
  q.limit = std::numeric_limits<std::uint64_t>::max();
  q.budget = 10;
  const auto cut = find_polymorphisms(q);
  CHECK(cut.truncated);
}

TEST_CASE("sampled arity-3 polymorphisms of D") {
  const auto sample = sample_polymorphisms(PolymorphismQuery{digraph_d(), 3, true}, 120, 99);
  CHECK(sample.size() >= 100);
  for (const auto& t : sample) {
    CHECK(t.is_idempotent());
    CHECK(oracle::preserves(digraph_d(), 3, oracle::as_op(t)));
    const MajorFamily m = major_subsets(t);
    CHECK(filter_check(m));
    CHECK(meet_restriction_check(t, m));
  }
  CHECK(values(sample) == values(sample_polymorphisms(PolymorphismQuery{digraph_d(), 3, true}, 120, 99)));
}

TEST_CASE("projection detection") {
  CHECK(is_projection(TermTable(2, 2, {0, 1, 0, 1})) == 2u);
  CHECK_FALSE(is_projection(TermTable(2, 2, {0, 0, 0, 1})));
  CHECK(is_projection(TermTable(3, 1, {0, 1, 2})) == 1u);
}

TEST_CASE("major subsets") {
  const TermTable meet(3, 2, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  const MajorFamily m = major_subsets(meet);
  CHECK(m.subsets == std::vector<std::uint32_t>{0b11});
  CHECK(m.least == 0b11u);
  CHECK(meet_restriction_check(meet, m));

  const TermTable p1 = TermTable::projection(3, 3, 0);
  const MajorFamily m1 = major_subsets(p1);
  CHECK(m1.subsets == std::vector<std::uint32_t>{0b001, 0b011, 0b101, 0b111});
  CHECK(m1.least == 0b001u);
  CHECK(to_string(m1) == "{{1},{1,2},{1,3},{1,2,3}}");

  // Every idempotent binary polymorphism of D: family from the definition,
  // full set present, filter with least element, meet formula.
  for (const auto& t : find_polymorphisms(PolymorphismQuery{digraph_d(), 2, true}).tables) {
    const MajorFamily f = major_subsets(t);
    const auto expected = majors(t);
    CHECK(std::vector<std::uint32_t>(expected.begin(), expected.end()) == f.subsets);
    CHECK(f.contains(0b11));
    CHECK(filter_check(f));
    CHECK(meet_restriction_check(t, f));
  }
  CHECK_THROWS_AS(major_subsets(TermTable(3, 1, {1, 1, 1})), Error);
  CHECK_THROWS_AS(major_subsets(TermTable(2, 1, {0, 1})), Error);
}

TEST_CASE("filter check") {
  CHECK(filter_check(MajorFamily{2, {0b11}, {}}));
  CHECK_FALSE(filter_check(MajorFamily{2, {0b01, 0b10, 0b11}, {}}));
  CHECK(filter_check(MajorFamily{3, {0b010, 0b011, 0b110, 0b111}, {}}));
  CHECK_FALSE(filter_check(MajorFamily{3, {}, {}}));
  CHECK_FALSE(filter_check(MajorFamily{2, {0b01}, {}}));
  CHECK_THROWS_AS(meet_restriction_check(TermTable::projection(3, 2, 0), MajorFamily{2, {0b01}, {}}),
                  Error);
}

TEST_CASE("Olsak identities") {
  const TermTable sum = oracle::tabulate(2, 6, [](const std::vector<Element>& a) {
    return static_cast<Element>(a[0] ^ a[1] ^ a[2]);
  });
  CHECK(olsak_check(sum));
  for (std::size_t i = 0; i < 6; ++i) CHECK_FALSE(olsak_check(TermTable::projection(2, 6, i)));
  CHECK(olsak_check(TermTable(1, 6, std::vector<Element>(1, 0))));
  CHECK_THROWS_AS(olsak_check(TermTable::projection(2, 5, 0)), Error);

  const auto z = olsak_search(affine_z2());
  REQUIRE(z);
  CHECK(olsak_check(*z));
  REQUIRE(olsak_search(trivial_algebra()));

  // Over the semilattice the 6-ary terms are meets over nonempty subsets S.
  // The three patterns agree exactly when S meets both halves of each
  // pattern's x/y split; e.g. S = {1,6}.
  const auto terms = term_tables(semilattice2(), 6, true);
  CHECK(terms.size() == 63);
  std::size_t passing = 0;
  for (const auto& t : terms) passing += olsak_check(t);
  std::size_t expected = 0;
  const unsigned splits[3] = {0b000111, 0b011001, 0b101010};  // x-positions, bit i = x_{i+1}
  for (unsigned s = 1; s < 64; ++s) {
    bool ok = true;
    for (unsigned x : splits) ok = ok && (s & x) && (s & ~x & 63u);
    expected += ok;
  }
  CHECK(passing == expected);
  CHECK(expected > 0);
  const auto sl = olsak_search(semilattice2());
  REQUIRE(sl);
  CHECK(olsak_check(*sl));
}
