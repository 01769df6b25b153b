#include "digcon/paper_check.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "digcon/conditions.hpp"
#include "digcon/connectivity.hpp"
#include "digcon/gallery.hpp"
#include "digcon/homomorphism.hpp"
#include "digcon/polymorph.hpp"

namespace digcon {

Digraph three_cycle_seed() { return reflexive_cycle(3); }

std::vector<AffineInstance> affine_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FiniteAlgebra base = affine_z2();
  std::vector<FiniteAlgebra> powers;
  for (std::size_t m = 1; m <= 3; ++m) powers.push_back(power_algebra(base, m));

  std::vector<AffineInstance> out;
  while (out.size() < count) {
    const FiniteAlgebra& a = powers[out.size() % powers.size()];
    const std::size_t m = out.size() % powers.size() + 1;
    // An affine space of dimension m needs m+1 generators.
    std::uniform_int_distribution<std::size_t> seed_size(m + 1, a.size());
    const std::size_t k = seed_size(rng);
    std::vector<Element> universe(a.size());
    for (Element e = 0; e < a.size(); ++e) universe[e] = e;
    std::shuffle(universe.begin(), universe.end(), rng);
    std::vector<Element> placement(universe.begin(), universe.begin() + static_cast<long>(k));
    if (subuniverse_closure(a, placement).size() != a.size()) continue;

    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u) {
      edges.emplace_back(u, u);
      for (Vertex v = 0; v < k; ++v)
        if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
    const Digraph seed_digraph("seed", k, edges);
    out.push_back({a, generated_digraph(a, seed_digraph, placement)});
  }
  return out;
}

namespace {

struct Criterion {
  int id;
  const char* group;
  const char* title;
  std::function<void(CriterionResult&)> run;
};

// Appends a failure note and marks the result failed.
void expect(CriterionResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.pass = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

std::vector<Digraph> all_reflexive(std::size_t n) {
  std::vector<Digraph> out;
  const std::uint64_t pairs = n * (n - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    out.push_back(reflexive_digraph_from_mask(n, mask));
  return out;
}

Digraph random_reflexive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::bernoulli_distribution coin(density(rng));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u == v || coin(rng)) edges.emplace_back(u, v);
  return Digraph("random", n, edges);
}

std::vector<Criterion> criteria(const PaperCheckOptions& options) {
  const Digraph fig3 = options.fig3 ? *options.fig3 : digraph_fig3();
  const std::uint64_t seed = options.seed;
  auto instances = std::make_shared<std::optional<std::vector<AffineInstance>>>();
  auto affine = [instances, seed]() -> const std::vector<AffineInstance>& {
    if (!*instances) *instances = affine_instances(50, seed);
    return **instances;
  };

  std::vector<Criterion> list;

  list.push_back({1, "gallery", "gallery partitions of D and K", [](CriterionResult& r) {
    const Digraph d = digraph_d(), k = digraph_k();
    expect(r, equivalence(d, Connectivity::kExtreme) == Partition::parse("{{0,1},{2}}"),
           "extreme(D)");
    expect(r, equivalence(d, Connectivity::kStrong) == Partition::full(3), "strong(D)");
    expect(r, radical(d).result == Partition::full(3), "radical(D)");
    expect(r, equivalence(k, Connectivity::kExtreme) == Partition::parse("{{0,1},{2,3}}"),
           "extreme(K)");
    expect(r, radical(k).result == Partition::full(4), "radical(K)");
  }});

  list.push_back({2, "chain", "extreme <= radical <= strong <= weak, antisymmetric quotient",
                  [seed](CriterionResult& r) {
    std::size_t checked = 0, violations = 0;
    for (const auto& g : all_reflexive(4)) {
      ++checked;
      if (!verify_chain(g).holds()) ++violations;
    }
    std::mt19937_64 rng(seed ^ 0x2);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int i = 0; i < 1000; ++i) {
      ++checked;
      if (!verify_chain(random_reflexive(rng, size(rng))).holds()) ++violations;
    }
    r.detail = std::to_string(checked) + " digraphs, " + std::to_string(violations) + " violations";
    r.pass = violations == 0;
  }});

  list.push_back({3, "radical", "radical equals the least antisymmetric-quotient equivalence",
                  [](CriterionResult& r) {
    std::size_t mismatches = 0, checked = 0;
    for (const auto& g : all_reflexive(4)) {
      ++checked;
      if (radical(g).result != smallest_antisymmetric_oracle(g)) ++mismatches;
    }
    r.detail = std::to_string(checked) + " digraphs, " + std::to_string(mismatches) + " mismatches";
    r.pass = mismatches == 0;
  }});

  list.push_back({4, "nequiv", "N-equivalence equals extreme equivalence", [](CriterionResult& r) {
    const Digraph n = digraph_n();
    std::size_t mismatches = 0, checked = 0;
    for (const auto& g : all_reflexive(4)) {
      ++checked;
      if (h_equivalence(g, n) != equivalence(g, Connectivity::kExtreme)) ++mismatches;
    }
    r.detail = std::to_string(checked) + " digraphs, " + std::to_string(mismatches) + " mismatches";
    r.pass = mismatches == 0;
  }});

  list.push_back({5, "projections", "idempotent polymorphisms of K are projections",
                  [](CriterionResult& r) {
    std::ostringstream detail;
    for (std::size_t k = 1; k <= 3; ++k) {
      PolymorphismQuery q{digraph_k(), k, true};
      q.budget = k == 3 ? 100'000'000 : kDefaultBudget;
      const auto result = find_polymorphisms(q);
      detail << (k > 1 ? ", " : "") << "arity " << k << ": " << result.tables.size();
      if (result.truncated) {
        detail << " (budget-limited)";
        if (k < 3) expect(r, false, "arity " + std::to_string(k) + " exhausted its budget");
        else r.budget_limited = true;
        continue;
      }
      expect(r, result.tables.size() == k, "arity " + std::to_string(k) + " count");
      std::vector<std::size_t> coords;
      for (const auto& t : result.tables) {
        auto c = is_projection(t);
        expect(r, c.has_value(), "non-projection at arity " + std::to_string(k));
        if (c) coords.push_back(*c);
      }
      std::sort(coords.begin(), coords.end());
      expect(r, std::adjacent_find(coords.begin(), coords.end()) == coords.end(),
             "repeated projection");
    }
    const bool ok = r.detail.empty();
    r.detail = detail.str() + (ok ? "" : "; " + r.detail);
  }});

  list.push_back({6, "filter", "major subsets of D's idempotent polymorphisms form a filter",
                  [seed](CriterionResult& r) {
    std::size_t failures = 0;
    auto check = [&](const TermTable& t) {
      const MajorFamily m = major_subsets(t);
      if (!filter_check(m) || !meet_restriction_check(t, m)) ++failures;
    };
    std::ostringstream detail;
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto result = find_polymorphisms(PolymorphismQuery{digraph_d(), k, true});
      expect(r, !result.truncated, "arity " + std::to_string(k) + " enumeration incomplete");
      for (const auto& t : result.tables) check(t);
      detail << "arity " << k << ": " << result.tables.size() << ", ";
    }
    const auto sample = sample_polymorphisms(PolymorphismQuery{digraph_d(), 3, true}, 150, seed);
    for (const auto& t : sample) check(t);
    expect(r, sample.size() >= 100, "fewer than 100 arity-3 samples");
    detail << "arity 3 sample: " << sample.size() << ", failures " << failures;
    expect(r, failures == 0, "filter or meet restriction failed");
    r.detail = detail.str() + (r.detail.empty() ? "" : "; " + r.detail);
  }});

  list.push_back({7, "chainmeet", "the meet of 0<1<2 is an idempotent polymorphism of D",
                  [](CriterionResult& r) {
    const TermTable meet = chain3_meet().ops().front().table;
    expect(r, meet.is_idempotent(), "not idempotent");
    expect(r, is_polymorphism(digraph_d(), meet), "does not preserve D");
    const auto result = find_polymorphisms(PolymorphismQuery{digraph_d(), 2, true});
    expect(r, std::find(result.tables.begin(), result.tables.end(), meet) != result.tables.end(),
           "missing from the enumeration");
  }});

  list.push_back({8, "fig3", "3-cycle freely generated over semilattices", [fig3](CriterionResult& r) {
    const FreeDigraph fd = freely_generated_digraph(semilattice2(), three_cycle_seed());
    const Digraph& g = fd.digraph;
    std::ostringstream detail;
    detail << g.size() << " vertices, " << g.edge_count() << " edges";
    expect(r, g.size() == 7, "vertex count");
    expect(r, equivalence(g, Connectivity::kWeak).block_count() == 1, "not weakly connected");
    expect(r, is_isomorphic(g, fig3), "not isomorphic to the regression digraph");
    expect(r, !find_path(g, fd.generators[0], fd.generators[2], PathMode::kSymmetric),
           "symmetric path from x to z");
    expect(r, !search_identity_witness(semilattice2(), Endpoint::kZ, 10), "identity witness found");
    r.detail = detail.str() + (r.detail.empty() ? "" : "; " + r.detail);
  }});

  list.push_back({9, "affine", "affine Z2 witness with n = 1", [](CriterionResult& r) {
    const FiniteAlgebra a = affine_z2();
    const auto w = search_identity_witness(a, Endpoint::kY, 3);
    expect(r, w.has_value(), "no witness");
    if (w) {
      expect(r, w->n == 1, "n = " + std::to_string(w->n));
      expect(r, check_identity_system(a, *w), "found witness fails");
    }
    std::vector<Element> sum(64);
    for (std::size_t c = 0; c < 64; ++c) sum[c] = static_cast<Element>(((c >> 2) ^ (c >> 1) ^ c) & 1);
    IdentityWitness hand{1, {TermTable::projection(2, 6, 1)}, {TermTable(2, 6, sum)}, {},
                         Endpoint::kY};
    expect(r, check_identity_system(a, hand), "explicit pair fails");
  }});

  list.push_back({10, "lemma", "D freely generated over affine Z2 is extremely connected",
                  [](CriterionResult& r) {
    const Digraph g = freely_generated_digraph(affine_z2(), digraph_d()).digraph;
    r.detail = std::to_string(g.size()) + " vertices";
    expect(r, g.size() == 4, "vertex count");
    expect(r, equivalence(g, Connectivity::kExtreme).block_count() == 1, "not extremely connected");
  }});

  list.push_back({11, "olsak", "6-ary identities", [](CriterionResult& r) {
    std::vector<Element> sum(64);
    for (std::size_t c = 0; c < 64; ++c) sum[c] = static_cast<Element>(((c >> 5) ^ (c >> 4) ^ (c >> 3)) & 1);
    expect(r, olsak_check(TermTable(2, 6, sum)), "x1+x2+x3 fails");
    for (std::size_t i = 0; i < 6; ++i)
      expect(r, !olsak_check(TermTable::projection(2, 6, i)),
             "projection " + std::to_string(i + 1) + " passes");
    const auto tables = term_tables(semilattice2(), 6, true);
    r.detail += std::to_string(tables.size()) + " semilattice terms";
    expect(r, tables.size() == 63, "semilattice term count");
    expect(r, !olsak_search(semilattice2()), "semilattice term passes");
  }});

  list.push_back({12, "hm", "equivalences collapse over affine Z2", [affine](CriterionResult& r) {
    std::size_t bad = 0;
    for (const auto& inst : affine()) {
      const CollapseReport c = collapse_report(inst.digraph);
      const auto bound = hm_bound(inst.digraph);
      if (!(c.weak_strong && c.strong_radical && c.radical_extreme) || !bound || *bound > 2) ++bad;
    }
    r.detail = std::to_string(affine().size()) + " digraphs, " + std::to_string(bad) + " failures";
    r.pass = bad == 0;
  }});

  list.push_back({13, "rho", "rho preserves compatibility", [affine](CriterionResult& r) {
    std::size_t bad = 0;
    for (const auto& inst : affine())
      if (!is_compatible(rho_digraph(inst.digraph), inst.algebra)) ++bad;
    r.detail = std::to_string(bad) + " incompatible";
    expect(r, bad == 0, "rho output incompatible");
    const Digraph expected("rho(D)", 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
    expect(r, rho_digraph(digraph_d()) == expected, "rho(D) differs");
  }});

  list.push_back({14, "congruence", "connectivity partitions are congruences",
                  [affine](CriterionResult& r) {
    std::size_t bad = 0;
    for (const auto& inst : affine())
      for (auto kind : {Connectivity::kWeak, Connectivity::kStrong, Connectivity::kExtreme,
                        Connectivity::kRadical})
        if (!is_congruence(inst.algebra, equivalence(inst.digraph, kind))) ++bad;
    r.detail = std::to_string(bad) + " failures";
    r.pass = bad == 0;
  }});

  list.push_back({15, "hequiv", "K-, D- and extreme equivalence agree", [affine](CriterionResult& r) {
    std::size_t bad = 0;
    const Digraph k = digraph_k(), d = digraph_d();
    for (const auto& inst : affine()) {
      const Partition ext = equivalence(inst.digraph, Connectivity::kExtreme);
      if (h_equivalence(inst.digraph, k) != ext || h_equivalence(inst.digraph, d) != ext) ++bad;
    }
    r.detail = std::to_string(bad) + " failures";
    r.pass = bad == 0;
  }});

  list.push_back({16, "fig3", "corrupted regression digraph is rejected", [fig3](CriterionResult& r) {
    const Digraph g = freely_generated_digraph(semilattice2(), three_cycle_seed()).digraph;
    std::size_t accepted = 0, tried = 0;
    for (Vertex u = 0; u < fig3.size(); ++u)
      for (Vertex v = 0; v < fig3.size(); ++v) {
        std::vector<Edge> edges;
        for (const auto& e : fig3.edges())
          if (e != Edge{u, v}) edges.push_back(e);
        if (!fig3.has_edge(u, v)) edges.emplace_back(u, v);
        ++tried;
        if (is_isomorphic(g, Digraph("corrupt", fig3.size(), edges))) ++accepted;
      }
    r.detail = std::to_string(tried) + " single-edge corruptions, " + std::to_string(accepted) +
               " accepted";
    r.pass = accepted == 0 && tried > 0;
  }});

  return list;
}

}  // namespace

std::vector<std::string> paper_check_groups() {
  std::vector<std::string> out;
  for (const auto& c : criteria({}))
    if (std::find(out.begin(), out.end(), c.group) == out.end()) out.push_back(c.group);
  return out;
}

std::vector<CriterionResult> run_paper_check(const PaperCheckOptions& options) {
  const auto list = criteria(options);
  if (options.only) {
    const bool known = std::any_of(list.begin(), list.end(), [&](const Criterion& c) {
      return c.group == *options.only || std::to_string(c.id) == *options.only;
    });
    if (!known) throw Error("unknown paper-check selection '" + *options.only + "'");
  }
  std::vector<CriterionResult> results;
  for (const auto& c : list) {
    if (options.only && c.group != *options.only && std::to_string(c.id) != *options.only) continue;
    CriterionResult r{c.id, c.group, c.title, true, false, ""};
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << " [" << r.group << "] " << r.title;
  if (r.budget_limited) os << " (budget-limited)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace digcon
