#include "digcon/polymorph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace digcon {

namespace {

std::size_t diagonal_step(std::size_t size, std::size_t arity) {
  std::size_t step = 0, power = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    step += power;
    power *= size;
  }
  return step;
}

HomSearchOptions base_options(const PolymorphismQuery& q, std::size_t cells) {
  HomSearchOptions options;
  options.budget = q.budget;
  options.max_results = q.limit;
  if (q.idempotent) {
    options.fixed.assign(cells, std::nullopt);
    const std::size_t step = diagonal_step(q.digraph.size(), q.arity);
    for (std::size_t x = 0; x < q.digraph.size(); ++x) options.fixed[x * step] = static_cast<Vertex>(x);
  }
  return options;
}

}  // namespace

HomSearchStats for_each_polymorphism(const PolymorphismQuery& q,
                                     const std::function<bool(const TermTable&)>& visit) {
  if (q.arity == 0) throw Error("polymorphism arity must be positive");
  if (q.budget == 0) throw Error("budget must be positive");
  const Digraph& g = q.digraph;
  if (g.size() == 0) throw Error("digraph is empty");
  const Digraph domain = power(g, q.arity, std::uint64_t{1} << 22);
  const std::size_t n = g.size(), k = q.arity;
  return search_homomorphisms(domain, g, base_options(q, domain.size()),
                              [&](std::span<const Vertex> image) {
                                return visit(TermTable(n, k, {image.begin(), image.end()}));
                              });
}

PolymorphismResult find_polymorphisms(const PolymorphismQuery& q) {
  PolymorphismResult result;
  result.stats = for_each_polymorphism(q, [&](const TermTable& t) {
    result.tables.push_back(t);
    return true;
  });
  result.truncated = result.stats.budget_exhausted;
  return result;
}

std::vector<TermTable> sample_polymorphisms(const PolymorphismQuery& q, std::size_t count,
                                            std::uint64_t seed, std::size_t max_attempts) {
  if (q.arity == 0) throw Error("polymorphism arity must be positive");
  const Digraph& g = q.digraph;
  const Digraph domain = power(g, q.arity, std::uint64_t{1} << 22);
  const std::size_t cells = domain.size();
  HomSearchOptions options = base_options(q, cells);
  if (options.fixed.empty()) options.fixed.assign(cells, std::nullopt);
  std::vector<std::size_t> open;
  for (std::size_t c = 0; c < cells; ++c)
    if (!options.fixed[c]) open.push_back(c);

  std::mt19937_64 rng(seed);
  std::set<TermTable> found;
  for (std::size_t attempt = 0; attempt < max_attempts && found.size() < count; ++attempt) {
    HomSearchOptions local = options;
    local.budget = std::min<std::uint64_t>(q.budget, 100'000);
    local.max_results = 4;
    // Short prefixes keep most attempts consistent; long ones reach deep
    // into the table order.
    std::uniform_int_distribution<std::size_t> length(0, open.size() / 2);
    std::uniform_int_distribution<Vertex> value(0, static_cast<Vertex>(g.size() - 1));
    const std::size_t prefix = length(rng);
    for (std::size_t i = 0; i < prefix; ++i) local.fixed[open[i]] = value(rng);
    search_homomorphisms(domain, g, local, [&](std::span<const Vertex> image) {
      found.emplace(g.size(), q.arity, std::vector<Element>(image.begin(), image.end()));
      return found.size() < count;
    });
  }
  return {found.begin(), found.end()};
}

bool is_polymorphism(const Digraph& g, const TermTable& t) {
  if (t.size() != g.size()) throw Error("table and digraph have different universes");
  const auto& edges = g.edges();
  const std::size_t k = t.arity();
  if (edges.empty()) return true;
  std::vector<std::size_t> pick(k, 0);
  std::vector<Element> firsts(k), seconds(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      firsts[i] = edges[pick[i]].first;
      seconds[i] = edges[pick[i]].second;
    }
    if (!g.has_edge(t.apply(firsts), t.apply(seconds))) return false;
    std::size_t i = k;
    while (i > 0 && ++pick[i - 1] == edges.size()) pick[--i] = 0;
    if (i == 0) return true;
  }
}

std::optional<std::size_t> is_projection(const TermTable& t) {
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (t == TermTable::projection(t.size(), t.arity(), i)) return i + 1;
  return std::nullopt;
}

bool MajorFamily::contains(std::uint32_t s) const {
  return std::binary_search(subsets.begin(), subsets.end(), s);
}

MajorFamily major_subsets(const TermTable& t) {
  if (t.size() != 3) throw Error("major subsets are defined for tables over {0,1,2}");
  if (t.arity() > kMaxMajorArity)
    throw BudgetExceeded("major subset scan at arity " + std::to_string(t.arity()), 0);
  if (!t.is_idempotent()) throw Error("major subsets need an idempotent table");
  MajorFamily m;
  m.arity = t.arity();
  std::vector<bool> seen(std::size_t{1} << t.arity(), false);
  for (std::size_t cell = 0; cell < t.cell_count(); ++cell) {
    if (t.at(cell) != 2) continue;
    std::uint32_t mask = 0;
    std::size_t c = cell;
    for (std::size_t i = t.arity(); i-- > 0;) {
      if (c % 3 == 2) mask |= std::uint32_t{1} << i;
      c /= 3;
    }
    seen[mask] = true;
  }
  for (std::uint32_t s = 0; s < seen.size(); ++s)
    if (seen[s]) m.subsets.push_back(s);
  if (filter_check(m)) {
    std::uint32_t least = (std::uint32_t{1} << m.arity) - 1;
    for (auto s : m.subsets) least &= s;
    m.least = least;
  }
  return m;
}

bool filter_check(const MajorFamily& m) {
  if (m.subsets.empty()) return false;
  for (auto s : m.subsets) {
    for (std::size_t j = 0; j < m.arity; ++j)
      if (!m.contains(s | (std::uint32_t{1} << j))) return false;
    for (auto r : m.subsets)
      if (!m.contains(s & r)) return false;
  }
  return true;
}

bool meet_restriction_check(const TermTable& t, const MajorFamily& m) {
  if (!m.least) throw Error("major family is not a filter");
  if (t.size() != 3 || t.arity() != m.arity) throw Error("table does not match the major family");
  const std::size_t k = t.arity();
  std::vector<Element> args(k);
  for (std::uint32_t twos = 0; twos < (std::uint32_t{1} << k); ++twos) {
    for (std::size_t i = 0; i < k; ++i) args[i] = (twos >> i) & 1 ? 2 : 0;
    const bool expect_two = (twos & *m.least) == *m.least;
    if ((t.apply(args) == 2) != expect_two) return false;
  }
  return true;
}

bool olsak_check(const TermTable& t) {
  if (t.arity() != 6) throw Error("Olsak terms are 6-ary");
  if (!t.is_idempotent()) return false;
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) {
      const Element a = t({x, x, x, y, y, y});
      if (t({x, y, y, x, x, y}) != a || t({y, x, y, x, y, x}) != a) return false;
    }
  return true;
}

std::optional<TermTable> olsak_search(const FiniteAlgebra& a, std::uint64_t max_tables) {
  for (auto& t : term_tables(a, 6, true, max_tables))
    if (olsak_check(t)) return std::move(t);
  return std::nullopt;
}

std::string subset_to_string(std::uint32_t mask, std::size_t arity) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < arity; ++i)
    if ((mask >> i) & 1) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

std::string to_string(const MajorFamily& m) {
  std::vector<std::uint32_t> order = m.subsets;
  // Smaller subsets first, then by coordinates.
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::string out = "{";
  for (std::size_t i = 0; i < order.size(); ++i)
    out += (i ? "," : "") + subset_to_string(order[i], m.arity);
  return out + "}";
}

}  // namespace digcon
