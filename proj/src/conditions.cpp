#include "digcon/conditions.hpp"

#include <sstream>
#include <unordered_map>

#include "digcon/connectivity.hpp"

namespace digcon {

std::string to_string(Endpoint e) { return e == Endpoint::kY ? "y" : "z"; }

Endpoint parse_endpoint(std::string_view name) {
  if (name == "y") return Endpoint::kY;
  if (name == "z") return Endpoint::kZ;
  throw Error("endpoint must be y or z, got '" + std::string(name) + "'");
}

bool check_identity_system(const FiniteAlgebra& a, const IdentityWitness& w) {
  if (w.n == 0) throw Error("identity chain needs n >= 1");
  if (w.t_terms.size() != w.n || w.s_terms.size() != w.n)
    throw Error("witness must carry n t-terms and n s-terms");
  for (const auto* terms : {&w.t_terms, &w.s_terms})
    for (const auto& t : *terms)
      if (t.arity() != 6 || t.size() != a.size())
        throw Error("witness terms must be 6-ary over the algebra's universe");

  const auto& t = w.t_terms;
  const auto& s = w.s_terms;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z) {
        const Element e = w.endpoint == Endpoint::kY ? y : z;
        if (t[0]({x, x, y, y, z, z}) != x) return false;
        for (std::size_t i = 0; i < w.n; ++i) {
          if (t[i]({x, x, y, y, z, z}) != s[i]({x, y, y, z, z, x})) return false;
          if (s[i]({x, x, y, y, z, z}) != t[i]({x, y, y, z, z, x})) return false;
          if (i > 0 && t[i]({x, x, y, y, z, z}) != t[i - 1]({x, y, y, z, z, x})) return false;
        }
        if (t[w.n - 1]({x, y, y, z, z, x}) != e) return false;
      }
  return true;
}

namespace {

struct EdgeKeyHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.first} << 32) | e.second);
  }
};

// 6-ary tables of the edges of a free digraph generated by six seed pairs,
// seed j standing for the j-th variable.
class EdgeTerms {
 public:
  EdgeTerms(const FiniteAlgebra& a, const Closure<Edge>& closure)
      : a_(a), closure_(closure), tables_(closure.items.size()) {}

  const TermTable& table(std::size_t item) {
    if (tables_[item]) return *tables_[item];
    const Derivation& d = closure_.derivations[item];
    if (!d.op) {
      tables_[item] = TermTable::projection(a_.size(), 6, d.parents[0]);
    } else {
      std::vector<const TermTable*> parents;
      for (std::size_t p : d.parents) parents.push_back(&table(p));
      const TermTable& op = a_.ops()[*d.op].table;
      const std::size_t cells = parents.front()->cell_count();
      std::vector<Element> values(cells), args(parents.size());
      for (std::size_t c = 0; c < cells; ++c) {
        for (std::size_t i = 0; i < parents.size(); ++i) args[i] = parents[i]->at(c);
        values[c] = op.apply(args);
      }
      tables_[item] = TermTable(a_.size(), 6, std::move(values));
    }
    return *tables_[item];
  }

 private:
  const FiniteAlgebra& a_;
  const Closure<Edge>& closure_;
  std::vector<std::optional<TermTable>> tables_;
};

}  // namespace

std::optional<IdentityWitness> search_identity_witness(const FiniteAlgebra& a, Endpoint endpoint,
                                                       std::size_t max_n,
                                                       std::uint64_t max_elements) {
  const FreeAlgebraResult fr = free_algebra(a, 3, max_elements);
  const Element x = fr.generators[0], y = fr.generators[1], z = fr.generators[2];
  // Seed pairs in variable order: first coordinates read x,x,y,y,z,z and
  // second coordinates x,y,y,z,z,x.
  const std::vector<Edge> seed{{x, x}, {x, y}, {y, y}, {y, z}, {z, z}, {z, x}};
  const Closure<Edge> closure = generate_edges(fr.algebra, seed);
  const Digraph fg("free", fr.algebra.size(), closure.items);

  const Element target = endpoint == Endpoint::kY ? y : z;
  std::vector<Vertex> path;
  if (target == x) {
    path = {x, x};
  } else {
    auto found = find_path(fg, x, target, PathMode::kSymmetric);
    if (!found) return std::nullopt;
    path = std::move(*found);
  }
  const std::size_t n = path.size() - 1;
  if (n > max_n) return std::nullopt;

  std::unordered_map<Edge, std::size_t, EdgeKeyHash> item_of;
  for (std::size_t i = 0; i < closure.items.size(); ++i) item_of.emplace(closure.items[i], i);
  EdgeTerms terms(a, closure);

  auto edge_table = [&](Vertex from, Vertex to) -> TermTable {
    auto it = item_of.find(Edge{from, to});
    if (it == item_of.end()) throw Contradiction("symmetric path uses a missing edge");
    const TermTable& t = terms.table(it->second);
    // The table must evaluate to the edge's endpoints on the seed patterns.
    for (Element u = 0; u < a.size(); ++u)
      for (Element v = 0; v < a.size(); ++v)
        for (Element w = 0; w < a.size(); ++w)
          if (t({u, u, v, v, w, w}) != fr.element_tables[from]({u, v, w}) ||
              t({u, v, v, w, w, u}) != fr.element_tables[to]({u, v, w}))
            throw Contradiction("edge term does not realize its edge");
    return t;
  };

  IdentityWitness w;
  w.n = n;
  w.endpoint = endpoint;
  w.path = path;
  for (std::size_t i = 1; i <= n; ++i) {
    w.t_terms.push_back(edge_table(path[i - 1], path[i]));
    w.s_terms.push_back(edge_table(path[i], path[i - 1]));
  }
  if (!check_identity_system(a, w))
    throw Contradiction("terms read off a symmetric path fail the identities");
  return w;
}

Digraph rho_digraph(const Digraph& g) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < g.size(); ++x) {
    std::vector<bool> hit(g.size(), false);
    for (Vertex u : g.out(x))
      for (Vertex y : g.out(u))
        if (g.has_edge(y, u)) hit[y] = true;
    for (Vertex y = 0; y < g.size(); ++y)
      if (hit[y]) edges.emplace_back(x, y);
  }
  return Digraph("rho(" + g.name() + ")", g.size(), edges);
}

CollapseReport collapse_report(const Digraph& g) {
  const Partition weak = equivalence(g, Connectivity::kWeak);
  const Partition strong = equivalence(g, Connectivity::kStrong);
  const Partition extreme = equivalence(g, Connectivity::kExtreme);
  const Partition rad = equivalence(g, Connectivity::kRadical);
  CollapseReport r;
  r.weak_strong = weak == strong;
  r.weak_radical = weak == rad;
  r.weak_extreme = weak == extreme;
  r.strong_radical = strong == rad;
  r.strong_extreme = strong == extreme;
  r.radical_extreme = rad == extreme;
  return r;
}

std::string to_text(const IdentityWitness& w) {
  std::ostringstream os;
  os << "witness n=" << w.n << " endpoint=" << to_string(w.endpoint) << '\n';
  for (const auto& t : w.t_terms) os << to_text(t);
  for (const auto& s : w.s_terms) os << to_text(s);
  os << "path";
  for (Vertex v : w.path) os << ' ' << v;
  os << '\n';
  return os.str();
}

IdentityWitness parse_witness(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }
  auto fail = [](std::size_t line, const std::string& what) { throw ParseError(line + 1, what); };
  std::size_t i = 0;
  while (i < lines.size() && lines[i].find_first_not_of(" \t\r") == std::string::npos) ++i;
  if (i == lines.size()) fail(i, "empty witness");

  IdentityWitness w;
  {
    std::istringstream head(lines[i]);
    std::string word, n_field, e_field;
    head >> word >> n_field >> e_field;
    if (word != "witness" || n_field.rfind("n=", 0) != 0 || e_field.rfind("endpoint=", 0) != 0)
      fail(i, "expected 'witness n=<n> endpoint=<y|z>'");
    try {
      w.n = std::stoul(n_field.substr(2));
      w.endpoint = parse_endpoint(e_field.substr(9));
    } catch (const std::exception& e) {
      fail(i, e.what());
    }
    if (w.n == 0) fail(i, "n must be positive");
    ++i;
  }
  for (std::size_t b = 0; b < 2 * w.n; ++b) {
    if (i + 1 >= lines.size()) fail(i, "missing term block");
    try {
      auto t = parse_term_table(lines[i] + "\n" + lines[i + 1]);
      (b < w.n ? w.t_terms : w.s_terms).push_back(std::move(t));
    } catch (const std::exception& e) {
      fail(i, e.what());
    }
    i += 2;
  }
  if (i < lines.size()) {
    std::istringstream is(lines[i]);
    std::string word;
    is >> word;
    if (word != "path") fail(i, "expected 'path'");
    Vertex v = 0;
    while (is >> v) w.path.push_back(v);
  }
  return w;
}

}  // namespace digcon
