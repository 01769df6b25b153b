#include "digcon/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "digcon/connectivity.hpp"

namespace digcon {

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.first} << 32) | e.second);
  }
};

// Bound on the work spent materializing operation tables of a free algebra.
constexpr std::size_t kTableWorkLimit = std::size_t{1} << 28;

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size, std::vector<Operation> ops)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
  if (size_ == 0) throw Error("algebra '" + name_ + "' has an empty universe");
  if (ops_.empty()) throw Error("algebra '" + name_ + "' has no operations");
  for (const auto& op : ops_) {
    if (op.arity() == 0) throw Error("nullary operation '" + op.name + "' is not supported");
    if (op.table.size() != size_)
      throw Error("operation '" + op.name + "' is defined over a universe of size " +
                  std::to_string(op.table.size()));
  }
}

std::vector<std::size_t> FiniteAlgebra::arities() const {
  std::vector<std::size_t> out;
  for (const auto& op : ops_) out.push_back(op.arity());
  return out;
}

bool FiniteAlgebra::is_idempotent() const {
  return std::all_of(ops_.begin(), ops_.end(),
                     [](const Operation& op) { return op.table.is_idempotent(); });
}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::size_t number(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  std::string name;
  std::size_t size = 0;
  bool have_header = false, have_size = false, done = false;
  std::vector<Operation> ops;
  std::string pending_name;
  std::size_t pending_arity = 0;
  bool pending = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split(line);
    if (tok.empty()) continue;
    if (done) throw ParseError(line_no, "content after 'end'");

    if (!have_header) {
      if (tok[0] != "algebra" || tok.size() > 2) throw ParseError(line_no, "expected 'algebra <name>'");
      name = tok.size() == 2 ? tok[1] : "";
      have_header = true;
    } else if (!have_size) {
      if (tok[0] != "size" || tok.size() != 2) throw ParseError(line_no, "expected 'size <s>'");
      size = number(tok[1], line_no);
      if (size == 0) throw ParseError(line_no, "size must be positive");
      have_size = true;
    } else if (pending) {
      if (tok[0] != "table") throw ParseError(line_no, "expected 'table' after 'op'");
      std::vector<Element> values;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::size_t v = number(tok[i], line_no);
        if (v >= size)
          throw ParseError(line_no, "value " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(size - 1));
        values.push_back(static_cast<Element>(v));
      }
      std::size_t expected = table_length(size, pending_arity, std::size_t{1} << 32);
      if (values.size() != expected)
        throw ParseError(line_no, "table of '" + pending_name + "' has " +
                                      std::to_string(values.size()) + " values, expected " +
                                      std::to_string(expected));
      ops.push_back(Operation{pending_name, TermTable(size, pending_arity, std::move(values))});
      pending = false;
    } else if (tok[0] == "op") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'op <name> <arity>'");
      pending_name = tok[1];
      pending_arity = number(tok[2], line_no);
      if (pending_arity == 0)
        throw ParseError(line_no, "nullary operation '" + pending_name + "' is not supported");
      pending = true;
    } else if (tok[0] == "end" && tok.size() == 1) {
      done = true;
    } else {
      throw ParseError(line_no, "expected 'op' or 'end'");
    }
  }
  if (!done) throw ParseError(line_no, "missing 'end'");
  if (ops.empty()) throw ParseError(line_no, "algebra has no operations");
  return FiniteAlgebra(std::move(name), size, std::move(ops));
}

std::string to_text(const FiniteAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << (a.name().empty() ? "a" : a.name()) << "\nsize " << a.size() << '\n';
  for (const auto& op : a.ops()) {
    os << "op " << op.name << ' ' << op.arity() << "\ntable";
    for (Element v : op.table.values()) os << ' ' << v;
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

FiniteAlgebra semilattice2() {
  return FiniteAlgebra("sl2", 2, {Operation{"meet", TermTable(2, 2, {0, 0, 0, 1})}});
}

FiniteAlgebra affine_z2() {
  return FiniteAlgebra("z2aff", 2, {Operation{"mal", TermTable(2, 3, {0, 1, 1, 0, 1, 0, 0, 1})}});
}

FiniteAlgebra chain3_meet() {
  return FiniteAlgebra("chain3meet", 3,
                       {Operation{"meet", TermTable(3, 2, {0, 0, 0, 0, 1, 1, 0, 1, 2})}});
}

FiniteAlgebra trivial_algebra() {
  return FiniteAlgebra("trivial", 1, {Operation{"f", TermTable(1, 2, {0})}});
}

FiniteAlgebra bundled_algebra(std::string_view name) {
  if (name == "sl2") return semilattice2();
  if (name == "z2aff") return affine_z2();
  if (name == "chain3meet") return chain3_meet();
  if (name == "trivial") return trivial_algebra();
  throw Error("unknown bundled algebra '" + std::string(name) + "'");
}

FiniteAlgebra power_algebra(const FiniteAlgebra& a, std::size_t m) {
  if (m == 0) throw Error("algebra power exponent must be positive");
  const std::size_t s = a.size();
  const std::size_t n = table_length(s, m, std::size_t{1} << 20);
  std::vector<Operation> ops;
  for (const auto& op : a.ops()) {
    const std::size_t r = op.arity();
    const std::size_t cells = table_length(n, r, std::size_t{1} << 26);
    std::vector<Element> values(cells);
    std::vector<Element> args(r);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      // Decode r tuple indices, apply coordinatewise, re-encode.
      std::vector<std::size_t> tuple_index(r);
      std::size_t c = cell;
      for (std::size_t i = r; i-- > 0;) {
        tuple_index[i] = c % n;
        c /= n;
      }
      std::size_t result = 0, place = 1;
      for (std::size_t coord = m; coord-- > 0;) {
        for (std::size_t i = 0; i < r; ++i) args[i] = static_cast<Element>((tuple_index[i] / place) % s);
        result += op.table.apply(args) * place;
        place *= s;
      }
      values[cell] = static_cast<Element>(result);
    }
    ops.push_back(Operation{op.name, TermTable(n, r, std::move(values))});
  }
  return FiniteAlgebra(a.name() + "^" + std::to_string(m), n, std::move(ops));
}

std::vector<Element> subuniverse_closure(const FiniteAlgebra& a, std::span<const Element> seed) {
  for (Element e : seed)
    if (e >= a.size()) throw Error("seed element " + std::to_string(e) + " out of range");
  const auto arities = a.arities();
  std::vector<Element> args;
  auto closure = close_under<Element>(
      seed, arities,
      [&](std::size_t op, std::span<const std::size_t> idx, const std::vector<Element>& items) {
        args.resize(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) args[i] = items[idx[i]];
        return a.ops()[op].table.apply(args);
      },
      a.size(), "subuniverse closure");
  std::vector<Element> out = std::move(closure.items);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_compatible(const Digraph& g, const FiniteAlgebra& a) {
  if (g.size() != a.size())
    throw Error("digraph has " + std::to_string(g.size()) + " vertices but the algebra has " +
                std::to_string(a.size()) + " elements");
  const auto& edges = g.edges();
  if (edges.empty()) return true;
  std::vector<Element> firsts, seconds;
  for (const auto& op : a.ops()) {
    const std::size_t r = op.arity();
    std::vector<std::size_t> pick(r, 0);
    firsts.resize(r);
    seconds.resize(r);
    while (true) {
      for (std::size_t i = 0; i < r; ++i) {
        firsts[i] = edges[pick[i]].first;
        seconds[i] = edges[pick[i]].second;
      }
      if (!g.has_edge(op.table.apply(firsts), op.table.apply(seconds))) return false;
      std::size_t i = r;
      while (i > 0 && ++pick[i - 1] == edges.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return true;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size())
    throw Error("partition covers " + std::to_string(p.size()) + " elements but the algebra has " +
                std::to_string(a.size()));
  // Preserving an equivalence is the same as preserving it in each argument
  // separately; compare every cell with the cell whose i-th argument is
  // replaced by its block's least element.
  std::vector<Element> least(p.block_count(), 0);
  for (std::size_t v = a.size(); v-- > 0;) least[p.block_of(static_cast<Vertex>(v))] = static_cast<Element>(v);
  for (const auto& op : a.ops()) {
    const auto& t = op.table;
    for (std::size_t cell = 0; cell < t.cell_count(); ++cell) {
      auto args = t.arguments(cell);
      const std::size_t block = p.block_of(t.at(cell));
      for (std::size_t i = 0; i < args.size(); ++i) {
        Element original = args[i];
        args[i] = least[p.block_of(original)];
        if (p.block_of(t.apply(args)) != block) return false;
        args[i] = original;
      }
    }
  }
  return true;
}

Closure<Edge> generate_edges(const FiniteAlgebra& a, std::span<const Edge> seed,
                             std::uint64_t max_edges) {
  for (const auto& [u, v] : seed)
    if (u >= a.size() || v >= a.size()) throw Error("seed edge out of range");
  const auto arities = a.arities();
  std::vector<Element> firsts, seconds;
  return close_under<Edge>(
      seed, arities,
      [&](std::size_t op, std::span<const std::size_t> idx, const std::vector<Edge>& items) {
        firsts.resize(idx.size());
        seconds.resize(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          firsts[i] = items[idx[i]].first;
          seconds[i] = items[idx[i]].second;
        }
        const auto& t = a.ops()[op].table;
        return Edge{t.apply(firsts), t.apply(seconds)};
      },
      max_edges, "edge closure", EdgeHash{});
}

Digraph generated_digraph(const FiniteAlgebra& a, const Digraph& seed,
                          std::span<const Element> placement) {
  if (placement.size() != seed.size())
    throw Error("placement lists " + std::to_string(placement.size()) +
                " elements for a seed with " + std::to_string(seed.size()) + " vertices");
  auto generated = subuniverse_closure(a, placement);
  if (generated.size() != a.size()) {
    std::ostringstream os;
    os << "seed vertices generate the proper subuniverse {";
    for (std::size_t i = 0; i < generated.size(); ++i) os << (i ? "," : "") << generated[i];
    os << "} of " << a.name();
    throw Error(os.str());
  }
  std::vector<Edge> seed_edges;
  for (const auto& [u, v] : seed.edges()) seed_edges.emplace_back(placement[u], placement[v]);
  auto closure = generate_edges(a, seed_edges);
  return Digraph(seed.name() + "@" + a.name(), a.size(), closure.items);
}

namespace {

// Closure of the k projections in a^(a^k), with the pointwise operations.
Closure<std::vector<Element>> term_closure(const FiniteAlgebra& a, std::size_t k,
                                           std::uint64_t max_items, const std::string& what) {
  if (k == 0) throw Error("number of generators must be positive");
  const std::size_t cells = table_length(a.size(), k, std::size_t{1} << 24);
  std::vector<std::vector<Element>> seed;
  for (std::size_t i = 0; i < k; ++i) seed.push_back(TermTable::projection(a.size(), k, i).values());
  const auto arities = a.arities();
  std::vector<Element> args;
  return close_under<std::vector<Element>>(
      std::span<const std::vector<Element>>(seed), arities,
      [&](std::size_t op, std::span<const std::size_t> idx,
          const std::vector<std::vector<Element>>& items) {
        const auto& t = a.ops()[op].table;
        std::vector<Element> out(cells);
        args.resize(idx.size());
        for (std::size_t c = 0; c < cells; ++c) {
          for (std::size_t i = 0; i < idx.size(); ++i) args[i] = items[idx[i]][c];
          out[c] = t.apply(args);
        }
        return out;
      },
      max_items, what, ElementVectorHash{});
}

}  // namespace

FreeAlgebraResult free_algebra(const FiniteAlgebra& a, std::size_t k, std::uint64_t max_elements) {
  auto closure = term_closure(a, k, max_elements,
                              "free algebra on " + std::to_string(k) + " generators over " + a.name());
  const std::size_t m = closure.items.size();
  const std::size_t cells = closure.items.front().size();

  std::unordered_map<std::vector<Element>, Element, ElementVectorHash> index;
  for (std::size_t e = 0; e < m; ++e) index.emplace(closure.items[e], static_cast<Element>(e));

  FreeAlgebraResult result;
  for (std::size_t j = 0; j < k; ++j) result.generators.push_back(static_cast<Element>(closure.seed_items[j]));
  for (const auto& values : closure.items) result.element_tables.emplace_back(a.size(), k, values);

  std::vector<Operation> ops;
  std::vector<Element> args;
  std::vector<Element> pointwise(cells);
  for (const auto& op : a.ops()) {
    const std::size_t r = op.arity();
    const std::size_t length = table_length(m, r, kTableWorkLimit / std::max<std::size_t>(cells, 1));
    std::vector<Element> values(length);
    std::vector<std::size_t> pick(r, 0);
    args.resize(r);
    for (std::size_t cell = 0; cell < length; ++cell) {
      std::size_t c = cell;
      for (std::size_t i = r; i-- > 0;) {
        pick[i] = c % m;
        c /= m;
      }
      for (std::size_t p = 0; p < cells; ++p) {
        for (std::size_t i = 0; i < r; ++i) args[i] = closure.items[pick[i]][p];
        pointwise[p] = op.table.apply(args);
      }
      values[cell] = index.at(pointwise);
    }
    ops.push_back(Operation{op.name, TermTable(m, r, std::move(values))});
  }
  result.algebra = FiniteAlgebra("F" + std::to_string(k) + "(" + a.name() + ")", m, std::move(ops));
  return result;
}

FreeDigraph freely_generated_digraph(const FiniteAlgebra& a, const Digraph& seed,
                                     std::uint64_t max_elements) {
  if (seed.size() == 0) throw Error("seed digraph is empty");
  FreeDigraph out;
  out.free = free_algebra(a, seed.size(), max_elements);
  out.generators = out.free.generators;
  std::vector<Edge> seed_edges;
  for (const auto& [u, v] : seed.edges())
    seed_edges.emplace_back(out.generators[u], out.generators[v]);
  out.edges = generate_edges(out.free.algebra, seed_edges);
  out.digraph = Digraph("F(" + seed.name() + "," + a.name() + ")", out.free.algebra.size(),
                        out.edges.items);
  return out;
}

std::vector<TermTable> term_tables(const FiniteAlgebra& a, std::size_t k, bool idempotent_only,
                                   std::uint64_t max_tables) {
  auto closure = term_closure(a, k, max_tables,
                              std::to_string(k) + "-ary term operations of " + a.name());
  std::vector<TermTable> out;
  for (auto& values : closure.items) {
    TermTable t(a.size(), k, std::move(values));
    if (!idempotent_only || t.is_idempotent()) out.push_back(std::move(t));
  }
  return out;
}

std::map<std::size_t, TermTable> weak_component_labels(const FreeAlgebraResult& fr,
                                                       const Digraph& fg) {
  if (fg.size() != fr.element_tables.size())
    throw Error("digraph is not on the free algebra's universe");
  const Partition weak = equivalence(fg, Connectivity::kWeak);
  std::map<std::size_t, TermTable> labels;
  for (Vertex v = 0; v < fg.size(); ++v) {
    const auto& t = fr.element_tables[v];
    std::vector<Element> diagonal(t.size());
    std::vector<Element> args(t.arity());
    for (Element x = 0; x < t.size(); ++x) {
      std::fill(args.begin(), args.end(), x);
      diagonal[x] = t.apply(args);
    }
    TermTable label(t.size(), 1, std::move(diagonal));
    auto [it, inserted] = labels.try_emplace(weak.block_of(v), label);
    if (!inserted && it->second != label)
      throw Contradiction("weak component " + std::to_string(weak.block_of(v)) +
                          " of the free digraph carries two unary labels");
  }
  return labels;
}

}  // namespace digcon
