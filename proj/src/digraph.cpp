#include "digcon/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace digcon {

Digraph::Digraph(std::string name, std::size_t n, std::span<const Edge> edges)
    : name_(std::move(name)), out_(n), in_(n) {
  edges_.assign(edges.begin(), edges.end());
  for (const auto& [u, v] : edges_)
    if (u >= n || v >= n)
      throw Error("edge " + std::to_string(u) + "->" + std::to_string(v) +
                  " out of range for " + std::to_string(n) + " vertices");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  // in_ lists are filled in order of u, hence already sorted.
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  const auto& succ = out_[u];
  return std::binary_search(succ.begin(), succ.end(), v);
}

bool Digraph::is_reflexive() const {
  for (Vertex v = 0; v < size(); ++v)
    if (!has_edge(v, v)) return false;
  return true;
}

Digraph Digraph::renamed(std::string name) const {
  Digraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

VertexMap VertexMap::after(const VertexMap& inner) const {
  if (inner.target_size != source_size())
    throw Error("vertex maps are not composable");
  VertexMap out{target_size, std::vector<Vertex>(inner.source_size())};
  for (std::size_t v = 0; v < inner.source_size(); ++v)
    out.image[v] = image[inner.image[v]];
  return out;
}

bool VertexMap::is_identity() const {
  if (target_size != source_size()) return false;
  for (std::size_t v = 0; v < image.size(); ++v)
    if (image[v] != v) return false;
  return true;
}

bool is_homomorphism(const Digraph& from, const Digraph& to, const VertexMap& map) {
  if (map.source_size() != from.size() || map.target_size != to.size())
    return false;
  for (Vertex x : map.image)
    if (x >= to.size()) return false;
  for (const auto& [u, v] : from.edges())
    if (!to.has_edge(map(u), map(v))) return false;
  return true;
}

bool is_antisymmetric(const Digraph& g) {
  for (const auto& [u, v] : g.edges())
    if (u < v && g.has_edge(v, u)) return false;
  return true;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  enum class State { kHeader, kVertices, kBody, kEdges, kDone };
  State state = State::kHeader;
  std::string name;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;

    switch (state) {
      case State::kHeader:
        if (tok[0] != "digraph" || tok.size() > 2)
          throw ParseError(line_no, "expected 'digraph <name>'");
        name = tok.size() == 2 ? std::string(tok[1]) : std::string();
        state = State::kVertices;
        break;
      case State::kVertices:
        if (tok[0] != "vertices" || tok.size() != 2)
          throw ParseError(line_no, "expected 'vertices <n>'");
        n = to_number(tok[1], line_no);
        state = State::kBody;
        break;
      case State::kBody:
        if (tok.size() == 1 && tok[0] == "reflexive") {
          for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v);
        } else if (tok.size() == 1 && tok[0] == "edges") {
          state = State::kEdges;
        } else {
          throw ParseError(line_no, "expected 'reflexive' or 'edges'");
        }
        break;
      case State::kEdges:
        if (tok.size() == 1 && tok[0] == "end") {
          state = State::kDone;
          break;
        }
        if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>' or 'end'");
        {
          auto u = to_number(tok[0], line_no);
          auto v = to_number(tok[1], line_no);
          if (u >= n || v >= n)
            throw ParseError(line_no, "vertex index out of range 0.." +
                                          std::to_string(n == 0 ? 0 : n - 1));
          edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        break;
      case State::kDone:
        throw ParseError(line_no, "content after 'end'");
    }
  }
  if (state != State::kDone) throw ParseError(line_no, "missing 'end'");
  return Digraph(std::move(name), n, edges);
}

std::string to_text(const Digraph& g) {
  std::ostringstream os;
  os << "digraph " << (g.name().empty() ? "g" : g.name()) << '\n'
     << "vertices " << g.size() << '\n';
  bool reflexive = g.size() > 0 && g.is_reflexive();
  if (reflexive) os << "reflexive\n";
  os << "edges\n";
  for (const auto& [u, v] : g.edges())
    if (!reflexive || u != v) os << u << ' ' << v << '\n';
  os << "end\n";
  return os.str();
}

Digraph quotient(const Digraph& g, const Partition& p) {
  if (p.size() != g.size())
    throw Error("partition covers " + std::to_string(p.size()) +
                " elements but the digraph has " + std::to_string(g.size()) +
                " vertices");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(static_cast<Vertex>(p.block_of(u)),
                       static_cast<Vertex>(p.block_of(v)));
  return Digraph(g.name() + "/~", p.block_count(), edges);
}

Digraph power(const Digraph& g, std::size_t k, std::uint64_t max_vertices) {
  if (k == 0) throw Error("power exponent must be positive");
  const std::uint64_t n = g.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && count > max_vertices / n)
      throw BudgetExceeded("power " + g.name() + "^" + std::to_string(k), 0);
    count *= n;
  }
  if (count > max_vertices)
    throw BudgetExceeded("power " + g.name() + "^" + std::to_string(k), 0);

  // Edges of G^k are k-tuples of edges of G; the tuple index of the source
  // and target vertices accumulates digit by digit.
  const auto& base = g.edges();
  std::vector<Edge> edges;
  std::vector<std::size_t> digits(k, 0);
  if (!base.empty()) {
    while (true) {
      std::uint64_t s = 0, t = 0;
      for (std::size_t i = 0; i < k; ++i) {
        s = s * n + base[digits[i]].first;
        t = t * n + base[digits[i]].second;
      }
      edges.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(t));
      std::size_t i = k;
      while (i > 0 && ++digits[i - 1] == base.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return Digraph(g.name() + "^" + std::to_string(k), count, edges);
}

Digraph induced(const Digraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> index(g.size(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.size())
      throw Error("vertex " + std::to_string(keep[i]) + " out of range");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] != kAbsent && index[v] != kAbsent) edges.emplace_back(index[u], index[v]);
  return Digraph(g.name() + "[S]", keep.size(), edges);
}

Digraph reflexive_digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (bit < 64 && ((mask >> bit) & 1U)) edges.emplace_back(u, v);
      ++bit;
    }
  return Digraph("r" + std::to_string(n) + "_" + std::to_string(mask), n, edges);
}

}  // namespace digcon
