#include "digcon/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "digcon/homomorphism.hpp"

namespace digcon {

std::string to_string(Connectivity kind) {
  switch (kind) {
    case Connectivity::kWeak: return "weak";
    case Connectivity::kStrong: return "strong";
    case Connectivity::kExtreme: return "extreme";
    case Connectivity::kRadical: return "radical";
  }
  return "?";
}

Connectivity parse_connectivity(std::string_view name) {
  if (name == "weak") return Connectivity::kWeak;
  if (name == "strong") return Connectivity::kStrong;
  if (name == "extreme") return Connectivity::kExtreme;
  if (name == "radical") return Connectivity::kRadical;
  throw Error("unknown equivalence kind '" + std::string(name) + "'");
}

std::string to_string(PathMode mode) {
  switch (mode) {
    case PathMode::kOriented: return "oriented";
    case PathMode::kDirected: return "directed";
    case PathMode::kSymmetric: return "symmetric";
  }
  return "?";
}

PathMode parse_path_mode(std::string_view name) {
  if (name == "oriented") return PathMode::kOriented;
  if (name == "directed") return PathMode::kDirected;
  if (name == "symmetric") return PathMode::kSymmetric;
  throw Error("unknown path mode '" + std::string(name) + "'");
}

namespace {

Partition weak_components(const Digraph& g) {
  DisjointSets sets(g.size());
  for (const auto& [u, v] : g.edges()) sets.merge(u, v);
  return Partition::from_sets(sets);
}

Partition extreme_components(const Digraph& g) {
  DisjointSets sets(g.size());
  for (const auto& [u, v] : g.edges())
    if (u < v && g.has_edge(v, u)) sets.merge(u, v);
  return Partition::from_sets(sets);
}

// Tarjan's algorithm with an explicit call stack.
Partition strong_components(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> calls;  // vertex, next successor
  std::size_t counter = 0, components = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      auto& [v, next] = calls.back();
      auto succ = g.out(v);
      if (next < succ.size()) {
        Vertex w = succ[next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return Partition::from_labels(component);
}

// Neighbours reachable in one step of the given kind, in increasing order.
std::vector<Vertex> steps(const Digraph& g, Vertex v, PathMode mode, bool reverse) {
  std::vector<Vertex> out;
  switch (mode) {
    case PathMode::kDirected: {
      auto next = reverse ? g.in(v) : g.out(v);
      out.assign(next.begin(), next.end());
      break;
    }
    case PathMode::kOriented:
      std::set_union(g.out(v).begin(), g.out(v).end(), g.in(v).begin(), g.in(v).end(),
                     std::back_inserter(out));
      break;
    case PathMode::kSymmetric:
      std::set_intersection(g.out(v).begin(), g.out(v).end(), g.in(v).begin(),
                            g.in(v).end(), std::back_inserter(out));
      break;
  }
  return out;
}

}  // namespace

Partition equivalence(const Digraph& g, Connectivity kind) {
  switch (kind) {
    case Connectivity::kWeak: return weak_components(g);
    case Connectivity::kStrong: return strong_components(g);
    case Connectivity::kExtreme: return extreme_components(g);
    case Connectivity::kRadical: return radical(g).result;
  }
  throw Error("unknown equivalence kind");
}

RadicalTrace radical(const Digraph& g) {
  RadicalTrace trace;
  Partition current = extreme_components(g);
  trace.stages.push_back(current);
  while (true) {
    Partition lifted_blocks = extreme_components(quotient(g, current));
    if (lifted_blocks.is_discrete()) break;
    std::vector<std::size_t> labels(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
      labels[v] = lifted_blocks.block_of(static_cast<Vertex>(current.block_of(v)));
    current = Partition::from_labels(labels);
    trace.stages.push_back(current);
  }
  // Repeat the fixpoint so the trace ends on two equal stages.
  if (trace.stages.size() > 1) trace.stages.push_back(current);
  trace.result = current;
  return trace;
}

Partition smallest_antisymmetric_oracle(const Digraph& g, std::size_t max_vertices) {
  const std::size_t n = g.size();
  if (!g.is_reflexive()) throw Error("antisymmetric-quotient oracle needs a reflexive digraph");
  if (n > max_vertices)
    throw Error("antisymmetric-quotient oracle is capped at " + std::to_string(max_vertices) +
                " vertices, got " + std::to_string(n));

  std::vector<Partition> candidates;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0), max_prefix(n, 0);
  std::vector<char> linked(n * n);
  while (true) {
    std::fill(linked.begin(), linked.end(), 0);
    bool antisymmetric = true;
    for (const auto& [u, v] : g.edges()) {
      std::size_t bu = rgs[u], bv = rgs[v];
      if (bu == bv) continue;
      if (linked[bv * n + bu]) {
        antisymmetric = false;
        break;
      }
      linked[bu * n + bv] = 1;
    }
    if (antisymmetric) candidates.push_back(Partition::from_labels(rgs));

    bool advanced = false;
    for (std::size_t i = n; i-- > 1;) {
      if (rgs[i] <= max_prefix[i - 1]) {
        ++rgs[i];
        max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          max_prefix[j] = max_prefix[j - 1];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  if (candidates.empty()) throw Contradiction("no equivalence has an antisymmetric quotient");
  Partition least = candidates.front();
  for (const auto& c : candidates) least = meet(least, c);
  bool is_candidate = std::find(candidates.begin(), candidates.end(), least) != candidates.end();
  if (!is_candidate)
    throw Contradiction("antisymmetric quotients of " + g.name() + " have no least equivalence");
  for (const auto& c : candidates)
    if (!least.refines(c))
      throw Contradiction("least antisymmetric equivalence does not refine " + c.to_string());
  return least;
}

Partition h_equivalence(const Digraph& g, const Digraph& h, std::uint64_t budget) {
  if (h.size() == 0) throw Error("H-equivalence needs a nonempty digraph H");
  DisjointSets sets(g.size());
  HomSearchOptions options;
  options.budget = budget;
  std::uint64_t found = 0;
  auto stats = search_homomorphisms(h, g, options, [&](std::span<const Vertex> image) {
    ++found;
    for (Vertex x : image) sets.merge(image[0], x);
    return true;
  });
  if (stats.budget_exhausted)
    throw BudgetExceeded(h.name() + "-equivalence of " + g.name(), found);
  return Partition::from_sets(sets);
}

std::optional<std::vector<Vertex>> find_path(const Digraph& g, Vertex a, Vertex b,
                                             PathMode mode) {
  if (a >= g.size() || b >= g.size()) throw Error("path endpoint out of range");
  constexpr auto kFar = std::numeric_limits<std::size_t>::max();
  // Distances to b, then a greedy walk from a that always takes the least
  // neighbour one step closer.
  std::vector<std::size_t> dist(g.size(), kFar);
  std::deque<Vertex> queue{b};
  dist[b] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : steps(g, v, mode, /*reverse=*/true))
      if (dist[w] == kFar) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  if (dist[a] == kFar) return std::nullopt;
  std::vector<Vertex> path{a};
  Vertex v = a;
  while (v != b) {
    for (Vertex w : steps(g, v, mode, /*reverse=*/false))
      if (dist[w] + 1 == dist[v]) {
        v = w;
        break;
      }
    path.push_back(v);
  }
  return path;
}

std::optional<std::size_t> hm_bound(const Digraph& g) {
  std::size_t bound = 1;
  for (const auto& [a, b] : g.edges()) {
    auto back = find_path(g, b, a, PathMode::kDirected);
    if (!back) return std::nullopt;
    bound = std::max(bound, back->size());  // path length + 1
  }
  return bound;
}

ChainReport verify_chain(const Digraph& g) {
  ChainReport r;
  r.extreme = equivalence(g, Connectivity::kExtreme);
  r.radical = radical(g).result;
  r.strong = equivalence(g, Connectivity::kStrong);
  r.weak = equivalence(g, Connectivity::kWeak);
  r.extreme_in_radical = r.extreme.refines(r.radical);
  r.radical_in_strong = r.radical.refines(r.strong);
  r.strong_in_weak = r.strong.refines(r.weak);
  r.radical_quotient_antisymmetric = is_antisymmetric(quotient(g, r.radical));
  return r;
}

}  // namespace digcon
