#include "digcon/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace digcon {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

// Maintains arc consistency over the binary constraints "u->v in `from`
// implies f(u)->f(v) in `to`" on bitset domains.
class HomSolver {
 public:
  HomSolver(const Digraph& from, const Digraph& to, const HomSearchOptions& options,
            const HomVisitor& visit)
      : from_(from),
        to_(to),
        options_(options),
        visit_(visit),
        vars_(from.size()),
        values_(to.size()),
        words_((to.size() + kWordBits - 1) / kWordBits),
        out_bits_(values_ * words_, 0),
        in_bits_(values_ * words_, 0),
        arcs_(vars_),
        domains_(vars_ * words_, 0),
        image_(vars_, 0) {
    for (const auto& [a, b] : to.edges()) {
      out_bits_[a * words_ + b / kWordBits] |= Word{1} << (b % kWordBits);
      in_bits_[b * words_ + a / kWordBits] |= Word{1} << (a % kWordBits);
    }
    // Merge parallel constraints between the same pair of variables.
    std::vector<std::vector<std::pair<Vertex, std::uint8_t>>> raw(vars_);
    for (const auto& [u, v] : from.edges()) {
      if (u == v) continue;
      raw[u].emplace_back(v, kForward);
      raw[v].emplace_back(u, kBackward);
    }
    for (std::size_t u = 0; u < vars_; ++u) {
      std::sort(raw[u].begin(), raw[u].end());
      for (const auto& [v, dir] : raw[u]) {
        if (!arcs_[u].empty() && arcs_[u].back().other == v)
          arcs_[u].back().dir |= dir;
        else
          arcs_[u].push_back({v, dir});
      }
    }
  }

  HomSearchStats run() {
    if (!initialize()) {
      stats_.complete = true;
      return stats_;
    }
    stats_.complete = search(0);
    return stats_;
  }

 private:
  static constexpr std::uint8_t kForward = 1;   // self -> other
  static constexpr std::uint8_t kBackward = 2;  // other -> self

  struct Arc {
    Vertex other;
    std::uint8_t dir;
  };

  Word* domain(std::size_t v) { return domains_.data() + v * words_; }

  bool empty(const Word* d) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (d[w]) return false;
    return true;
  }

  bool initialize() {
    for (std::size_t v = 0; v < vars_; ++v) {
      Word* d = domain(v);
      for (std::size_t a = 0; a < values_; ++a) d[a / kWordBits] |= Word{1} << (a % kWordBits);
      if (from_.has_edge(static_cast<Vertex>(v), static_cast<Vertex>(v))) {
        for (std::size_t a = 0; a < values_; ++a)
          if (!to_.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(a)))
            d[a / kWordBits] &= ~(Word{1} << (a % kWordBits));
      }
      if (!options_.fixed.empty() && options_.fixed[v]) {
        Vertex a = *options_.fixed[v];
        bool allowed = a < values_ && ((d[a / kWordBits] >> (a % kWordBits)) & 1U);
        std::fill(d, d + words_, 0);
        if (allowed) d[a / kWordBits] |= Word{1} << (a % kWordBits);
      }
      if (empty(d)) return false;
    }
    if (options_.injective) {
      if (vars_ > values_) return false;
      // Distinct pinned vertices must stay distinct.
      std::vector<char> used(values_, 0);
      for (std::size_t v = 0; v < vars_; ++v) {
        if (options_.fixed.empty() || !options_.fixed[v]) continue;
        if (used[*options_.fixed[v]]++) return false;
      }
    }
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < vars_; ++v) queue.push_back(v);
    return propagate(queue);
  }

  // Removes values of `v` without support in the domain of `arc.other`.
  bool revise(std::size_t v, const Arc& arc, bool& changed) {
    Word* d = domain(v);
    const Word* other = domain(arc.other);
    changed = false;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = d[w];
      while (bits) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t a = w * kWordBits + bit;
        const Word* succ = out_bits_.data() + a * words_;
        const Word* pred = in_bits_.data() + a * words_;
        bool supported = false;
        for (std::size_t k = 0; k < words_ && !supported; ++k) {
          Word s = other[k];
          if (arc.dir & kForward) s &= succ[k];
          if (arc.dir & kBackward) s &= pred[k];
          supported = s != 0;
        }
        if (!supported) {
          d[w] &= ~(Word{1} << bit);
          changed = true;
        }
      }
    }
    return !empty(d);
  }

  bool propagate(std::deque<std::size_t>& queue) {
    std::vector<char> queued(vars_, 0);
    for (auto v : queue) queued[v] = 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      queued[x] = 0;
      for (const Arc& arc : arcs_[x]) {
        // Revise the neighbour against x; flip the direction to its view.
        std::uint8_t dir = static_cast<std::uint8_t>(((arc.dir & kForward) ? kBackward : 0) |
                                                     ((arc.dir & kBackward) ? kForward : 0));
        bool changed = false;
        if (!revise(arc.other, Arc{static_cast<Vertex>(x), dir}, changed)) return false;
        if (changed && !queued[arc.other]) {
          queued[arc.other] = 1;
          queue.push_back(arc.other);
        }
      }
    }
    return true;
  }

  // Returns false when the search must stop (visitor, limit or budget).
  bool search(std::size_t v) {
    if (v == vars_) {
      for (std::size_t u = 0; u < vars_; ++u) {
        const Word* d = domain(u);
        for (std::size_t w = 0; w < words_; ++w)
          if (d[w]) {
            image_[u] = static_cast<Vertex>(w * kWordBits + std::countr_zero(d[w]));
            break;
          }
      }
      ++stats_.solutions;
      if (!visit_(image_)) return false;
      return stats_.solutions < options_.max_results;
    }
    const std::vector<Word> saved = domains_;
    const Word* candidates = saved.data() + v * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = candidates[w];
      while (bits) {
        std::size_t a = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (stats_.expansions >= options_.budget) {
          stats_.budget_exhausted = true;
          return false;
        }
        ++stats_.expansions;
        Word* d = domain(v);
        std::fill(d, d + words_, 0);
        d[a / kWordBits] = Word{1} << (a % kWordBits);
        std::deque<std::size_t> queue{v};
        bool ok = true;
        if (options_.injective) {
          for (std::size_t u = v + 1; u < vars_ && ok; ++u) {
            Word* du = domain(u);
            Word mask = Word{1} << (a % kWordBits);
            if (du[a / kWordBits] & mask) {
              du[a / kWordBits] &= ~mask;
              ok = !empty(du);
              queue.push_back(u);
            }
          }
        }
        if (ok && propagate(queue) && !search(v + 1)) return false;
        domains_ = saved;
      }
    }
    return true;
  }

  const Digraph& from_;
  const Digraph& to_;
  const HomSearchOptions& options_;
  const HomVisitor& visit_;
  std::size_t vars_;
  std::size_t values_;
  std::size_t words_;
  std::vector<Word> out_bits_;
  std::vector<Word> in_bits_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Word> domains_;
  std::vector<Vertex> image_;
  HomSearchStats stats_;
};

}  // namespace

HomSearchStats search_homomorphisms(const Digraph& from, const Digraph& to,
                                    const HomSearchOptions& options,
                                    const HomVisitor& visit) {
  if (!options.fixed.empty() && options.fixed.size() != from.size())
    throw Error("fixed map must have one entry per source vertex");
  if (options.budget == 0) throw Error("search budget must be positive");
  return HomSolver(from, to, options, visit).run();
}

std::vector<VertexMap> enumerate_homomorphisms(const Digraph& from, const Digraph& to,
                                               const HomSearchOptions& options) {
  std::vector<VertexMap> out;
  auto stats = search_homomorphisms(from, to, options, [&](std::span<const Vertex> image) {
    out.push_back(VertexMap{to.size(), {image.begin(), image.end()}});
    return true;
  });
  if (stats.budget_exhausted)
    throw BudgetExceeded("homomorphisms " + from.name() + " -> " + to.name(), out.size());
  return out;
}

std::optional<Retraction> is_retract(const Digraph& h, const Digraph& g,
                                     std::uint64_t budget) {
  std::optional<Retraction> found;
  std::uint64_t spent = 0;
  bool exhausted = false;

  HomSearchOptions outer;
  outer.injective = true;
  outer.budget = budget;
  auto stats = search_homomorphisms(h, g, outer, [&](std::span<const Vertex> beta) {
    HomSearchOptions inner;
    inner.fixed.assign(g.size(), std::nullopt);
    for (Vertex v = 0; v < h.size(); ++v) inner.fixed[beta[v]] = v;
    inner.max_results = 1;
    if (spent >= budget) {
      exhausted = true;
      return false;
    }
    inner.budget = budget - spent;
    std::optional<std::vector<Vertex>> alpha;
    auto s = search_homomorphisms(g, h, inner, [&](std::span<const Vertex> image) {
      alpha.emplace(image.begin(), image.end());
      return false;
    });
    spent += s.expansions;
    if (s.budget_exhausted) {
      exhausted = true;
      return false;
    }
    if (alpha) {
      found = Retraction{VertexMap{g.size(), {beta.begin(), beta.end()}},
                         VertexMap{h.size(), std::move(*alpha)}};
      return false;
    }
    return true;
  });
  if (!found && (exhausted || stats.budget_exhausted))
    throw BudgetExceeded("retract search " + h.name() + " -> " + g.name(), 0);
  return found;
}

std::optional<VertexMap> find_isomorphism(const Digraph& a, const Digraph& b,
                                          std::uint64_t budget) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  // An injective homomorphism between equal finite vertex sets is a
  // bijection; with equal edge counts it maps edges onto edges.
  HomSearchOptions options;
  options.injective = true;
  options.budget = budget;
  options.max_results = 1;
  std::optional<VertexMap> found;
  auto stats = search_homomorphisms(a, b, options, [&](std::span<const Vertex> image) {
    found = VertexMap{b.size(), {image.begin(), image.end()}};
    return false;
  });
  if (!found && stats.budget_exhausted)
    throw BudgetExceeded("isomorphism " + a.name() + " ~ " + b.name(), 0);
  return found;
}

}  // namespace digcon
