#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "digcon/algebra.hpp"
#include "digcon/conditions.hpp"
#include "digcon/connectivity.hpp"
#include "digcon/gallery.hpp"
#include "digcon/homomorphism.hpp"
#include "digcon/paper_check.hpp"
#include "digcon/polymorph.hpp"

namespace digcon::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "@D", "@C5", "@fig3" or a file.
Digraph load_digraph(const std::string& source) {
  if (!source.empty() && source[0] == '@') return gallery(source.substr(1));
  try {
    return parse_digraph(read_file(source));
  } catch (const ParseError& e) {
    throw Error(source + ": " + e.what());
  }
}

// "@sl2", "@z2aff", "@z2aff^3" or a file.
FiniteAlgebra load_algebra(const std::string& source) {
  if (!source.empty() && source[0] == '@') {
    std::string name = source.substr(1);
    if (auto caret = name.find('^'); caret != std::string::npos) {
      std::size_t m = std::stoul(name.substr(caret + 1));
      return power_algebra(bundled_algebra(name.substr(0, caret)), m);
    }
    return bundled_algebra(name);
  }
  try {
    return parse_algebra(read_file(source));
  } catch (const ParseError& e) {
    throw Error(source + ": " + e.what());
  }
}

TermTable load_term(const std::string& path) {
  try {
    return parse_term_table(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw Error("bad element list '" + text + "'");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

std::string join(std::span<const Vertex> vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
  return out;
}

// Key/value output.  Machine mode writes `key=value` lines; human mode
// writes `key: value` and may add free text.
class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  bool machine() const { return machine_; }

  void kv(const std::string& key, const std::string& value) {
    out_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }
  void kv(const std::string& key, std::uint64_t value) { kv(key, std::to_string(value)); }
  void flag(const std::string& key, bool value) { kv(key, value ? "true" : "false"); }

  void text(const std::string& s) {
    if (!machine_) out_ << s;
  }

  void digraph(const Digraph& g) {
    if (!machine_) {
      out_ << to_text(g);
      return;
    }
    kv("vertices", g.size());
    kv("edge_count", g.edge_count());
    std::string edges;
    for (const auto& [u, v] : g.edges())
      edges += (edges.empty() ? "" : " ") + std::to_string(u) + ">" + std::to_string(v);
    kv("edges", edges);
  }

  void table(const std::string& key, const TermTable& t) {
    if (!machine_) {
      out_ << to_text(t);
      return;
    }
    std::string values;
    for (Element v : t.values()) values += (values.empty() ? "" : " ") + std::to_string(v);
    kv(key, "arity:" + std::to_string(t.arity()) + " size:" + std::to_string(t.size()) + " " + values);
  }

 private:
  std::ostream& out_;
  bool machine_;
};

int truth(bool b) { return b ? kOk : kNegative; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity equivalences, polymorphisms and identity searches for digraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  std::optional<std::uint64_t> budget;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--budget", budget, "Search and closure budget")->check(CLI::PositiveNumber);

  std::function<int(Report&)> action;
  auto expansions = [&] { return budget.value_or(kDefaultBudget); };
  auto elements = [&] { return budget.value_or(kDefaultFreeAlgebraBudget); };
  auto terms_budget = [&] { return budget.value_or(kDefaultTermBudget); };

  // Shared option holders; each subcommand binds the ones it needs.
  std::string input, algebra_src, seed_src, other_src, partition_text, kind_text = "all";
  std::string term_src, witness_src, endpoint_text = "y", mode_text = "symmetric";
  std::string placement_text, elements_text, only, fig3_src;
  std::size_t arity = 1, k = 1, max_n = kDefaultMaxChain;
  std::optional<std::uint64_t> limit;
  Vertex from = 0, to = 0;
  bool idempotent = false, injective = false, trace = false, count_only = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Digraph file or @gallery name")->required();
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("-a,--algebra", algebra_src, "Algebra file or @bundled name")->required();
  };

  {
    auto* sub = app.add_subcommand("components", "Connectivity partitions");
    add_input(sub);
    sub->add_option("--kind", kind_text, "weak, strong, extreme, radical or all");
    sub->add_flag("--trace", trace, "Show the radical stages");
    sub->callback([&] {
      action = [&](Report& r) {
        const Digraph g = load_digraph(input);
        std::vector<Connectivity> kinds;
        if (kind_text == "all")
          kinds = {Connectivity::kWeak, Connectivity::kStrong, Connectivity::kExtreme,
                   Connectivity::kRadical};
        else
          kinds = {parse_connectivity(kind_text)};
        for (auto kind : kinds) {
          const std::string p = equivalence(g, kind).to_string();
          if (kinds.size() == 1 && !r.machine())
            r.text(p + "\n");
          else
            r.kv(to_string(kind), p);
        }
        if (trace) {
          const auto t = radical(g);
          for (std::size_t i = 0; i < t.stages.size(); ++i)
            r.kv("stage" + std::to_string(i), t.stages[i].to_string());
        }
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("quotient", "Quotient digraph");
    add_input(sub);
    sub->add_option("--kind", kind_text, "Connectivity kind to factor by");
    sub->add_option("--partition", partition_text, "Explicit partition, e.g. {{0,1},{2}}");
    sub->callback([&] {
      action = [&](Report& r) {
        const Digraph g = load_digraph(input);
        const Partition p = !partition_text.empty()
                                ? Partition::parse(partition_text)
                                : equivalence(g, parse_connectivity(kind_text == "all" ? "radical" : kind_text));
        r.digraph(quotient(g, p));
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("power", "Direct power of a digraph");
    add_input(sub);
    sub->add_option("-k", k, "Exponent")->required()->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&](Report& r) {
        r.digraph(power(load_digraph(input), k, expansions()));
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("homs", "Homomorphisms H -> G");
    sub->add_option("--from", other_src, "Source digraph H")->required();
    add_input(sub);
    sub->add_flag("--injective", injective);
    sub->add_option("--limit", limit, "Stop after this many");
    sub->add_flag("--count", count_only, "Only print the count");
    sub->callback([&] {
      action = [&](Report& r) {
        const Digraph h = load_digraph(other_src), g = load_digraph(input);
        HomSearchOptions o;
        o.injective = injective;
        o.budget = expansions();
        if (limit) o.max_results = *limit;
        std::uint64_t count = 0;
        const auto stats = search_homomorphisms(h, g, o, [&](std::span<const Vertex> image) {
          ++count;
          if (!count_only) r.kv("hom", join(image));
          return true;
        });
        r.kv("count", count);
        if (stats.budget_exhausted) {
          r.kv("truncated", "true");
          return kBudget;
        }
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("retract", "Is H a retract of G?");
    sub->add_option("--sub", other_src, "Candidate retract H")->required();
    add_input(sub);
    sub->callback([&] {
      action = [&](Report& r) {
        const auto result = is_retract(load_digraph(other_src), load_digraph(input), expansions());
        r.flag("retract", result.has_value());
        if (result) {
          r.kv("coretraction", join(result->coretraction.image));
          r.kv("retraction", join(result->retraction.image));
        }
        return truth(result.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("hequiv", "H-equivalence of G");
    add_input(sub);
    sub->add_option("--with", other_src, "The digraph H")->required();
    sub->callback([&] {
      action = [&](Report& r) {
        const Partition p = h_equivalence(load_digraph(input), load_digraph(other_src), expansions());
        if (r.machine()) r.kv("h_equivalence", p.to_string());
        else r.text(p.to_string() + "\n");
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("path", "Shortest path between two vertices");
    add_input(sub);
    sub->add_option("--from", from)->required();
    sub->add_option("--to", to)->required();
    sub->add_option("--mode", mode_text, "oriented, directed or symmetric");
    sub->callback([&] {
      action = [&](Report& r) {
        const Digraph g = load_digraph(input);
        if (from >= g.size() || to >= g.size()) throw Error("vertex out of range");
        const auto p = find_path(g, from, to, parse_path_mode(mode_text));
        r.kv("path", p ? join(*p) : "none");
        if (p) r.kv("length", p->size() - 1);
        return truth(p.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("hmbound", "Return-path bound over all edges");
    add_input(sub);
    sub->callback([&] {
      action = [&](Report& r) {
        const auto b = hm_bound(load_digraph(input));
        r.kv("hm_bound", b ? std::to_string(*b) : "none");
        return truth(b.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("closure", "Subuniverse generated by elements");
    add_algebra(sub);
    sub->add_option("--seed", elements_text, "Comma-separated elements")->required();
    sub->callback([&] {
      action = [&](Report& r) {
        const auto a = load_algebra(algebra_src);
        const auto seed = parse_elements(elements_text);
        const auto c = subuniverse_closure(a, seed);
        r.kv("closure", "{" + join(c, ",") + "}");
        r.kv("size", c.size());
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("compatible", "Is the digraph compatible with the algebra?");
    add_input(sub);
    add_algebra(sub);
    sub->callback([&] {
      action = [&](Report& r) {
        const bool ok = is_compatible(load_digraph(input), load_algebra(algebra_src));
        r.flag("compatible", ok);
        return truth(ok);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("congruence", "Is the partition a congruence?");
    add_algebra(sub);
    sub->add_option("--partition", partition_text)->required();
    sub->callback([&] {
      action = [&](Report& r) {
        const bool ok = is_congruence(load_algebra(algebra_src), Partition::parse(partition_text));
        r.flag("congruence", ok);
        return truth(ok);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("generate", "Digraph generated by a placed seed");
    add_algebra(sub);
    sub->add_option("--seed", seed_src, "Seed digraph")->required();
    sub->add_option("--placement", placement_text, "Element of each seed vertex (default identity)");
    sub->callback([&] {
      action = [&](Report& r) {
        const auto a = load_algebra(algebra_src);
        const Digraph seed = load_digraph(seed_src);
        std::vector<Element> placement;
        if (placement_text.empty())
          for (Element v = 0; v < seed.size(); ++v) placement.push_back(v);
        else
          placement = parse_elements(placement_text);
        r.digraph(generated_digraph(a, seed, placement));
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("free", "Free algebra, or the digraph freely generated by a seed");
    add_algebra(sub);
    sub->add_option("--seed", seed_src, "Seed digraph");
    sub->add_option("-k,--generators", k, "Generators when no seed is given")
        ->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&](Report& r) {
        const auto a = load_algebra(algebra_src);
        if (seed_src.empty()) {
          const auto fr = free_algebra(a, k, elements());
          r.kv("elements", fr.algebra.size());
          r.kv("generators", join(fr.generators));
          if (!r.machine()) r.text(to_text(fr.algebra));
          return kOk;
        }
        const auto fd = freely_generated_digraph(a, load_digraph(seed_src), elements());
        r.kv("generators", join(fd.generators));
        r.digraph(fd.digraph);
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("terms", "Term operations of an algebra");
    add_algebra(sub);
    sub->add_option("-k,--arity", k)->required()->check(CLI::PositiveNumber);
    sub->add_flag("--idempotent", idempotent);
    sub->add_flag("--count", count_only, "Only print the count");
    sub->callback([&] {
      action = [&](Report& r) {
        const auto tables = term_tables(load_algebra(algebra_src), k, idempotent, terms_budget());
        r.kv("count", tables.size());
        if (!count_only)
          for (const auto& t : tables) r.table("term", t);
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("polymorphisms", "Polymorphisms of a digraph");
    add_input(sub);
    sub->add_option("--arity", arity)->check(CLI::PositiveNumber);
    sub->add_flag("--idempotent", idempotent);
    sub->add_option("--limit", limit, "Stop after this many");
    sub->add_flag("--count", count_only, "Only print the count");
    sub->callback([&] {
      action = [&](Report& r) {
        PolymorphismQuery q{load_digraph(input), arity, idempotent};
        q.budget = expansions();
        if (limit) q.limit = *limit;
        std::uint64_t count = 0;
        const auto stats = for_each_polymorphism(q, [&](const TermTable& t) {
          ++count;
          if (count_only) return true;
          r.table("table", t);
          const auto p = is_projection(t);
          r.kv("projection", p ? std::to_string(*p) : "none");
          return true;
        });
        r.kv("count", count);
        if (stats.budget_exhausted) {
          r.kv("truncated", "true");
          return kBudget;
        }
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("major", "Major subsets of idempotent polymorphisms over {0,1,2}");
    sub->add_option("-i,--input", input, "Digraph whose polymorphisms are analysed");
    sub->add_option("--term", term_src, "Analyse one term table file instead");
    sub->add_option("--arity", arity)->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&](Report& r) {
        std::vector<TermTable> tables;
        if (!term_src.empty()) {
          tables.push_back(load_term(term_src));
        } else {
          if (input.empty()) throw Error("major needs --input or --term");
          PolymorphismQuery q{load_digraph(input), arity, true};
          q.budget = expansions();
          auto result = find_polymorphisms(q);
          if (result.truncated) throw BudgetExceeded("polymorphism search", result.tables.size());
          tables = std::move(result.tables);
        }
        bool all = true;
        for (const auto& t : tables) {
          const MajorFamily m = major_subsets(t);
          const bool filter = filter_check(m);
          const bool meet = filter && meet_restriction_check(t, m);
          all = all && filter && meet;
          r.table("table", t);
          r.kv("major", to_string(m));
          r.kv("least", m.least ? subset_to_string(*m.least, m.arity) : "none");
          r.flag("filter", filter);
          r.flag("meet_restriction", meet);
        }
        r.kv("count", tables.size());
        return truth(all);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("olsak", "Check or search 6-ary Olsak terms");
    sub->add_option("-a,--algebra", algebra_src, "Search the term operations of an algebra");
    sub->add_option("--term", term_src, "Check one 6-ary table");
    sub->callback([&] {
      action = [&](Report& r) {
        if (!term_src.empty()) {
          const bool ok = olsak_check(load_term(term_src));
          r.flag("olsak", ok);
          return truth(ok);
        }
        if (algebra_src.empty()) throw Error("olsak needs --algebra or --term");
        const auto t = olsak_search(load_algebra(algebra_src), terms_budget());
        r.flag("found", t.has_value());
        if (t) r.table("term", *t);
        return truth(t.has_value());
      };
    });
  }
  {
    auto* sub = app.add_subcommand("identity-check", "Check a witness for the chain identities");
    add_algebra(sub);
    sub->add_option("--witness", witness_src)->required();
    sub->callback([&] {
      action = [&](Report& r) {
        const auto w = parse_witness(read_file(witness_src));
        const bool ok = check_identity_system(load_algebra(algebra_src), w);
        r.flag("holds", ok);
        return truth(ok);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("identity-search", "Search a witness for the chain identities");
    add_algebra(sub);
    sub->add_option("--endpoint", endpoint_text, "y or z")->check(CLI::IsMember({"y", "z"}));
    sub->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&](Report& r) {
        const auto w = search_identity_witness(load_algebra(algebra_src),
                                               parse_endpoint(endpoint_text), max_n, elements());
        r.flag("found", w.has_value());
        if (!w) return kNegative;
        r.kv("n", w->n);
        r.kv("path", join(w->path));
        if (r.machine()) {
          for (std::size_t i = 0; i < w->n; ++i) r.table("t" + std::to_string(i + 1), w->t_terms[i]);
          for (std::size_t i = 0; i < w->n; ++i) r.table("s" + std::to_string(i + 1), w->s_terms[i]);
        } else {
          r.text(to_text(*w));
        }
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("rho", "The digraph x -> u <-> y");
    add_input(sub);
    sub->callback([&] {
      action = [&](Report& r) {
        r.digraph(rho_digraph(load_digraph(input)));
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("collapse", "Which connectivity equivalences coincide");
    add_input(sub);
    sub->callback([&] {
      action = [&](Report& r) {
        const auto c = collapse_report(load_digraph(input));
        r.flag("weak=strong", c.weak_strong);
        r.flag("weak=radical", c.weak_radical);
        r.flag("weak=extreme", c.weak_extreme);
        r.flag("strong=radical", c.strong_radical);
        r.flag("strong=extreme", c.strong_extreme);
        r.flag("radical=extreme", c.radical_extreme);
        return kOk;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("paper-check", "Run the acceptance suite");
    sub->add_option("--only", only, "Group name or criterion number");
    sub->add_option("--fig3", fig3_src, "Replacement seven-vertex regression digraph");
    sub->callback([&] {
      action = [&](Report& r) {
        PaperCheckOptions o;
        if (!only.empty()) o.only = only;
        if (!fig3_src.empty()) o.fig3 = load_digraph(fig3_src);
        bool all = true;
        for (const auto& c : run_paper_check(o)) {
          all = all && c.pass;
          if (r.machine())
            r.kv("criterion" + std::to_string(c.id), c.pass ? "PASS" : "FAIL");
          else
            r.text(format_result(c) + "\n");
        }
        return truth(all);
      };
    });
  }

  std::vector<const char*> argv{"digcon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Report report(out, format == "machine");
  try {
    return action(report);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const Contradiction& e) {
    err << "contradiction: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace digcon::cli
