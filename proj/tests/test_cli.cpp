#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "digcon/conditions.hpp"
#include "digcon/digraph.hpp"
#include "digcon/gallery.hpp"
#include "digcon/homomorphism.hpp"

using digcon::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("digcon_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("components") {
  auto r = call({"components", "--kind", "radical", "-i", "@D"});
  CHECK(r.code == 0);
  CHECK(r.out == "{{0,1,2}}\n");

  const std::string d = temp_file("D.dg", digcon::to_text(digcon::digraph_d()));
  r = call({"components", "--kind", "extreme", "-i", d});
  CHECK(r.out == "{{0,1},{2}}\n");

  r = call({"--format", "machine", "components", "-i", "@K"});
  CHECK(r.out == "weak={{0,1,2,3}}\nstrong={{0,1,2,3}}\nextreme={{0,1},{2,3}}\nradical={{0,1,2,3}}\n");
  r = call({"components", "-i", "@K", "--format", "machine", "--kind", "weak"});
  CHECK(r.out == "weak={{0,1,2,3}}\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"components", "-i", "/no/such/file"}).code == 2);
  CHECK(call({"components", "-i", "@D", "--kind", "sideways"}).code == 2);
  const std::string broken = temp_file("broken.dg", "digraph b\nvertices 2\nedges\n0 7\nend\n");
  auto r = call({"components", "-i", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(call({"path", "-i", "@D", "--from", "0", "--to", "2", "--mode", "symmetric"}).code == 1);
  CHECK(call({"path", "-i", "@D", "--from", "0", "--to", "2", "--mode", "directed"}).code == 0);
  CHECK(call({"--budget", "3", "polymorphisms", "-i", "@D", "--arity", "3"}).code == 3);
  CHECK(call({"--budget", "5", "free", "-a", "@chain3meet", "-k", "4"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("free digraph of the 3-cycle over semilattices") {
  const std::string sl = temp_file("sl2.alg", "algebra sl2\nsize 2\nop meet 2\ntable 0 0 0 1\nend\n");
  const std::string c3 = temp_file("c3.dg", digcon::to_text(digcon::gallery("C3")));
  auto r = call({"free", "--algebra", sl, "--seed", c3});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("digraph");
  REQUIRE(pos != std::string::npos);
  const digcon::Digraph g = digcon::parse_digraph(r.out.substr(pos));
  CHECK(g.size() == 7);
  CHECK(digcon::is_isomorphic(g, digcon::gallery("fig3")));
}

TEST_CASE("polymorphisms of K") {
  auto r = call({"--format", "machine", "polymorphisms", "-i", "@K", "--arity", "2", "--idempotent"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count=2") != std::string::npos);
  CHECK(r.out.find("projection=1") != std::string::npos);
  CHECK(r.out.find("projection=2") != std::string::npos);
  CHECK(r.out.find("projection=none") == std::string::npos);
}

TEST_CASE("machine output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "machine", "identity-search", "-a", "@z2aff"},
      {"--format", "machine", "terms", "-a", "@sl2", "-k", "3"},
      {"--format", "machine", "homs", "--from", "@N", "-i", "@D"},
      {"--format", "machine", "free", "-a", "@z2aff", "--seed", "@D"},
  };
  for (const auto& c : commands) {
    const auto a = call(c), b = call(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("other commands") {
  CHECK(call({"compatible", "-i", "@D", "-a", "@chain3meet"}).code == 0);
  CHECK(call({"compatible", "-i", "@C3", "-a", "@chain3meet"}).code == 1);
  CHECK(call({"congruence", "-a", "@chain3meet", "--partition", "{{0,1},{2}}"}).code == 0);
  CHECK(call({"congruence", "-a", "@chain3meet", "--partition", "{{0,2},{1}}"}).code == 1);
  CHECK(call({"retract", "--sub", "@N", "-i", "@D"}).out.find("retraction: 0 1 0") != std::string::npos);
  CHECK(call({"retract", "--sub", "@D", "-i", "@fig3"}).code == 0);
  CHECK(call({"retract", "--sub", "@N", "-i", "@C3"}).code == 1);
  CHECK(call({"hequiv", "-i", "@C3", "--with", "@N"}).out == "{{0},{1},{2}}\n");
  CHECK(call({"hmbound", "-i", "@D"}).out == "hm_bound: 3\n");
  CHECK(call({"closure", "-a", "@chain3meet", "--seed", "1,2"}).out.find("closure: {1,2}") == 0);
  CHECK(call({"--format", "machine", "homs", "--from", "@N", "-i", "@D", "--count"}).out == "count=5\n");
  CHECK(call({"power", "-i", "@D", "-k", "2", "--format", "machine"}).out.find("edge_count=49") !=
        std::string::npos);
  CHECK(call({"quotient", "-i", "@D", "--kind", "extreme", "--format", "machine"}).out.find("vertices=2") !=
        std::string::npos);
  CHECK(call({"generate", "-a", "@z2aff", "--seed", "@N"}).code == 0);
  CHECK(call({"generate", "-a", "@chain3meet", "--seed", "@D", "--placement", "2,2,2"}).code == 2);
  CHECK(call({"terms", "-a", "@z2aff", "-k", "6", "--idempotent", "--count"}).out == "count: 32\n");
  CHECK(call({"major", "-i", "@D", "--arity", "2"}).code == 0);
  CHECK(call({"olsak", "-a", "@z2aff"}).code == 0);
  CHECK(call({"identity-search", "-a", "@sl2", "--endpoint", "z", "--max-n", "10"}).code == 1);
  CHECK(call({"rho", "-i", "@D", "--format", "machine"}).out.find("edge_count=8") != std::string::npos);
  CHECK(call({"collapse", "-i", "@D"}).out.find("strong=radical: true") != std::string::npos);
  CHECK(call({"free", "-a", "@sl2", "-k", "3", "--format", "machine"}).out.find("elements=7") == 0);
}

TEST_CASE("identity check round trip") {
  auto r = call({"identity-search", "-a", "@z2aff", "--endpoint", "y"});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("witness");
  REQUIRE(pos != std::string::npos);
  const std::string w = temp_file("w.txt", r.out.substr(pos));
  CHECK(call({"identity-check", "-a", "@z2aff", "--witness", w}).code == 0);
  CHECK(call({"identity-check", "-a", "@chain3meet", "--witness", w}).code == 2);
  // t1 = x4 fails t1(x,x,y,y,z,z) = x.
  auto broken = digcon::parse_witness(r.out.substr(pos));
  broken.t_terms[0] = digcon::TermTable::projection(2, 6, 3);
  const std::string bad = temp_file("w_bad.txt", digcon::to_text(broken));
  CHECK(call({"identity-check", "-a", "@z2aff", "--witness", bad}).code == 1);
}

TEST_CASE("paper-check filtering and the negative control") {
  auto r = call({"paper-check", "--only", "chain"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS 2 [chain]", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);

  // Drop one edge of the stored seven-vertex digraph.
  const auto fig3 = digcon::gallery("fig3");
  std::vector<digcon::Edge> edges(fig3.edges().begin() + 1, fig3.edges().end());
  const std::string corrupt =
      temp_file("fig3_bad.dg", digcon::to_text(digcon::Digraph("fig3", 7, edges)));
  r = call({"paper-check", "--only", "8", "--fig3", corrupt});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL 8", 0) == 0);
  CHECK(call({"paper-check", "--only", "8"}).code == 0);
  CHECK(call({"paper-check", "--only", "nothing"}).code == 2);
}
