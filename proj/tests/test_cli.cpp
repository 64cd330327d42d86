#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "regram/graph.hpp"
#include "regram/graph_io.hpp"

using namespace regram;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stdout captured and stderr discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(REGRAM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "regram_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("realize") {
  const auto ok = cli("realize --left 2,1,1 --right 2,2,0");
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("# left=3 right=3\n", 0) == 0);
  const auto bad = cli("realize --left 9,9,9,9,9,9,4,4,4 --right 9,9,9,9,9,9,4,4,4");
  CHECK(bad.code == 1);
  CHECK(bad.out == "INFEASIBLE s=5\n");
  CHECK(cli("realize --left 3,1 --right x").code == 64);
}

TEST_CASE("usage errors") {
  CHECK(cli("").code == 64);
  CHECK(cli("construct").code == 64);
  CHECK(cli("bogus").code == 64);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("color") {
  const fs::path in = scratch() / "c9.txt";
  write_text_file(in.string(), to_edge_list(cycle_graph(9)));
  const auto r = cli("color --in " + in.string() + " --colors 3");
  CHECK(r.code == 0);
  std::vector<int> count(3, 0);
  std::istringstream lines(r.out);
  int v = 0;
  int c = 0;
  while (lines >> v >> c) {
    ++count[c];
  }
  CHECK(count == std::vector<int>{3, 3, 3});
  CHECK(cli("color --in " + in.string() + " --colors 2").code == 64);
  CHECK(cli("color --in /nonexistent/graph --colors 3").code == 3);
}

TEST_CASE("process with stats") {
  const fs::path csv = scratch() / "stats.csv";
  const auto r = cli("process --n 30 --seed 4 --format g6 --stats " + csv.string());
  CHECK(r.code == 0);
  const Graph g = parse_graph(r.out);
  CHECK(g.order() == 30);
  CHECK(is_triangle_free(g));
  const std::string text = read_text_file(csv.string());
  CHECK(text.rfind("step,max_deg,min_deg,open_pairs\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == g.edge_count() + 1);
}

TEST_CASE("regularize, hkr and verify") {
  const fs::path in = scratch() / "pet.g6";
  const fs::path out = scratch() / "pp.g6";
  write_text_file(in.string(), to_graph6(petersen_graph()) + "\n");
  CHECK(cli("regularize --in " + in.string() + " --d 0 --format g6 --out " + out.string()).code == 0);
  CHECK(read_graph_file(out.string()) == disjoint_union(petersen_graph(), petersen_graph()));
  CHECK(cli("regularize --in " + in.string() + " --d 5").code == 64);

  const auto v = cli("verify --in " + out.string());
  CHECK(v.code == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["alpha_upper"] == 8);
  CHECK(j["r"] == 3);
  CHECK(cli("verify --in " + out.string() + " --max-ratio 0.1").code == 1);

  const fs::path p4 = scratch() / "p4.txt";
  write_text_file(p4.string(), to_edge_list(path_graph(4)));
  CHECK(cli("verify --in " + p4.string()).code == 1);

  const auto h = cli("hkr --k 25 --r 4");
  CHECK(h.code == 0);
  CHECK(regular_degree(parse_graph(h.out)) == 4);
  CHECK(cli("hkr --k 25 --r 3").code == 64);

  const fs::path garbage = scratch() / "garbage.txt";
  write_text_file(garbage.string(), "0 zz\n");
  CHECK(cli("verify --in " + garbage.string()).code == 3);
}

TEST_CASE("construct") {
  const fs::path g6 = scratch() / "g.g6";
  const fs::path cert = scratch() / "g.json";
  const auto r = cli("construct --n 41 --seed 2 --format g6 --out " + g6.string() + " --certificate " + cert.string());
  CHECK(r.code == 0);
  const Graph g = read_graph_file(g6.string());
  CHECK(g.order() == 41);
  CHECK(regular_degree(g).has_value());
  const auto j = nlohmann::json::parse(read_text_file(cert.string()));
  CHECK(j["n"] == 41);
  CHECK(j["path"] == "odd");
  CHECK(j.contains("retries_used"));

  const auto stdout_graph = cli("construct --n 41 --seed 2 --format g6");
  CHECK(stdout_graph.out == read_text_file(g6.string()));
  CHECK(cli("construct --n 8 --no-fallback").code == 0);
  CHECK(cli("construct --n 40 --out /nonexistent/dir/g.g6").code == 3);
  CHECK(cli("construct --n 40 --format xml").code == 64);
}
