#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "genmat/graph_io.hpp"

using namespace genmat;

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the command-line tool with the given arguments and captures the combined
// stdout and stderr text together with the exit code.
CliResult run_cli(const std::string& args) {
  const std::string command = std::string(GENMAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "genmat_cli_scratch";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string make_family_file(const std::string& name, const std::string& family_args) {
  const auto path = (scratch_dir() / name).string();
  const CliResult made = run_cli("family " + family_args + " --out " + path);
  REQUIRE(made.exit_code == 0);
  return path;
}

}  // namespace

TEST_CASE("rank command reports matrix rank and closed formulas") {
  const std::string k4 = make_family_file("k4.txt", "complete 4");

  const CliResult text = run_cli("rank " + k4 + " --kind hyperconnectivity -d 2");
  REQUIRE(text.exit_code == 0);
  CHECK(text.output.find("rank: 5") != std::string::npos);
  CHECK(text.output.find("formula: 5") != std::string::npos);
  CHECK(text.output.find("rigid: true") != std::string::npos);

  const CliResult parsed = run_cli("rank " + k4 + " --kind hyperconnectivity -d 2 --format json");
  REQUIRE(parsed.exit_code == 0);
  const json report = json::parse(parsed.output);
  CHECK(report.at("command") == "rank");
  CHECK(report.at("kind") == "hyperconnectivity(2)");
  CHECK(report.at("vertices") == 4);
  CHECK(report.at("edges") == 6);
  CHECK(report.at("rank") == 5);
  CHECK(report.at("formula") == 5);
  CHECK(report.at("rigid") == true);

  const std::string k33 = make_family_file("k33.txt", "complete-bipartite 3 3");
  const CliResult birigid = run_cli("rank " + k33 + " --ab 1 2 --format json");
  REQUIRE(birigid.exit_code == 0);
  const json pair_report = json::parse(birigid.output);
  CHECK(pair_report.at("kind") == "birigidity(1,2)");
  CHECK(pair_report.at("classes") == json::array({3, 3}));
  CHECK(pair_report.at("rank") == 7);
  CHECK(pair_report.at("formula") == 7);

  // Rigidity has no closed-form rank, so the formula field stays null.
  const CliResult rigidity = run_cli("rank " + k4 + " --kind rigidity -d 2 --format json");
  REQUIRE(rigidity.exit_code == 0);
  const json rigidity_report = json::parse(rigidity.output);
  CHECK(rigidity_report.at("formula").is_null());
  CHECK(rigidity_report.at("rank") == 5);
}

TEST_CASE("bad inputs exit with the input error code") {
  const CliResult missing = run_cli("rank /nonexistent/graph.txt");
  CHECK(missing.exit_code == 3);

  const std::string k4 = make_family_file("k4.txt", "complete 4");
  const CliResult bad_kind = run_cli("rank " + k4 + " --kind nonsense");
  CHECK(bad_kind.exit_code == 3);
  CHECK(bad_kind.output.find("unknown matroid kind") != std::string::npos);

  const std::string loops = write_scratch("loops.txt", "semisimple 3\n0 0\n0 1\n1 2\n");
  const CliResult loop_kind = run_cli("rank " + loops + " --kind hyperconnectivity -d 2");
  CHECK(loop_kind.exit_code == 3);

  const CliResult bad_family = run_cli("family no-such-family 3");
  CHECK(bad_family.exit_code == 3);

  const std::string garbled = write_scratch("garbled.txt", "semisimple x\n");
  const CliResult parse_fail = run_cli("rank " + garbled);
  CHECK(parse_fail.exit_code == 3);
}

TEST_CASE("outputs are byte-identical across runs with the same seed") {
  const std::string k66 = make_family_file("k66.txt", "complete-bipartite 6 6");
  const std::string args = "seed " + k66 + " --strategy sample --kind birigidity -d 2 --prob 0.3 --seed 4 --format json";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.output == second.output);

  const json report = json::parse(first.output);
  CHECK(report.at("strategy") == "sample");
  CHECK(report.at("certificate").at("size") ==
        report.at("certificate").at("seed_vertices").size());
}

TEST_CASE("family output parses back as a graph document") {
  const std::string path = make_family_file("critical.txt", "critical 3 4");
  const GraphDocument doc = parse_graph_text(read_file(path));
  CHECK(doc.name == "critical");
  CHECK(doc.params == std::vector<long long>{3, 4});
  REQUIRE(std::holds_alternative<BipartiteGraph>(doc.graph));
  const auto& graph = std::get<BipartiteGraph>(doc.graph);
  CHECK(graph.left_count() == 9);
  CHECK(graph.right_count() == 6);

  const CliResult json_run = run_cli("family circulant-bipartite 5 2 --format json");
  REQUIRE(json_run.exit_code == 0);
  const json report = json::parse(json_run.output);
  CHECK(report.at("kind") == "bipartite");
  CHECK(report.at("sizes") == json::array({5, 5}));
  CHECK(report.at("edges").size() == 10);
}

TEST_CASE("closure emits a graph file loadable by other commands") {
  const std::string path = write_scratch("bpath.txt", "bipartite 2 2\n0 2\n1 2\n1 3\n");
  const std::string out = (scratch_dir() / "bpath_closure.txt").string();
  const CliResult closed = run_cli("closure " + path + " --ab 1 1 --out " + out);
  REQUIRE(closed.exit_code == 0);

  const GraphDocument doc = parse_graph_text(read_file(out));
  REQUIRE(std::holds_alternative<BipartiteGraph>(doc.graph));
  CHECK(std::get<BipartiteGraph>(doc.graph).edge_count() == 4);

  const CliResult reread = run_cli("rank " + out + " --ab 1 1");
  REQUIRE(reread.exit_code == 0);
  CHECK(reread.output.find("rank: 3") != std::string::npos);
}

TEST_CASE("certify writes a sparse subgraph in graph file format") {
  const std::string k6 = make_family_file("k6.txt", "complete 6");
  const std::string out = (scratch_dir() / "k6_cert.txt").string();
  const CliResult cert = run_cli("certify " + k6 + " -k 3 --out " + out);
  REQUIRE(cert.exit_code == 0);

  const GraphDocument doc = parse_graph_text(read_file(out));
  CHECK(doc.name == "sparse-certificate");
  REQUIRE(doc.params.size() == 2);
  CHECK(doc.params[0] == 3);
  REQUIRE(std::holds_alternative<SemisimpleGraph>(doc.graph));
  const auto& graph = std::get<SemisimpleGraph>(doc.graph);
  CHECK(graph.edge_count() == 12);
  CHECK(doc.params[1] == 12);

  const CliResult json_run = run_cli("certify " + k6 + " -k 3 --format json");
  REQUIRE(json_run.exit_code == 0);
  const json report = json::parse(json_run.output);
  CHECK(report.at("edge_count") == 12);
  CHECK(report.at("edges").size() == 12);
}

TEST_CASE("connectivity command reports cuts, covers, and separators") {
  const std::string critical = make_family_file("critical.txt", "critical 3 4");
  const CliResult run = run_cli("connectivity " + critical + " -k 3 --format json");
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.output);
  CHECK(report.at("kappa") == 3);
  CHECK(report.at("tau") == 6);
  CHECK(report.at("critically_k_connected") == true);
  CHECK(report.at("k_biconnected") == false);
  CHECK(report.at("witness") == json::array({0, 9, 10}));
  CHECK(report.at("critically_k_biconnected") == false);

  const std::string small = make_family_file("critical32.txt", "critical 3 2");
  const CliResult seps = run_cli("connectivity " + small + " -k 3 --separators --format json");
  REQUIRE(seps.exit_code == 0);
  const json sep_report = json::parse(seps.output);
  const json& list = sep_report.at("essential_separators");
  REQUIRE(list.size() == 4);
  CHECK(list[0].at("separator") == json::array({0, 1, 2}));
  CHECK(list[0].at("side_counts") == json::array({3, 0}));
  CHECK(list[2].at("separator") == json::array({5, 6, 7}));
  CHECK(list[2].at("components").size() == 3);
}

TEST_CASE("seed command covers chain, sample, and biconnected strategies") {
  const std::string k66 = make_family_file("k66.txt", "complete-bipartite 6 6");

  const CliResult chain = run_cli("seed " + k66 + " --strategy chain --kind birigidity -d 2 --x0 0,1,6,7 --format json");
  REQUIRE(chain.exit_code == 0);
  const json chain_report = json::parse(chain.output);
  CHECK(chain_report.at("certificate").at("seed_vertices") == json::array({0, 1, 6, 7}));

  const CliResult sample = run_cli("seed " + k66 + " --strategy sample --kind birigidity -d 2 --prob 0.3 --seed 4");
  REQUIRE(sample.exit_code == 0);
  CHECK(sample.output.find("certificate:") != std::string::npos);

  const CliResult success = run_cli("seed " + k66 + " --strategy biconnected --kind birigidity -d 2 -k 2 --seed 0");
  REQUIRE(success.exit_code == 0);
  CHECK(success.output.find("certificate:") != std::string::npos);

  const std::string path = write_scratch("bpath.txt", "bipartite 2 2\n0 2\n1 2\n1 3\n");
  const CliResult failure = run_cli("seed " + path + " --strategy biconnected --kind birigidity -d 2 -k 2 --seed 0");
  CHECK(failure.exit_code == 4);
  CHECK(failure.output.find("failure: vertex 3 has fewer than 2 neighbours in the cover") != std::string::npos);
}

TEST_CASE("check command classifies independence and closure") {
  const std::string k33 = make_family_file("k33.txt", "complete-bipartite 3 3");
  const CliResult run = run_cli("check " + k33 + " --ab 1 2 --format json");
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.output);
  CHECK(report.at("independent") == false);
  CHECK(report.at("rigid") == true);
  CHECK(report.at("closed") == true);
}

TEST_CASE("experiment sweeps exit with verdict-matching codes") {
  const CliResult tau = run_cli("experiment --sweep tau-bound --kmin 2 --kmax 2 --pmin 2 --pmax 2 --format json");
  REQUIRE(tau.exit_code == 0);
  const json tau_report = json::parse(tau.output);
  CHECK(tau_report.at("verdict") == "ok");
  REQUIRE(tau_report.at("instances").size() == 1);
  CHECK(tau_report.at("instances")[0].at("bipartite").at("bound_holds") == true);
  CHECK(tau_report.at("instances")[0].at("general").at("bound_holds") == true);

  const CliResult completion = run_cli("experiment --sweep completion-rank -d 2 --nmin 6 --nmax 6 --count 2 --seed 5 --format json");
  CHECK(completion.exit_code == 4);
  const json completion_report = json::parse(completion.output);
  CHECK(completion_report.at("verdict") == "exploratory");

  const CliResult bad_sweep = run_cli("experiment --sweep no-such-sweep");
  CHECK(bad_sweep.exit_code == 3);
}
