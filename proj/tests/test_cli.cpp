#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr discarded and captures stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + ABC_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "abc_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("compute") {
  const auto r = run("compute C~");
  CHECK(r.status == 0);
  CHECK(r.out == "4.000000000000\n");
  CHECK(run("compute 'C'").status == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("build independence --n 5").status == 2);
  CHECK(run("verify nonsense --n 5").status == 2);
  CHECK(run("conjecture chromatic").status == 2);
  CHECK(run("verify independence --n 5 --shards 0").status == 2);
}

TEST_CASE("domain errors exit 3") {
  CHECK(run("formula edgeconn --n 5 --param 2").status == 3);
  CHECK(run("verify independence --n 8").status == 3);
}

TEST_CASE("build and formula") {
  const auto b = run("build independence --n 5 --param 4");
  CHECK(b.status == 0);
  CHECK(b.out.find("D") == 0);
  const auto f = run("formula bipartite --n 6");
  CHECK(f.status == 0);
  CHECK(f.out.rfind("6.000000000000", 0) == 0);
  const auto s = run("build edgeconn --n 6 --param 2 --summary");
  CHECK(s.status == 0);
  CHECK(s.out.find("7.366664164") != std::string::npos);
}

TEST_CASE("verify writes a json envelope") {
  const auto r = run("verify independence --n 5 --shards 2 --json -");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "verify");
  CHECK(j["results"].size() == 4);
  for (const auto& rep : j["results"]) CHECK(rep["unique_and_matches"] == true);
  CHECK(run("verify edge-addition --n 4").status == 0);
  CHECK(run("verify bipartite --n 5").status == 0);
}

TEST_CASE("claim grid exits 1 on violations") {
  CHECK(run("claim-grid --n-max 13").status == 1);
}

TEST_CASE("conjecture reports exit 0") {
  CHECK(run("conjecture chromatic --n 5").status == 0);
  const auto r = run("conjecture bridge --n-max 40 --json -");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"grid_check\"") != std::string::npos);
}

TEST_CASE("sweep outputs") {
  const auto csv = scratch("sweep.csv");
  const auto svg = scratch("sweep.svg");
  const auto r = run("sweep --families beta,k --n 200 --csv " + csv.string() + " --svg " + svg.string());
  REQUIRE(r.status == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("n,param_kind,param_value,abc_max\n", 0) == 0);
  // beta 1..199 plus k clamped to 2..198
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 199 + 197);
  CHECK(text.find("200,k,199,") == std::string::npos);
  const std::string chart = slurp(svg);
  CHECK(chart.find("<svg") != std::string::npos);
  const auto again = scratch("again.svg");
  CHECK(run("sweep --families beta,k --n 200 --svg " + again.string()).status == 0);
  CHECK(slurp(again) == chart);
  CHECK(run("sweep --families chi").status == 2);
}
