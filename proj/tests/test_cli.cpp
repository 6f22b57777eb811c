#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kuni/cli.hpp"
#include "kuni/json.hpp"

using namespace kuni;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kuni_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("verify the [6,2] graph with every method") {
  const auto r = run({"verify", "--p", "5", "--n", "6", "--k", "2", "--method", "all"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("tool") == "kuni");
  CHECK(j.contains("version"));
  CHECK(j.at("config").at("p") == 5);
  CHECK(j.at("k_structural") == 2);
  CHECK(j.at("k_stabilizer") == 2);
  CHECK(j.at("k_dense") == 2);
  CHECK(j.at("agree") == true);
  CHECK(j.at("witness").at("weight") == 3);
  CHECK(j.at("witness").at("witness_w_for_k_plus_1").size() == 6);
}

TEST_CASE("verify single methods and random B") {
  const auto s = run({"verify", "--p", "5", "--n", "6", "--k", "2", "--method", "stabilizer"});
  CHECK(s.code == kExitOk);
  CHECK(Json::parse(s.out).at("k_dense").is_null());
  const auto r = run({"verify", "--p", "5", "--n", "6", "--k", "2", "--random-b", "--seed", "9"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("k_stabilizer").get<int>() >= 2);
  CHECK(j.at("structural_exact") == false);
  CHECK(j.at("config").at("seed") == 9);
}

TEST_CASE("verify a hierarchy") {
  const auto r = run({"verify", "--p", "5", "--levels", "6:2,2:1"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out).at("k_dense") == 2);
}

TEST_CASE("exit codes for bad input and guards") {
  CHECK(run({"build", "--p", "4", "--n", "6", "--k", "2"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "2", "--n", "5", "--k", "2"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "5", "--n", "6", "--k", "2", "--levels", "6:2"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "5", "--n", "6", "--k", "2", "--method", "bogus"}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  const auto big = run({"verify", "--p", "13", "--n", "12", "--k", "6", "--method", "stabilizer"});
  CHECK(big.code == kExitResourceLimit);
  CHECK(big.err.find("error:") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verification-negative exit status") {
  const auto dir = scratch("negative");
  std::ofstream(dir / "empty.json") << R"({"p":5,"n":3,"gamma":[[0,0,0],[0,0,0],[0,0,0]]})";
  const auto plain = run({"verify", "--input", (dir / "empty.json").string()});
  CHECK(plain.code == kExitOk);
  CHECK(Json::parse(plain.out).at("k_stabilizer") == 0);
  const auto neg = run({"verify", "--input", (dir / "empty.json").string(), "--expect-k", "1"});
  CHECK(neg.code == kExitVerificationFailed);
  CHECK(Json::parse(neg.out).at("verdict") == "fail");
  CHECK(run({"verify", "--p", "5", "--n", "6", "--k", "2", "--expect-k", "3"}).code == kExitVerificationFailed);
}

TEST_CASE("build writes artifacts") {
  const auto dir = scratch("build");
  const auto r = run({"build", "--p", "5", "--levels", "6:2,2:1", "--state", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  for (const char* name : {"code.json", "adjacency.json", "graph.dot", "state.json"})
    CHECK(std::filesystem::exists(dir / name));
  const Json adj = Json::parse(slurp(dir / "adjacency.json"));
  CHECK(adj.at("adjacency").at("gamma")[4][5] == 4);
  CHECK(slurp(dir / "graph.dot").find("5 -- 6 [label=4]") != std::string::npos);
  // Export reads the adjacency back.
  const auto e = run({"export", "--input", (dir / "adjacency.json").string(), "--format", "dot"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("5 -- 6 [label=4]") != std::string::npos);
  const auto v = run({"verify", "--input", (dir / "adjacency.json").string()});
  CHECK(Json::parse(v.out).at("k_stabilizer") == 2);
}

TEST_CASE("hierarchy report") {
  const auto r = run({"hierarchy", "--p", "5", "--levels", "6:2,4:2,2:1"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j.at("levels").size() == 3);
  CHECK(j.at("levels")[1].at("offset") == 2);
  CHECK(j.at("levels")[0].at("edge_count") < j.at("levels")[1].at("edge_count"));
  CHECK(j.at("levels")[1].at("edge_count") < j.at("levels")[2].at("edge_count"));
}

TEST_CASE("slocc reports") {
  const auto a = Json::parse(run({"slocc", "--p", "5", "--pair", "6:2 vs 6:2+2:1"}).out);
  CHECK(a.at("verdict") == "distinguished");
  CHECK(a.at("distinguishing_subsets")[0].at("subset") == Json::array({1, 2, 5}));
  CHECK(a.at("distinguishing_subsets")[0].at("ranks") == Json::array({25, 125}));
  const auto same = Json::parse(run({"slocc", "--p", "5", "--pair", "6:2 vs 6:2"}).out);
  CHECK(same.at("verdict") == "not distinguished by this test");
  const auto odd = Json::parse(run({"slocc", "--p", "5", "--pair", "5:2 vs 5:2+2:1"}).out);
  CHECK(odd.at("method") == "odd_ame_support");
  CHECK(odd.at("supports") == Json::array({25, 125}));
  CHECK(odd.at("verdict") == "distinguished");
  const auto nested = Json::parse(run({"slocc", "--p", "5", "--pair", "6:2+2:1 vs 6:2+3:1"}).out);
  CHECK(nested.at("verdict") != "distinguished");
  CHECK(run({"slocc", "--p", "5", "--pair", "6:2"}).code == kExitInvalidInput);
  CHECK(run({"slocc", "--p", "5", "--pair", "6:2 vs 5:2"}).code == kExitInvalidInput);
}

TEST_CASE("identical configs give identical bytes") {
  const std::vector<std::string> args{"verify", "--p", "5", "--n", "6", "--k", "2", "--random-b", "--seed", "4"};
  CHECK(run(args).out == run(args).out);
}
