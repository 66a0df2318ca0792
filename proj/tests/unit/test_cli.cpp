#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "optbranch/cli.hpp"

using namespace optbranch;

namespace {

const std::string kData{OPTBRANCH_DATA_DIR};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "optbranch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve prints size and branch count") {
    Run a = run({"solve", kData + "/empty10.edgelist"});
    CHECK(a.code == 0);
    CHECK(a.out == "mis_size=10 branches=0\n");

    Run b = run({"solve", kData + "/tutte.edgelist"});
    CHECK(b.code == 0);
    CHECK(b.out.rfind("mis_size=19 branches=", 0) == 0);

    Run c = run({"solve", kData + "/petersen.dimacs", "--format", "dimacs", "--lp", "--measure", "vc"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("mis_size=4 ", 0) == 0);
  }

  TEST_CASE("solve as json") {
    Run a = run({"solve", kData + "/tutte.edgelist", "--json"});
    REQUIRE(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["mis_size"] == 19);
    CHECK(j.contains("branch_count"));
    CHECK(j["time_ms"].get<double>() >= 0.0);
  }

  TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({"solve", kData + "/tutte.edgelist", "--bogus"}).code == 2);
    CHECK(run({"solve", kData + "/nope.edgelist"}).code == 2);
    CHECK(run({"solve", kData + "/petersen.dimacs"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"bench", "--gen", "3rr", "--sizes", "21", "--trials", "1"}).code == 2);
    CHECK(run({"bench", "--gen", "cube", "--sizes", "20"}).code == 2);
    CHECK(run({"discover", kData + "/small_region.edgelist", "--region", "a,b,z"}).code == 2);
    CHECK(run({"discover", kData + "/small_region.edgelist", "--region", "1,2,9"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("discover prints the small example rule") {
    Run a = run({"discover", kData + "/small_region.edgelist", "--region", "a,b,c,d,e", "--boundary", "a,b,c", "--measure",
                 "vc", "--no-env-pruning"});
    REQUIRE(a.code == 0);
    CHECK(a.out.find("candidates (14):") != std::string::npos);
    CHECK(a.out.find("branching_vector: [5, 5, 4]") != std::string::npos);
    CHECK(a.out.find("γ: 1.26716") != std::string::npos);
  }

  TEST_CASE("bench writes a csv report") {
    const auto path = std::filesystem::temp_directory_path() / "optbranch_cli_bench.csv";
    Run a = run({"bench", "--gen", "3rr", "--sizes", "20:24:4", "--trials", "3", "--seed", "1", "--out",
                 path.string()});
    REQUIRE(a.code == 0);
    CHECK(a.out.find("fitted_gamma=") != std::string::npos);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,trial,seed,mis,branches,time_ms");
    int rows = 0;
    for (std::string line; std::getline(in, line);)
      if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == 6);
    std::filesystem::remove(path);
  }
}
