#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using bibdopt::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bibdopt_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

const std::string kPath = write_temp("path4.txt", "v=4 b=3 k=2\n1 2\n2 3\n3 4\n");
const std::string kStar = write_temp("star4.txt", "v=4 b=3 k=2\n1 2\n1 3\n1 4\n");
const std::string kSplit = write_temp("split4.txt", "v=4 b=3 k=2\n1 2\n1 2\n3 4\n");
const std::string kK33 = write_temp("k33.txt", "v=6 b=9 k=2\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n");
const std::string kPrism = write_temp("prism.txt", "v=6 b=9 k=2\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n1 4\n2 5\n3 6\n");
const std::string kFano = write_temp("fano.txt", "v=7 b=7 k=3\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n");

}  // namespace

TEST_CASE("level lists") {
  using bibdopt::cli::parse_levels;
  CHECK(parse_levels("0,1,2") == std::vector<unsigned long>{0, 1, 2});
  CHECK(parse_levels("0..3,7") == std::vector<unsigned long>{0, 1, 2, 3, 7});
  CHECK(parse_levels("5") == std::vector<unsigned long>{5});
  CHECK_THROWS(parse_levels("a"));
  CHECK_THROWS(parse_levels("3..1"));
  CHECK_THROWS(parse_levels("-1"));
  CHECK_THROWS(parse_levels(""));
}

TEST_CASE("analyze") {
  auto r = invoke({"analyze", kPath, "--y", "0,1", "--json"});
  REQUIRE(r.code == 0);
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 5);
  CHECK(recs[0]["spectrum"] == nlohmann::json::array({"1", "6", "10", "4"}));
  CHECK(recs[0]["class"]["connected"] == true);
  // D at y = 1: 4^3 + 4^2 * 6 + 4 * 10 + 4.
  CHECK(recs[1]["criterion"] == "D");
  CHECK(recs[1]["value_num"] == "4");
  CHECK(recs[2]["value_num"] == "204");
  CHECK(recs[3]["criterion"] == "A");
  CHECK(recs[3]["value_num"] == "6");
  CHECK(recs[3]["value_den"] == "5");
  CHECK(recs[3]["degenerate"] == false);

  r = invoke({"analyze", kSplit, "--y", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disconnected") != std::string::npos);
  CHECK(r.out.find("(disconnected)") != std::string::npos);

  r = invoke({"analyze", kFano, "--y", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bibd(lambda=1)") != std::string::npos);
  CHECK(r.out.find("all non-trivial eigenvalues equal") != std::string::npos);
}

TEST_CASE("crossover") {
  auto r = invoke({"crossover", kPath, kStar, "--criterion", "A", "--json"});
  REQUIRE(r.code == 0);
  auto rec = lines(r.out).at(0);
  CHECK(rec["winner"] == kPath);
  CHECK(rec["status"] == "certified");
  CHECK(rec["y_star"] == "1");

  r = invoke({"crossover", kStar, kPath, "--criterion", "A", "--json"});
  CHECK(lines(r.out).at(0)["winner"] == kPath);

  r = invoke({"crossover", kK33, kPrism, "--criterion", "D", "--json"});
  rec = lines(r.out).at(0);
  CHECK(rec["winner"] == kK33);
  CHECK(rec["y_star"] == "0");
  CHECK(rec["first_differing_index"] == 3);

  r = invoke({"crossover", kPath, kPath, "--json"});
  CHECK(r.code == 0);
  for (const auto& one : lines(r.out)) CHECK(one["status"] == "indistinguishable");

  r = invoke({"crossover", kPath, kK33});
  CHECK(r.code == 2);
}

TEST_CASE("rank, bounds and extend") {
  auto r = invoke({"rank", kPath, kStar, "--criterion", "A", "--y", "0", "--json"});
  REQUIRE(r.code == 0);
  auto recs = lines(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["design_id"] == kStar);
  CHECK(recs[0]["rank"] == 1);

  r = invoke({"bounds", "--v", "4", "--b", "3", "--k", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
  r = invoke({"bounds", "--v", "2", "--b", "1", "--k", "2"});
  CHECK(r.code == 2);

  r = invoke({"extend", kPath, "--y", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("v=4 b=9 k=2", 0) == 0);
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "--v", "4", "--b", "3", "--k", "2", "--connected", "true", "--json"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 17);
  const auto pool = write_temp("pool.jsonl", r.out);
  r = invoke({"rank", "--pool", pool, "--criterion", "D", "--y", "1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 16);

  r = invoke({"enumerate", "--v", "5", "--b", "5", "--k", "2", "--generator", "connected-k2"});
  CHECK(r.code == 0);
  CHECK(r.out.find(": 11 members") != std::string::npos);

  r = invoke({"enumerate", "--v", "4", "--b", "3", "--k", "2", "--connected", "maybe"});
  CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"frobnicate"}).code == 2);
  auto r = invoke({"analyze", "/nonexistent/design.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot read") != std::string::npos);
  const auto bad = write_temp("bad.txt", "v=4 b=2 k=2\n1 2\n2 2\n");
  r = invoke({"analyze", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(invoke({"--cap-vertices", "5", "analyze", kK33}).code == 3);
  CHECK(invoke({"enumerate", "--v", "9", "--b", "9", "--k", "3"}).code == 3);
  CHECK(invoke({"verify", "nope"}).code == 2);
  CHECK(invoke({"verify", "power-sums", "--v", "3..5"}).code == 0);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "oracle", "--v", "1..5", "--json"},
      {"enumerate", "--v", "5", "--b", "4", "--k", "2", "--connected", "true", "--json"},
      {"crossover", kK33, kPrism, "--json"},
      {"analyze", kFano, "--y", "0..3", "--json"}};
  for (const auto& c : commands) {
    const auto first = invoke(c);
    const auto second = invoke(c);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}
