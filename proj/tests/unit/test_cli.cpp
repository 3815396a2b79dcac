#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "symspec/cli.hpp"
#include "symspec/io.hpp"

using namespace symspec;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "symspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("families example") {
  const auto r = run_args({"families", "--n", "5", "--spec", "F:x=1,I=2", "--certify", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["size"] == 12);
  CHECK(j["mu_An"].get<double>() == doctest::Approx(0.2));
  CHECK(j["product_free"] == true);
  CHECK(j["seed"] == 0xC0FFEE);
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(run_args({"families", "--n", "5", "--spec", "F:x=1,I=2"}).out.find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("every subcommand runs on a small input") {
  const auto dir = std::filesystem::temp_directory_path() / "symspec_cli_test";
  std::filesystem::create_directories(dir);
  const auto set = (dir / "A.perms").string();
  write_text_file(set, "n=5 convention=An\n2 3 1 4 5\n1 2 4 5 3\n3 1 2 4 5\n");
  const auto fn = (dir / "f.txt").string();
  write_text_file(fn, "n=4\n0 1\n5 -0.5\n2 1 4 3 2\n");
  const std::vector<std::vector<std::string>> runs = {
      {"decompose", "--n", "5", "--set-file", set, "--d", "2"},
      {"decompose", "--function-file", fn},
      {"linear", "--n", "5", "--set-file", set},
      {"linear", "--n", "5", "--spec", "F:x=1,I=2", "--spec", "star:x=2,I=1", "--set-file", set},
      {"spectrum", "--n", "5", "--set-file", set, "--d", "1"},
      {"global", "--n", "6", "--spec", "F:x=1,I=2,3", "--t", "2"},
      {"structure", "--n", "6", "--spec", "F:x=1,I=2,3;ambient=Sn"},
      {"structure", "--n", "5", "--spec", "star:x=1,I=2", "--spec", "star:x=2,I=1", "--spec", "avoid:I=1;J=2", "--R",
       "1"},
      {"families", "--n", "6", "--spec", "avoid:I=2,3;J=4", "--spec", "star:x=1,I=2,3", "--spec", "star:x=1,I=4",
       "--certify"},
      {"maxpf", "--n", "4"},
      {"verify", "--n", "4"},
  };
  for (auto args : runs) {
    args.push_back("--no-timestamp");
    const auto r = run_args(args);
    INFO(args[0] << ": " << r.err);
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["command"] == args[0]);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].is_array());
    // Reports are byte-identical across runs and thread counts.
    auto again = args;
    again.insert(again.end(), {"--threads", "3"});
    CHECK(run_args(again).out == r.out);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("csv and output files") {
  const auto dir = std::filesystem::temp_directory_path() / "symspec_cli_out";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "r.csv").string();
  const auto r = run_args({"families", "--n", "5", "--spec", "F:x=1,I=2", "--format", "csv", "--output", path,
                           "--no-timestamp"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto text = read_text_file(path);
  CHECK(text.rfind("key,value\n", 0) == 0);
  CHECK(text.find("\nsize,12\n") != std::string::npos);
  CHECK(text.find("\nfamily,\"F:x=1,I=2\"\n") != std::string::npos);
  std::filesystem::remove_all(dir);
  CHECK(cli::to_csv(json{{"a", {{"b", 1}}}, {"c", {true, "x\"y"}}}) == "key,value\na.b,1\nc.0,true\nc.1,\"x\"\"y\"\n");
}

TEST_CASE("usage errors exit with 1 and say why") {
  struct Case {
    std::vector<std::string> args;
    std::string message;
  };
  const std::vector<Case> cases = {
      {{"frobnicate"}, "unknown subcommand"},
      {{}, "subcommand is required"},
      {{"families", "--n", "5", "--spec", "G:x=1"}, "unknown family kind"},
      {{"families", "--spec", "F:x=1,I=2"}, "--spec needs --n"},
      {{"families", "--n", "5"}, "needs an input"},
      {{"maxpf", "--n", "9"}, "maxpf needs"},
      {{"maxpf", "--n", "6", "--mode", "exact"}, "exact maxpf needs"},
      {{"verify", "--suite", "some"}, "--suite"},
      {{"verify", "--seed", "0xZZ"}, "--seed"},
      {{"spectrum", "--n", "9", "--spec", "F:x=1,I=2"}, "spectrum needs"},
      {{"global", "--n", "5", "--spec", "F:x=1,I=2", "--t", "5"}, "--t"},
      {{"global", "--n", "5", "--spec", "F:x=1,I=9"}, "outside 1..5"},
      {{"families", "--n", "5", "--set-file", "/nonexistent/x"}, "does not exist"},
      {{"decompose", "--n", "8", "--spec", "F:x=1,I=2"}, "--slow"},
      {{"families", "--n", "5", "--spec", "F:x=1,I=2", "--threads", "0"}, "--threads"},
  };
  for (const auto& c : cases) {
    const auto r = run_args(c.args);
    INFO(r.err);
    CHECK(r.code == 1);
    CHECK(r.err.find(c.message) != std::string::npos);
    CHECK(r.out.empty());
  }
}

TEST_CASE("assertion failures exit with 2 and name the invariant") {
  // An exact search cut off by its budget cannot certify optimality.
  const auto r = run_args({"maxpf", "--n", "5", "--mode", "exact", "--budget", "10", "--no-timestamp"});
  CHECK(r.code == 2);
  CHECK(r.err.find("families.maxpf_optimal") != std::string::npos);
  const auto j = json::parse(r.out);
  CHECK(j["passed"] == false);
  CHECK(j["failures"] == json::array({"families.maxpf_optimal"}));
  CHECK(j["budget_exhausted"] == true);
}

TEST_CASE("execute and render") {
  cli::RunConfig config;
  config.command = "families";
  config.degree = 5;
  config.specs = {"F:x=1,I=2"};
  config.certify = true;
  config.timestamp = false;
  const auto result = cli::execute(config);
  CHECK(result.exit_code == 0);
  CHECK(result.report["failures"].empty());
  CHECK(cli::render(config, result.report) == cli::render(config, cli::execute(config).report));
  config.command = "nope";
  CHECK_THROWS_AS(cli::execute(config), cli::UsageError);
}

TEST_CASE("help") {
  const auto r = run_args({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
