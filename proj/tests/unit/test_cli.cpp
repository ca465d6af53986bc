#include "cli.hpp"

#include "ratball/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using ratball::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Golden file layout:
///   args: <space separated arguments>
///   exit: <status>
///   --- stdout
///   <expected standard output>
struct Golden {
  std::vector<std::string> args;
  int exit = 0;
  std::string out;
};

Golden load(const fs::path& path) {
  std::ifstream in(path);
  Golden g;
  std::string line;
  std::getline(in, line);
  REQUIRE(line.rfind("args:", 0) == 0);
  g.args = words(line.substr(5));
  std::getline(in, line);
  REQUIRE(line.rfind("exit:", 0) == 0);
  g.exit = std::stoi(line.substr(5));
  std::getline(in, line);
  REQUIRE(line == "--- stdout");
  std::ostringstream rest;
  rest << in.rdbuf();
  g.out = rest.str();
  return g;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden files") {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(RATBALL_GOLDEN_DIR))
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  REQUIRE(files.size() >= 15);

  std::set<std::string> covered;
  for (const fs::path& f : files) {
    CAPTURE(f.filename().string());
    const Golden g = load(f);
    const Run r = run(g.args);
    CHECK(r.code == g.exit);
    CHECK(r.out == g.out);
    if (g.exit != 0) {
      CHECK_FALSE(r.err.empty());
      CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    // first two non-option words name the command
    std::vector<std::string> cmd;
    const std::set<std::string> valued{"--format", "--node-budget", "--time-budget", "--threads",
                                       "--kernels"};
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      if (valued.count(g.args[i])) ++i;
      else if (g.args[i][0] != '-' && cmd.size() < 2) cmd.push_back(g.args[i]);
    }
    if (g.exit == 0 && !cmd.empty())
      covered.insert(cmd[0] == "obstruct" ? cmd[0] : cmd[0] + " " + cmd[1]);
  }
  const std::set<std::string> all{
      "markov list",      "markov char",        "ball classify",      "ball boundary",
      "ball plumbing",    "cf expand",          "cf eval",            "cf fib-identities",
      "lattice classes",  "plumbing reduce",    "plumbing certify",   "obstruct",
      "verify example-b31", "verify lemma-cemb", "verify theorem2"};
  for (const auto& c : all) {
    CAPTURE(c);
    CHECK(covered.count(c) == 1);
  }
}

TEST_CASE("worked examples") {
  Run r = run({"cf", "expand", "9", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2,2,2,3]\n");

  r = run({"plumbing", "reduce", "-3,-2,-1,-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "(-3,0) after 2 blowdowns\n");
  CHECK(run({"plumbing", "reduce", "--", "-3", "-2", "-1", "-2"}).out == r.out);
  CHECK(run({"plumbing", "reduce", "--", "-3,-2", "-1,-2"}).out == r.out);

  r = run({"obstruct", "3,1"});
  CHECK(r.code == 0);
  const auto doc = ratball::parse_document(r.out);
  CHECK(doc["result"]["verdict"] == "OBSTRUCTED");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"cf", "expand", "9"}).code == 1);
  CHECK(run({"cf", "expand", "9", "x"}).code == 1);
  CHECK(run({"cf", "expand", "6", "4"}).code == 1);
  CHECK(run({"cf", "eval", "2,,3"}).code == 1);
  CHECK(run({"markov", "list", "--max", "0"}).code == 1);
  CHECK(run({"markov", "char", "5", "1", "3"}).code == 1);
  CHECK(run({"obstruct", "3"}).code == 1);
  CHECK(run({"obstruct", "3,1,1"}).code == 1);
  CHECK(run({"--format", "xml", "cf", "expand", "9", "7"}).code == 1);
  CHECK(run({"--node-budget", "0", "obstruct", "3,1"}).code == 1);
  CHECK(run({"verify", "theorem2", "1", "9"}).code == 1);
  CHECK(run({"--node-budget", "3", "obstruct", "13,5"}).code == 2);
  CHECK(run({"--node-budget", "3", "lattice", "classes", "--weights", "3,2,2,3,2", "--ambient", "9"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"plumbing", "--help"}).code == 0);
}

TEST_CASE("inconclusive reports are still emitted") {
  const Run r = run({"--node-budget", "3", "obstruct", "13,5"});
  CHECK(r.code == 2);
  CHECK(ratball::parse_document(r.out)["result"]["verdict"] == "INCONCLUSIVE");
}

TEST_CASE("environment overrides") {
  ::setenv("RATBALL_NODE_BUDGET", "3", 1);
  CHECK(run({"obstruct", "13,5"}).code == 2);
  // the flag wins over the environment
  CHECK(run({"--node-budget", "100000", "obstruct", "13,5"}).code == 0);
  ::setenv("RATBALL_NODE_BUDGET", "lots", 1);
  CHECK(run({"obstruct", "3,1"}).code == 1);
  ::unsetenv("RATBALL_NODE_BUDGET");

  ::setenv("RATBALL_THREADS", "3", 1);
  const Run threaded = run({"verify", "theorem2", "2", "3"});
  ::unsetenv("RATBALL_THREADS");
  CHECK(threaded.out == run({"verify", "theorem2", "2", "3"}).out);
}

TEST_CASE("structured output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"obstruct", "2,1"},
           {"verify", "lemma-cemb", "2", "8"},
           {"--format", "json", "lattice", "classes", "--weights", "2,2,2", "--ambient", "5"},
           {"--threads", "4", "verify", "theorem2", "2", "2"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("elapsed_us") == std::string::npos);
  }
  CHECK(run({"--timing", "obstruct", "2,1"}).out.find("elapsed_us") != std::string::npos);
}

TEST_CASE("kernel selection does not change output") {
  const std::vector<std::string> base{"verify", "theorem2", "1", "3"};
  std::vector<std::string> scalar{"--kernels", "scalar"};
  scalar.insert(scalar.end(), base.begin(), base.end());
  CHECK(run(scalar).out == run(base).out);
}

TEST_CASE("verbose statistics go to stderr") {
  const Run r = run({"-v", "--format", "text", "obstruct", "3,1"});
  CHECK(r.err.rfind("search: nodes=", 0) == 0);
  CHECK(r.out.find("search:") == std::string::npos);
}

}  // TEST_SUITE
