#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unistd.h>

#include "oracles.hpp"
#include "torfib/cli.hpp"
#include "torfib/datasets.hpp"
#include "torfib/error.hpp"

using namespace torfib;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("torfib_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "torfib");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string collapse_whitespace(const std::string& s) {
  std::istringstream in(s);
  std::string word, out;
  while (in >> word) out += word + ' ';
  return out;
}

const char* kBaseA = "2 3\n2 0 1\n0 2 1\n";
const char* kSideB = "3 4\n0 2 0 1\n0 0 2 1\n1 0 0 0\nblocks: 2 1 1\n";
const char* kSideC = "4 5\n4 0 0 0 1\n0 4 0 0 1\n0 0 4 0 1\n0 0 0 4 1\nblocks: 2 2 1\n";

}  // namespace

TEST_CASE("parse the documented examples") {
  BlockedConfiguration A = parse_matrix_text(kBaseA);
  CHECK(A == non_normal_product().A);
  CHECK(A.all_singletons());

  BlockedConfiguration B = parse_matrix_text(
      "6 8\n"
      "1 1 1 1 1 1 1 1\n"
      "1 0 1 0 0 0 0 0\n"
      "0 1 0 1 0 0 0 0\n"
      "0 0 0 0 1 0 1 0\n"
      "1 0 0 0 1 0 0 0\n"
      "0 1 0 0 0 1 0 0\n"
      "blocks: 2 2 2 2\n");
  CHECK(B == hierarchical_model().B);

  BlockedConfiguration empty = parse_matrix_text("1 0\n\n");
  CHECK(empty.rows() == 1);
  CHECK(empty.cols() == 0);
  CHECK(empty.block_count() == 0);

  BlockedConfiguration commented = parse_matrix_text("# base\n2 3\n2 0 1\n# middle\n0 2 1\n");
  CHECK(commented == A);
  CHECK(parse_matrix_text("1 2\n-3 +4\n").matrix() == IntegerMatrix{{-3, 4}});
}

TEST_CASE("parse errors carry positions") {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_matrix_text(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("2\n") != "");
  CHECK(message("x 3\n").find("line 1") != std::string::npos);
  std::string short_entries = message("2 3\n1 2 3\n4 5\n");
  CHECK(short_entries.find("line") != std::string::npos);
  std::string extra = message("1 2\n1 2 3\n");
  CHECK(extra.find("line 2") != std::string::npos);
  CHECK(extra.find("column 5") != std::string::npos);
  std::string bad_entry = message("1 2\n1 q\n");
  CHECK(bad_entry.find("line 2") != std::string::npos);
  CHECK(bad_entry.find("column 3") != std::string::npos);
  std::string blocks = message("1 3\n1 2 3\nblocks: 1 1\n");
  CHECK(blocks.find("line 3") != std::string::npos);
  CHECK(message("-1 2\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/torfib/matrix.txt"), Error);
}

TEST_CASE("serialization round trips") {
  for (const char* text : {kBaseA, kSideB, kSideC}) {
    BlockedConfiguration M = parse_matrix_text(text);
    std::string s = serialize_matrix(M);
    CHECK(collapse_whitespace(s) == collapse_whitespace(text));
    CHECK(parse_matrix_text(s) == M);
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = rng() % 5;
    IntegerMatrix M = oracle::to_matrix(oracle::random_matrix(rng, rows, cols, -50, 50), cols);
    std::vector<std::size_t> sizes;
    std::size_t left = cols;
    while (left > 0) {
      std::size_t s = 1 + rng() % left;
      sizes.push_back(s);
      left -= s;
    }
    BlockedConfiguration C(M, sizes);
    CHECK(parse_matrix_text(serialize_matrix(C)) == C);
  }
}

TEST_CASE("command line parsing") {
  const char* argv[] = {"torfib", "segre", "a", "b", "c", "--merge-duplicates", "--json", "out.json"};
  JobSpec job = parse_command_line(8, argv);
  CHECK(job.command == "segre");
  CHECK(job.inputs == std::vector<std::string>{"a", "b", "c"});
  CHECK(job.flag("merge-duplicates"));
  CHECK(job.options.at("json") == "out.json");
  CHECK_FALSE(job.flag("full"));

  const char* bogus[] = {"torfib", "frobnicate"};
  CHECK_THROWS_AS(parse_command_line(2, bogus), UsageError);
  const char* none[] = {"torfib"};
  CHECK_THROWS_AS(parse_command_line(1, none), UsageError);
}

TEST_CASE("commands and exit codes") {
  Scratch s;
  const std::string A = s.write("A.txt", kBaseA);
  const std::string B = s.write("B.txt", kSideB);
  const std::string C = s.write("C.txt", kSideC);

  Outcome graver = run_args({"graver", A});
  CHECK(graver.code == 0);
  CHECK(graver.out.find("±(1 1 -2)") != std::string::npos);

  Outcome kernel = run_args({"kernel", A, "--json", "-"});
  REQUIRE(kernel.code == 0);
  auto k = nlohmann::json::parse(kernel.out);
  CHECK(k["command"] == "kernel");
  CHECK(k["result"]["basis"] == nlohmann::json::parse(R"([["1","1","-2"]])"));

  Outcome star = run_args({"star", A});
  CHECK(star.code == 0);

  Outcome criteria = run_args({"criteria", A, B, C, "--normal", "--json", "-"});
  REQUIRE(criteria.code == 0);
  auto r = nlohmann::json::parse(criteria.out)["result"];
  CHECK(r["verdicts"].size() == 6);

  Outcome normal = run_args({"normal", B});
  CHECK(normal.code == 0);

  const std::string json_path = (s.dir / "tfp.json").string();
  Outcome tfp = run_args({"tfp", A, B, C, "--json", json_path});
  CHECK(tfp.code == 0);
  CHECK_FALSE(tfp.out.empty());
  std::ifstream written(json_path);
  auto t = nlohmann::json::parse(written);
  CHECK(t["result"]["cols"] == 7);

  Outcome veronese = run_args({"veronese", "2", "3", "--partition", "1,2/3", "--json", "-"});
  REQUIRE(veronese.code == 0);
  CHECK(nlohmann::json::parse(veronese.out)["result"]["B"]["blocks"] == nlohmann::json::parse("[3,2,1]"));

  Outcome neutral = run_args({"neutral", A, C, "--json", "-"});
  REQUIRE(neutral.code == 0);
  auto n = nlohmann::json::parse(neutral.out)["result"];
  CHECK(n["neutral_tfp"] == true);
  CHECK(n["neutral_fibers_trivial"] == true);
  CHECK(n["segre_fibers_match"] == true);

  // Exit 2: malformed input files and command lines.
  const std::string broken = s.write("broken.txt", "2 3\n1 2\n");
  Outcome parse_fail = run_args({"graver", broken});
  CHECK(parse_fail.code == 2);
  CHECK(parse_fail.err.find("line") != std::string::npos);
  CHECK(run_args({"graver"}).code == 2);
  CHECK(run_args({"reproduce", "nowhere"}).code == 2);
  CHECK(run_args({"tfp", A, B}).code == 2);

  // Exit 1: algorithmic failures on well-formed input.
  const std::string cone = s.write("cone.txt", "1 2\n1 -1\n");
  CHECK(run_args({"normal", cone}).code == 1);
  const std::string bad_b = s.write("badB.txt", "1 4\n0 1 1 1\nblocks: 2 1 1\n");
  CHECK(run_args({"tfp", A, bad_b, C}).code == 1);
  CHECK(run_args({"neutral", A, C, "--fiber-bound", "1", "--steps", "3"}).code == 1);

  CHECK(run_args({"--help"}).code == 0);
}

TEST_CASE("segre command sizes for the hierarchical model") {
  Scratch s;
  Dataset h = hierarchical_model();
  const std::string A = s.write("A.txt", serialize_matrix(h.A));
  const std::string B = s.write("B.txt", serialize_matrix(h.B));
  auto cols = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"segre", A, B, B, "--json", "-"};
    args.insert(args.end(), extra.begin(), extra.end());
    Outcome o = run_args(args);
    REQUIRE(o.code == 0);
    return nlohmann::json::parse(o.out)["result"]["product"]["cols"].get<int>();
  };
  CHECK(cols({}) == 24);
  CHECK(cols({"--merge-duplicates"}) == 32);
  CHECK(cols({"--full"}) == 48);
}

TEST_CASE("reproduction is deterministic") {
  for (const char* which : {"nonnormal", "hierarchical"}) {
    Outcome first = run_args({"reproduce", which, "--json", "-"});
    Outcome second = run_args({"reproduce", which, "--json", "-"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    Outcome text = run_args({"reproduce", which});
    CHECK(text.code == 0);
    CHECK_FALSE(text.out.empty());
  }
  Outcome nn = run_args({"reproduce", "nonnormal", "--json", "-"});
  auto j = nlohmann::json::parse(nn.out)["result"];
  CHECK(j["B_normal"]["normal"] == true);
  CHECK(j["C_normal"]["normal"] == true);
  CHECK(j["tfp_normal"]["normal"] == false);
  CHECK(j["report"]["normalization_equals_segre"] == true);
}
