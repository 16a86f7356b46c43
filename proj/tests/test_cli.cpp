#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + KZMODP_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("kzmodp_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, Params) {
  const auto r = run("params --p 5 --q 2 --n 3");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["M"], 2);
  EXPECT_EQ(j["a"], 1);
  EXPECT_EQ(j["ak"], 1);
  EXPECT_EQ(run("params --p 7 --q 2 --n 4").code, 2);
  EXPECT_EQ(run("params --p 9 --q 2 --n 3").code, 2);
  EXPECT_EQ(run("params --p 5 --q 2 --n 3 --format tsv").out, "p\tq\tn\tk\ta\tM\tak\n5\t2\t3\t1\t1\t2\t1\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("params --p 5").code, 2);
  EXPECT_EQ(run("ann --p 5 --q 2 --n 3 --format tsv").code, 2);
  EXPECT_EQ(run("solve --p 5 --q 2 --n 3 --z 0,1").code, 2);
  EXPECT_EQ(run("solve --p 5 --q 2 --n 3 --z 0,1,1").code, 2);
  EXPECT_EQ(run("solve --p 5 --q 2 --n 3 --z 0,1,2 --l 2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SolveWorkedPoint) {
  const auto r = run("solve --p 5 --q 2 --n 3 --z 0,1,2");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["solutions"][0]["l"], 1);
  EXPECT_EQ(j["solutions"][0]["components"], nlohmann::json::parse("[4, 0, 1]"));
  EXPECT_EQ(j["field"]["p"], 5);
  EXPECT_EQ(run("solve --p 5 --q 2 --n 3 --z 0,1,2 --format tsv").out, "l\tP1\tP2\tP3\n1\t4\t0\t1\n");
  const auto s = parse(run("solve --p 5 --q 2 --n 3 --symbolic"));
  EXPECT_EQ(s["context"], "symbolic");
  EXPECT_EQ(run("solve --p 13 --q 3 --n 7 --symbolic").code, 0);
}

TEST(Cli, Verify) {
  const auto r = run("verify --p 5 --q 2 --n 3");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["flat"], nlohmann::json::parse("[true, true, true]"));
  EXPECT_EQ(j["reports"][0]["sum_zero"], true);
  EXPECT_EQ(run("verify --p 5 --q 2 --n 3 --zero").code, 0);
  // The constant vector (1, 0, 0) is not flat; reported, not a failure of the run.
  const auto path = temp_file("vec.json", R"({"p": 5, "vector": [[[[0,0,0], 1]], [], []]})");
  const auto c = run("verify --p 5 --q 2 --n 3 --input " + path.string());
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(parse(c)["reports"][0]["flat"][0], false);
  std::filesystem::remove(path);
}

TEST(Cli, Annihilator) {
  const auto r = run("ann --p 5 --q 2 --n 3 --z 0,1,2");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["expected"], 2);
  EXPECT_EQ(j["relations_span"], true);
  EXPECT_EQ(j["degenerate"], false);
  const auto t = parse(run("ann --p 13 --q 3 --n 7 --trials 5 --seed 3"));
  EXPECT_EQ(t["trials"]["majority_dim"], 5);
  EXPECT_EQ(t["trials"]["dims"].size(), 5u);
}

TEST(Cli, QPolynomial) {
  const auto r = run("qpoly --p 5 --q 2 --n 3 --z 0,1,2 --i 1");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["q"].size(), 1u);
  EXPECT_EQ(j["q"][0]["A_recursive"], nlohmann::json::parse("[3]"));
  EXPECT_EQ(j["q"][0]["A_closed"], nlohmann::json::parse("[3]"));
  EXPECT_EQ(j["q"][0]["match"], true);
  EXPECT_EQ(j["q"][0]["logform"], nlohmann::json::parse("[1, 3, 1]"));
  EXPECT_EQ(run("qpoly --p 7 --q 3 --n 4 --symbolic").code, 0);
  EXPECT_EQ(run("qpoly --p 5 --q 2 --n 3 --i 9").code, 2);
}

TEST(Cli, Wronskian) {
  const auto r = run("wronskian --p 5 --g 6:1,1:1 --h 6:2,1:3");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["wronskian"], nlohmann::json::array());
  EXPECT_EQ(j["descent"]["common"], nlohmann::json::parse("[[1, 1]]"));
  EXPECT_EQ(j["descent"]["top"], nlohmann::json::parse("[[0, 1], [5, 1]]"));
  EXPECT_EQ(j["descent"]["bottom"], nlohmann::json::parse("[[0, 3], [5, 2]]"));
  EXPECT_EQ(run("wronskian --p 5 --g 1:1 --h 2:1").code, 2);
  EXPECT_EQ(run("wronskian --p 6 --g 1:1 --h 1:1").code, 2);
}

TEST(Cli, Verma) {
  const auto r = run("verma --p 5 --q 2 --n 3");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["first"]["holds"], true);
  EXPECT_EQ(j["second"]["stated"]["holds"], false);
  EXPECT_EQ(j["second"]["corrected"]["holds"], true);
  EXPECT_EQ(j["second"]["corrected"]["l"], 25);
  const auto w = parse(run("verma --L=-4 --K 0"));
  EXPECT_NE(std::find(w.begin(), w.end(), nlohmann::json::parse(R"({"condition": "r1", "l": 1, "m": 3})")), w.end());
  EXPECT_NE(run("verma --L 0 --K=-2 --format tsv").out.find("r3"), std::string::npos);
  EXPECT_EQ(run("verma --L x --K 1").code, 2);
}

TEST(Cli, SweepAndDeterminism) {
  const auto path = temp_file("triples.txt", "# p q n\n5 2 3\n\n7,2,4\n13 3 7\n");
  const auto r = run("sweep --triples " + path.string() + " --trials 5 --seed 11");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("p\tq\tn\tk\ta\tM\tak\trank_ok\tann_dim_ok\tspan_ok\tkernel_ok\tverma_ok\treason\n", 0), 0u);
  EXPECT_NE(r.out.find("5\t2\t3\t1\t1\t2\t1\ttrue\ttrue\ttrue\ttrue\ttrue"), std::string::npos);
  EXPECT_NE(r.out.find("7\t2\t4\t-"), std::string::npos);
  EXPECT_EQ(run("sweep --triples " + path.string() + " --trials 5 --seed 11").out, r.out);
  const auto j = parse(run("sweep --triples " + path.string() + " --trials 5 --format json"));
  EXPECT_EQ(j.size(), 3u);
  EXPECT_TRUE(j[1].contains("reason"));
  std::filesystem::remove(path);

  const auto empty = temp_file("empty.txt", "");
  const auto header_only = run("sweep --triples " + empty.string());
  EXPECT_EQ(header_only.code, 0);
  EXPECT_EQ(header_only.out.find('\n'), header_only.out.size() - 1);
  std::filesystem::remove(empty);
  const auto bad = temp_file("bad.txt", "5 2\n");
  EXPECT_EQ(run("sweep --triples " + bad.string()).code, 2);
  std::filesystem::remove(bad);

  const auto a = run("ann --p 7 --q 3 --n 4 --seed 42");
  EXPECT_EQ(run("ann --p 7 --q 3 --n 4", "KZMODP_SEED=42").out, a.out);
  EXPECT_EQ(run("ann --p 7 --q 3 --n 4 --seed 42").out, a.out);
}
