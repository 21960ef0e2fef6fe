#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kData = GRSUM_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const auto* info = testing::UnitTest::GetInstance()->current_test_info();
  const auto out = fs::temp_directory_path() / (std::string("grsum_cli_") + info->name() + ".out");
  const std::string cmd =
      std::string("\"") + GRSUM_CLI + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  fs::remove(out);
  return r;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, MissingFileExitsWithTwo) {
  EXPECT_EQ(run("summarize /nonexistent/x.story").code, 2);
  EXPECT_EQ(run("stats /nonexistent/dir").code, 2);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("summarize " + quoted(kData / "three.story") + " --method eigen").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SummarizeIsDeterministic) {
  const auto args = "summarize " + quoted(kData / "fixture30.story") + " --method hits --metric ted";
  const auto first = run(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(line_count(first.out), 5u);
  EXPECT_EQ(run(args).out, first.out);
}

TEST(Cli, ShortDocumentPrintsEverySentence) {
  const auto path = fs::temp_directory_path() / "grsum_five.story";
  {
    std::ofstream out(path);
    out << "One a. Two b. Three c. Four d. Five e.\n\n@highlight\n\nOne a\n";
  }
  const auto r = run("summarize " + quoted(path) + " --length 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "One a.\nTwo b.\nThree c.\nFour d.\nFive e.\n");
  fs::remove(path);
}

TEST(Cli, GoldAppendsRougeJson) {
  const auto r = run("summarize " + quoted(kData / "three.story") + " --gold --length 1");
  ASSERT_EQ(r.code, 0);
  const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  const auto j = nlohmann::json::parse(last);
  EXPECT_TRUE(j.contains("rouge1"));
  EXPECT_TRUE(j["rougeL"].contains("f1"));
}

TEST(Cli, SidecarIsPickedUpNextToStory) {
  const auto with = run("summarize " + quoted(kData / "three.story") + " --metric ted --length 1");
  EXPECT_EQ(with.code, 0);
  EXPECT_EQ(line_count(with.out), 1u);
}

TEST(Cli, StatsOnFixtureCorpus) {
  const auto r = run("stats " + quoted(kData / "corpus") + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["doc_count"], 2);
  EXPECT_DOUBLE_EQ(j["avg_doc_len_sentences"].get<double>(), 5.0);
  EXPECT_DOUBLE_EQ(j["avg_summary_len_sentences"].get<double>(), 1.5);
  EXPECT_NEAR(j["avg_compression"].get<double>(), 0.7, 1e-12);
}

TEST(Cli, EmptyCorpusExitsWithOne) {
  const auto dir = fs::temp_directory_path() / "grsum_empty_corpus";
  fs::create_directories(dir);
  EXPECT_EQ(run("evaluate " + quoted(dir)).code, 1);
  EXPECT_EQ(run("stats " + quoted(dir)).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, EvaluateCsvIsStable) {
  const auto args = "evaluate " + quoted(kData / "corpus") + " --format csv --no-timing --jobs 2";
  const auto r = run(args);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "method,metric,threshold,rouge1_r,rouge2_r,rougeL_r,rouge1_f,rouge2_f,rougeL_f,docs,"
            "seconds");
  EXPECT_EQ(line_count(r.out), 13u);
  EXPECT_EQ(run(args).out, r.out);
}

TEST(Cli, EvaluateSubsetOfMethods) {
  const auto r = run("evaluate " + quoted(kData / "corpus") +
                     " --format csv --method pagerank,degree --metric overlap");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 3u);
}

TEST(Cli, DumpGraphWritesDot) {
  const auto dot = fs::temp_directory_path() / "grsum_graph.dot";
  const auto r = run("summarize " + quoted(kData / "fixture30.story") + " --dump-graph " + quoted(dot));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(dot).rfind("graph sentences {", 0), 0u);
  fs::remove(dot);
}
