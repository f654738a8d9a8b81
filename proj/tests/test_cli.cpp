#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "citeimpact/cli.hpp"

using namespace citeimpact;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixture = std::string(CITEIMPACT_DATA_DIR) + "/table2_columns.csv";

std::string synth_corpus() {
  return run({"synth", "--groups", "4", "--articles", "30", "--doc-mix", "article:0.8,review:0.2",
              "--seed", "9"})
      .out;
}

}  // namespace

TEST(Cli, IndicatorsMarkdownHappyPath) {
  const auto corpus = synth_corpus();
  const auto r = run({"indicators", "--input", "-", "--format", "markdown"}, corpus);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("| Group | N Pub | N Cit | SC JIF | JIF_z | cJIF_z | %I3 | %PR6 |", 0), 0u);
  EXPECT_NE(r.out.find(" [1] |"), std::string::npos);
}

TEST(Cli, CorrelateMinimalMatrix) {
  const auto r = run({"correlate", "--input", kFixture, "--columns", "sc_jif,pct_i3", "--threshold", "0.01"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| pct_i3 | 0.56 |"), std::string::npos) << r.out;

  const auto table = run({"indicators", "--csv"}, synth_corpus());
  ASSERT_EQ(table.code, 0);
  const auto m = run({"correlate", "--columns", "sc_jif,i3", "--threshold", "0.01"}, table.out);
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("| i3 |"), std::string::npos);
}

TEST(Cli, MissingInputIsDataError) {
  const auto r = run({"indicators", "--input", "/nonexistent/missing.csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.csv"), std::string::npos);
}

TEST(Cli, ValidationErrorsGoToStderr) {
  const auto r = run({"indicators"}, "article_id,group,pub_year,doc_type,citations\na,J,2008,article,-1\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("row:2 col:citations", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"indicators", "--csv", "--markdown"}).code, 1);
  EXPECT_EQ(run({"indicators", "--csv", "--format", "csv"}).code, 1);
  EXPECT_EQ(run({"indicators", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"indicators", "--scheme", "0:60:1,50:100:2"}, synth_corpus()).code, 1);
  EXPECT_EQ(run({"correlate", "--input", kFixture, "--columns", "nope,sc_jif"}).code, 1);
  EXPECT_EQ(run({"synth", "--doc-mix", "article:0.5"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TransformOutput) {
  const auto corpus = synth_corpus();
  const auto r = run({"transform", "--stratify", "doc-type", "--t-score"}, corpus);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("article_id,group,doc_type,q,z,t\n", 0), 0u);
  const auto plain = run({"transform"}, corpus);
  EXPECT_EQ(plain.out.rfind("article_id,group,doc_type,q,z\n", 0), 0u);
  EXPECT_EQ(std::count(plain.out.begin(), plain.out.end(), '\n'), 121);
}

TEST(Cli, SynthWritesValidCorpusAndIsDeterministic) {
  const auto a = run({"synth", "--groups", "3", "--articles", "5,6,7", "--outlier", "0:270", "--seed", "4"});
  const auto b = run({"synth", "--groups", "3", "--articles", "5,6,7", "--outlier", "0:270", "--seed", "4"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("article_id,group,pub_year,doc_type,citations\n", 0), 0u);
  EXPECT_NE(a.out.find(",270\n"), std::string::npos);
  EXPECT_EQ(run({"indicators"}, a.out).code, 0);
  const auto nb = run({"synth", "--distribution", "negbin", "--nb-r", "2", "--nb-p", "0.4"});
  EXPECT_EQ(nb.code, 0) << nb.err;
}

TEST(Cli, ReportIsDeterministicWithPermutations) {
  const auto corpus = synth_corpus();
  const std::vector<std::string> args{"report", "--method", "permutation", "--permutations", "2000",
                                      "--seed", "5"};
  const auto a = run(args, corpus);
  const auto b = run(args, corpus);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("| n_cit |"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "citeimpact_cli_out.csv";
  const auto r = run({"correlate", "--input", kFixture, "--csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first, "row,column,tau,p_value,significant,n,concordant,discordant,ties_x,ties_y");
  std::filesystem::remove(path);
}
