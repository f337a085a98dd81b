// End-to-end tests driving the installed binary through a shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + TREELIKE_CLI_PATH + " " + args +
                    " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CmdResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string make_temp_dir() {
  char tmpl[] = "/tmp/treelike_cli_test_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  EXPECT_NE(dir, nullptr);
  return dir ? dir : "/tmp";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_line_value(const std::string& text, const std::string& key) {
  auto pos = text.find(key);
  EXPECT_NE(pos, std::string::npos) << key << " not found in:\n" << text;
  if (pos == std::string::npos) return 0.0;
  return std::stod(text.substr(pos + key.size()));
}

TEST(CliTest, GrowEmitsPredictedHeaderAndEdgeList) {
  CmdResult r = run_cli("grow --family cayley -n 4 -t 3 --format edges");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("# predicted 53 52\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n53 52\n"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t edge_lines = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line != "53 52") ++edge_lines;
  EXPECT_EQ(edge_lines, 52u);

  CmdResult again = run_cli("grow --family cayley -n 4 -t 3 --format edges");
  EXPECT_EQ(again.out, r.out);
}

TEST(CliTest, GrowDotOutputHasTenVertices) {
  CmdResult r = run_cli("grow --family tgraph -t 2 --format dot");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("graph tree {"), std::string::npos);
  EXPECT_NE(r.out.find("// predicted 10 9"), std::string::npos);
  std::size_t vertices = 0;
  for (std::size_t pos = r.out.find("[gen="); pos != std::string::npos;
       pos = r.out.find("[gen=", pos + 1))
    ++vertices;
  EXPECT_EQ(vertices, 10u);
}

TEST(CliTest, GrowSubdividedEdgeIsTheFourVertexPath) {
  CmdResult r = run_cli("grow --family subdivision -m 2 --seed edge -t 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "# treelike family=subdivision m=2 seed=edge t=1\n"
            "# predicted 4 3\n"
            "4 3\n"
            "0 2\n"
            "1 3\n"
            "2 3\n");
}

TEST(CliTest, WienerReportsEveryRouteWithVerdicts) {
  CmdResult r = run_cli("wiener --family tgraph -t 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("oracle: 117"), std::string::npos);
  EXPECT_NE(r.out.find("canonical"), std::string::npos);
  EXPECT_NE(r.out.find("tgraph_closed"), std::string::npos);

  CmdResult star = run_cli("wiener --family star_fractal -w 1 -m 1 -t 1");
  EXPECT_EQ(star.status, 0);
  EXPECT_NE(star.out.find("oracle: 9"), std::string::npos);
  EXPECT_NE(star.out.find("star_fractal_step_compact"), std::string::npos);
  EXPECT_NE(star.out.find("23/3"), std::string::npos);
  EXPECT_NE(star.out.find("mismatch"), std::string::npos);
  EXPECT_NE(star.out.find("undefined"), std::string::npos);

  CmdResult verbose = run_cli("wiener --family cayley -n 3 -t 2 --verbose");
  EXPECT_EQ(verbose.status, 0);
  EXPECT_NE(verbose.out.find("intermediates:"), std::string::npos);
  EXPECT_NE(verbose.out.find("theta="), std::string::npos);
  EXPECT_NE(verbose.out.find("omega="), std::string::npos);
  EXPECT_NE(verbose.out.find("gamma="), std::string::npos);
}

TEST(CliTest, MfptReportsExactValueAndReproducibleMonteCarlo) {
  CmdResult r = run_cli("mfpt --family tgraph -t 2 --mc-trials 2000 --rng-seed 7");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("exact: 117/5"), std::string::npos);
  EXPECT_NE(r.out.find("solver: 117/5"), std::string::npos);
  EXPECT_NE(r.out.find("printed_lemma: 117/10"), std::string::npos);
  EXPECT_NE(r.out.find("mc: mean="), std::string::npos);

  CmdResult again = run_cli("mfpt --family tgraph -t 2 --mc-trials 2000 --rng-seed 7");
  EXPECT_EQ(again.out, r.out);
  CmdResult threaded =
      run_cli("mfpt --family tgraph -t 2 --mc-trials 2000 --rng-seed 7 --threads 4");
  EXPECT_EQ(threaded.out, r.out);
  CmdResult reseeded = run_cli("mfpt --family tgraph -t 2 --mc-trials 2000 --rng-seed 8");
  EXPECT_NE(reseeded.out, r.out);
}

TEST(CliTest, VerifySmallGridPassesAndWritesAStableLedger) {
  std::string dir = make_temp_dir();
  std::string args =
      "verify --step-seed-max 5 --closed-seed-max 4 --max-m 2 --max-w 2 --max-t 2 "
      "--cayley-n-max 4 --cayley-t-max 2 --ledger audit.jsonl";
  CmdResult r = run_cli(args, "TREELIKE_OUTPUT_DIR=" + dir);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("canonical: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("mfpt_distance_lemma"), std::string::npos);

  std::string ledger = read_file(dir + "/audit.jsonl");
  EXPECT_FALSE(ledger.empty());
  EXPECT_EQ(ledger.front(), '{');

  CmdResult again = run_cli(args, "TREELIKE_OUTPUT_DIR=" + dir);
  EXPECT_EQ(again.out, r.out);
  EXPECT_EQ(read_file(dir + "/audit.jsonl"), ledger);
}

TEST(CliTest, ScaleFitsThePowerLaw) {
  CmdResult r = run_cli("scale --family tgraph --t-lo 4 --t-hi 12");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("law: power"), std::string::npos);
  double fitted = parse_line_value(r.out, "fitted: ");
  EXPECT_NEAR(fitted, std::log(6.0) / std::log(3.0), 0.05);
  double analytic = parse_line_value(r.out, "analytic: ");
  EXPECT_NEAR(analytic, std::log(6.0) / std::log(3.0), 1e-12);

  CmdResult csv = run_cli("scale --family exponential -m 2 --t-lo 4 --t-hi 10 --format csv");
  EXPECT_EQ(csv.status, 0);
  EXPECT_NE(csv.out.find("t,vertices,wiener,mfpt,x,y"), std::string::npos);
  std::size_t rows = 0;
  for (std::size_t pos = csv.out.find('\n'); pos != std::string::npos;
       pos = csv.out.find('\n', pos + 1))
    ++rows;
  EXPECT_EQ(rows, 8u);  // header + 7 generations
}

TEST(CliTest, SolveDimFindsTheKnownTriples) {
  CmdResult r = run_cli("solve-dim --max 50");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("solutions: 107"), std::string::npos);
  EXPECT_NE(r.out.find("w=3 n=4 m=2"), std::string::npos);
  EXPECT_NE(r.out.find("w=1 n=1 m=1"), std::string::npos);
}

TEST(CliTest, EverySubcommandSpeaksJson) {
  auto parse = [](const std::string& args) {
    CmdResult r = run_cli(args);
    EXPECT_EQ(r.status, 0) << args;
    return nlohmann::json::parse(r.out, nullptr, false);
  };
  nlohmann::json grow = parse("grow --family tgraph -t 2 --format json");
  ASSERT_FALSE(grow.is_discarded());
  EXPECT_EQ(grow["vertices"], 10);
  EXPECT_EQ(grow["edges"].size(), 9u);

  nlohmann::json wiener = parse("wiener --family tgraph -t 2 --format json");
  ASSERT_FALSE(wiener.is_discarded());
  EXPECT_EQ(wiener["oracle"], "117");
  EXPECT_GE(wiener["routes"].size(), 2u);

  nlohmann::json mfpt = parse("mfpt --family tgraph -t 2 --format json");
  ASSERT_FALSE(mfpt.is_discarded());
  EXPECT_EQ(mfpt["exact"], "117/5");

  nlohmann::json scale = parse("scale --family subdivision -m 1 --t-lo 4 --t-hi 10 --format json");
  ASSERT_FALSE(scale.is_discarded());
  EXPECT_EQ(scale["law"], "power");
  EXPECT_EQ(scale["series"].size(), 7u);

  nlohmann::json dims = parse("solve-dim --max 10 --format json");
  ASSERT_FALSE(dims.is_discarded());
  EXPECT_GT(dims["solutions"].size(), 0u);

  nlohmann::json verify = parse(
      "verify --step-seed-max 4 --closed-seed-max 3 --max-m 1 --max-w 1 --max-t 1 "
      "--cayley-n-max 3 --cayley-t-max 2 --ledger '' --format json");
  ASSERT_FALSE(verify.is_discarded());
  EXPECT_EQ(verify["canonical_pass"], true);
  EXPECT_EQ(verify["formulas"].size(), 28u);
}

TEST(CliTest, ExitCodesFollowTheContract) {
  EXPECT_EQ(run_cli("").status, 1);                           // missing subcommand
  EXPECT_EQ(run_cli("grow").status, 1);                       // missing family
  EXPECT_EQ(run_cli("grow --family bogus").status, 1);        // bad family
  EXPECT_EQ(run_cli("grow --family cayley -n 3 -t 0").status, 1);
  EXPECT_EQ(run_cli("nonsense").status, 1);                   // unknown subcommand
  EXPECT_EQ(run_cli("--help").status, 0);
  // Predicted size far beyond the construction cap.
  EXPECT_EQ(run_cli("grow --family exponential -m 4 -t 12").status, 3);
}

TEST(CliTest, ConfigFileIsReadAndFlagsOverrideIt) {
  std::string dir = make_temp_dir();
  std::string cfg = dir + "/model.cfg";
  {
    std::ofstream out(cfg);
    out << "# comment line\n";
    out << "family=tgraph t=2\n";
  }
  CmdResult from_config = run_cli("wiener --config " + cfg);
  EXPECT_EQ(from_config.status, 0);
  EXPECT_NE(from_config.out.find("spec: family=tgraph t=2"), std::string::npos);
  EXPECT_NE(from_config.out.find("oracle: 117"), std::string::npos);

  CmdResult overridden = run_cli("wiener --config " + cfg + " -t 1");
  EXPECT_EQ(overridden.status, 0);
  EXPECT_NE(overridden.out.find("spec: family=tgraph t=1"), std::string::npos);
  EXPECT_NE(overridden.out.find("oracle: 9"), std::string::npos);

  EXPECT_EQ(run_cli("wiener --config " + dir + "/absent.cfg").status, 1);
}

TEST(CliTest, OutputFlagWritesTheSameBytesAsStdout) {
  std::string dir = make_temp_dir();
  CmdResult to_stdout = run_cli("grow --family star_fractal -w 2 -m 3 -t 2 --format edges");
  EXPECT_EQ(to_stdout.status, 0);
  CmdResult to_file = run_cli("grow --family star_fractal -w 2 -m 3 -t 2 --format edges -o " +
                              dir + "/tree.txt");
  EXPECT_EQ(to_file.status, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(read_file(dir + "/tree.txt"), to_stdout.out);

  // Relative -o paths land in the override directory.
  CmdResult via_env = run_cli("grow --family star_fractal -w 2 -m 3 -t 2 --format edges -o env.txt",
                              "TREELIKE_OUTPUT_DIR=" + dir);
  EXPECT_EQ(via_env.status, 0);
  EXPECT_EQ(read_file(dir + "/env.txt"), to_stdout.out);
}

}  // namespace
