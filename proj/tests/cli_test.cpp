#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NODAL_VERIFY_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string status_of(const nlohmann::json& report, const std::string& id) {
  for (const auto& e : report.at("entries"))
    if (e.at("claim_id") == id) return e.at("status");
  return "missing";
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "nodal_cli_" + name; }

}  // namespace

TEST(Cli, SegreReport) {
  const auto r = run("verify-segre --seed 3");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("suite"), "verify-segre");
  EXPECT_EQ(j.at("seed"), 3);
  EXPECT_EQ(status_of(j, "prop-2.3-incidence"), "pass");
  EXPECT_EQ(status_of(j, "eq-4-coble-g2"), "report-only");
  for (const auto& e : j.at("entries")) {
    EXPECT_TRUE(e.at("ms").is_null());
    EXPECT_NE(e.at("status"), "fail");
  }
}

TEST(Cli, HkReportAndText) {
  const auto r = run("verify-hk");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(status_of(nlohmann::json::parse(r.out), "thm-6.1-isometry"), "pass");
  const auto t = run("verify-hk --format text");
  ASSERT_EQ(t.status, 0);
  EXPECT_NE(t.out.find("pass  thm-6.1-infinite-order"), std::string::npos);
}

TEST(Cli, SameSeedSameBytes) {
  for (const char* cmd : {"verify-lattice", "verify-detrep --seed 5", "verify-sixnodal --seed 2"}) {
    const auto a = run(cmd), b = run(std::string(cmd) + " --jobs 3");
    EXPECT_EQ(a.status, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, SynthesisFixtureReplays) {
  const std::string f1 = tmp("a.json"), f2 = tmp("b.json");
  ASSERT_EQ(run("synth-sixnodal --seed 42 --out " + f1).status, 0);
  ASSERT_EQ(run("synth-sixnodal --seed 42 --out " + f2).status, 0);
  const std::string fixture = slurp(f1);
  ASSERT_FALSE(fixture.empty());
  EXPECT_EQ(fixture, slurp(f2));
  const auto replay = run("report --in " + f1);
  ASSERT_EQ(replay.status, 0);
  const auto j = nlohmann::json::parse(replay.out);
  EXPECT_EQ(j.at("seed"), 42);
  EXPECT_EQ(status_of(j, "prop-3.1-synthesis-identity"), "pass");
  EXPECT_EQ(status_of(j, "prop-3.1-nodes-odp"), "pass");
}

TEST(Cli, ReferenceFixture) {
  const std::string f = tmp("ref.json");
  ASSERT_EQ(run("synth-sixnodal --family reference --seed 4 --out " + f).status, 0);
  const auto j = nlohmann::json::parse(run("report --in " + f).out);
  EXPECT_EQ(status_of(j, "prop-3.1-nodes-odp"), "pass");
  EXPECT_EQ(status_of(j, "prop-3.1-synthesis-identity"), "missing");
}

TEST(Cli, TamperedFixtureFails) {
  const std::string f = tmp("t.json");
  ASSERT_EQ(run("synth-sixnodal --seed 42 --out " + f).status, 0);
  auto j = nlohmann::json::parse(slurp(f));
  j["nodes"][1] = nlohmann::json::array({"1", "1", "1", "1", "7"});
  std::ofstream(f) << j.dump();
  EXPECT_EQ(run("report --in " + f).status, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify-hk --format yaml").status, 2);
  EXPECT_EQ(run("report").status, 2);
  EXPECT_EQ(run("report --in /nonexistent/fixture.json").status, 3);
  const std::string f = tmp("bad.json");
  std::ofstream(f) << "{ not json";
  EXPECT_EQ(run("report --in " + f).status, 3);
}

TEST(Cli, OutputFiles) {
  const std::string table = tmp("meet.txt");
  ASSERT_EQ(run("verify-lattice --format text --out " + table).status, 0);
  EXPECT_NE(slurp(table).find("e1"), std::string::npos);
  const std::string detrep = tmp("detrep.json");
  ASSERT_EQ(run("verify-detrep --out " + detrep).status, 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(detrep)).at("matrix").size(), 9u);
}
