#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string command = std::string(QUADCHAIN_BIN) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("quadchain_cli_" + name + ".json");
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, ExtendHumanOutput) {
  const Outcome r = run("extend --pair -1,-1 --system 2,2 --left 5 --right 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1541"), std::string::npos);
  EXPECT_NE(r.out.find("S_{2,2}"), std::string::npos);
}

TEST(Cli, ExtendJson) {
  const Outcome r = run("extend --pair -1,-1 --system 1,1 --left 4 --right 4 --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["terms"], json::parse(R"(["1643","-17","-3","1","-1","-1","1","-3","-17","1643"])"));
}

TEST(Cli, ExtendRejectsNonSolution) {
  EXPECT_EQ(run("extend --pair 2,3 --system 1,1").status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("extend --pair 1 --system 1,1").status, 2);
  EXPECT_EQ(run("extend --pair 1,x --system 1,1").status, 2);
  EXPECT_EQ(run("extend --pair -1,-1 --system 3,1").status, 2);
  EXPECT_EQ(run("nonsense").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify").status, 2);
}

TEST(Cli, ExtendVerifyRoundTrip) {
  const Outcome r = run("extend --pair -31,-11 --system 2,1 --left 3 --right 3 --json");
  ASSERT_EQ(r.status, 0);
  const auto path = temp_file("roundtrip", r.out);
  const Outcome v = run("verify --json --chain-file " + path.string());
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(json::parse(v.out)["valid"], true);

  json corrupted = json::parse(r.out);
  corrupted["terms"][4] = "12";
  const Outcome bad = run("verify --json --chain-file " + temp_file("corrupt", corrupted.dump()).string());
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(json::parse(bad.out)["valid"], false);
  EXPECT_EQ(json::parse(bad.out)["index"], 4);

  json zero = json::parse(r.out);
  zero["terms"][2] = "0";
  const Outcome z = run("verify --json --chain-file " + temp_file("zero", zero.dump()).string());
  EXPECT_EQ(z.status, 1);
  EXPECT_EQ(json::parse(z.out)["reason"], "zero term");

  EXPECT_EQ(run("verify --chain-file " + temp_file("garbage", "{not json").string()).status, 2);
  EXPECT_EQ(run("verify --chain-file /nonexistent/chain.json").status, 2);
}

TEST(Cli, VerifyPair) {
  EXPECT_EQ(run("verify --pair 3,31 --system 2,1").status, 0);
  EXPECT_EQ(run("verify --pair 2,3 --system 1,1").status, 1);
}

TEST(Cli, Siblings) {
  const Outcome r = run("siblings --triple -31,-11,39 --system 2,1 --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["base_least_element"], "-11");
  bool found = false;
  for (const auto& s : j["siblings"]) {
    if (s["sibling_value"] == "13") {
      found = true;
      EXPECT_EQ(s["sibling"]["right"], "-93");
      EXPECT_EQ(s["shares_least_element"], true);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(run("siblings --triple -31,-11,40 --system 2,1").status, 1);
}

TEST(Cli, Third) {
  const Outcome r = run("third --first -17,31,-1809 --second 3,31,10251 --system 2,1 --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["third"]["left"], "603");
  EXPECT_EQ(j["third"]["center"], "31");
  EXPECT_EQ(j["third"]["right"], "51");
  EXPECT_EQ(j["third_verified"], true);

  const Outcome failed = run("third --first 13,-11,-93 --second -31,-11,39 --system 2,1 --json");
  EXPECT_EQ(failed.status, 1);
  EXPECT_EQ(json::parse(failed.out)["hypothesis_nondiv"], false);
}

TEST(Cli, SearchJobsDoNotChangeOutput) {
  const Outcome one = run("search --radius 60 --json");
  const Outcome four = run("search --radius 60 --jobs 4 --json");
  ASSERT_EQ(one.status, 0);
  EXPECT_EQ(one.out, four.out);
  const json j = json::parse(one.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 4u);

  const Outcome single = run("search --radius 40 --system 2,1 --json");
  const json s = json::parse(single.out);
  EXPECT_EQ(s["system"], json::array({2, 1}));
  EXPECT_NE(std::find(s["pairs"].begin(), s["pairs"].end(), json::array({"-31", "-11"})),
            s["pairs"].end());
}

TEST(Cli, Residues) {
  const Outcome r = run("residues --max-m 10 --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 9u);
  EXPECT_EQ(j[0]["m"], 2);
  EXPECT_EQ(j[0]["forbidden"], true);
  EXPECT_EQ(j[1]["forbidden"], false);
  EXPECT_EQ(j[3]["forbidden"], true);
  EXPECT_EQ(j[5]["forbidden"], true);
  EXPECT_EQ(run("residues --max-m 10").status, 0);
}

TEST(Cli, Special) {
  const Outcome r = run("special --json");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["equal_consecutive"]["chains"].size(), 4u);
  EXPECT_EQ(j["constant_run"].size(), 1u);
  EXPECT_EQ(j["palindromic"]["verified_within_box_only"], true);
  const Outcome human = run("special");
  EXPECT_NE(human.out.find("10251, 31, 3, 1, 1, 3, 37, 16897"), std::string::npos);
  EXPECT_NE(human.out.find("7849, -29, -3, 1, -1, 1, -3, -29, 8139"), std::string::npos);
}

}  // namespace
