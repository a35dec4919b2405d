#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "wbd/cli.hpp"

using namespace wbd;
using namespace wbd::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(WBD_FIXTURE_DIR) + "/" + name + ".alg"; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("wbd_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const json& j) const {
    std::ofstream(file(name)) << j.dump(2);
    return file(name);
  }

 private:
  fs::path path_;
};

json load(const std::string& path) { return parse_json_text(read_text_file(path)); }

}  // namespace

TEST(Cli, FixtureFilesMatchGenerators) {
  for (const auto& name : fixture_names()) {
    const auto u = algebra_from_json<Q>(load(fixture_path(name)));
    const auto g = fixture<Q>(name);
    EXPECT_EQ(u.algebra().tensor(), g.algebra().tensor()) << name;
    EXPECT_EQ(u.weight(), g.weight()) << name;
  }
}

TEST(Cli, CheckPassesOnFixtureFiles) {
  for (const auto& name : fixture_names()) {
    const auto r = run({"check", fixture_path(name)});
    EXPECT_EQ(r.code, 0) << name << r.err;
    const json j = parse_json_text(r.out);
    EXPECT_TRUE(j["alternative"]["passed"].get<bool>()) << name;
    EXPECT_TRUE(j["weight"]["passed"].get<bool>()) << name;
  }
}

TEST(Cli, CheckReportsAlternativeWitnessOnPerturbedZorn) {
  TempDir tmp;
  json j = load(fixture_path("zb"));
  // e11 e11 = e11 becomes 2 e11 inside the Zorn block
  for (auto& t : j["structure"])
    if (t[0] == 1 && t[1] == 1 && t[2] == 1) t[3] = "2";
  const auto r = run({"check", tmp.write("bad.alg", j)});
  EXPECT_EQ(r.code, 1);
  const json out = parse_json_text(r.out);
  EXPECT_FALSE(out["alternative"]["passed"].get<bool>());
  EXPECT_TRUE(out["alternative"].contains("witness"));
  EXPECT_NE(r.err.find("not-alternative"), std::string::npos);
}

TEST(Cli, CharacteristicThreeRejected) {
  TempDir tmp;
  json j = load(fixture_path("t3"));
  j["field"] = {{"Fp", 3}};
  for (const char* cmd : {"check", "decompose"}) {
    const auto r = run({cmd, tmp.write("f3.alg", j)});
    EXPECT_EQ(r.code, 1) << cmd;
    EXPECT_NE(r.err.find("invalid-field"), std::string::npos) << r.err;
  }
  j["field"] = {{"Fp", 15}};
  EXPECT_EQ(run({"radical", tmp.write("f15.alg", j)}).code, 1);
}

TEST(Cli, ZeroWeightRejected) {
  TempDir tmp;
  json j = load(fixture_path("t3"));
  j["weight"] = {"0", "0", "0", "0"};
  const auto path = tmp.write("w0.alg", j);
  const auto d = run({"decompose", path});
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.err.find("invalid-weight"), std::string::npos) << d.err;
  const auto c = run({"check", path});
  EXPECT_EQ(c.code, 1);
  EXPECT_FALSE(parse_json_text(c.out)["weight"]["passed"].get<bool>());
}

TEST(Cli, DecomposeVerifyRoundTrip) {
  TempDir tmp;
  for (const char* name : {"t3", "t7", "t9", "zb"}) {
    const std::string out = tmp.file(std::string(name) + ".dec");
    const auto d = run({"decompose", fixture_path(name), "-o", out, "--seed", "5"});
    ASSERT_EQ(d.code, 0) << name << d.err;
    const json dec = load(out);
    EXPECT_TRUE(dec["accepted"].get<bool>());
    EXPECT_EQ(dec["seed"], 5);
    EXPECT_EQ(dec["input_hash"], algebra_hash(dec["algebra"]));
    const auto v = run({"verify", out});
    EXPECT_EQ(v.code, 0) << name << v.err;
    EXPECT_TRUE(parse_json_text(v.out)["accepted"].get<bool>());
  }
}

TEST(Cli, DecomposeIsByteIdentical) {
  TempDir tmp;
  const auto a = run({"decompose", fixture_path("t6"), "-o", tmp.file("a.dec")});
  const auto b = run({"decompose", fixture_path("t6"), "-o", tmp.file("b.dec")});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(read_text_file(tmp.file("a.dec")), read_text_file(tmp.file("b.dec")));
  EXPECT_EQ(run({"decompose", fixture_path("t6")}).out, read_text_file(tmp.file("a.dec")));
}

TEST(Cli, VerifyNamesFailingCheckOnDoctoredFile) {
  TempDir tmp;
  ASSERT_EQ(run({"decompose", fixture_path("t9"), "-o", tmp.file("t9.dec")}).code, 0);
  const json good = load(tmp.file("t9.dec"));

  json moved = good;
  moved["v_basis"].push_back(moved["rad_basis"][0]);
  moved["rad_basis"].erase(0);
  const auto r1 = run({"verify", tmp.write("moved.dec", moved)});
  EXPECT_EQ(r1.code, 1);
  EXPECT_NE(r1.err.find("rad-matches"), std::string::npos) << r1.err;

  json hashed = good;
  hashed["input_hash"] = std::string(64, '0');
  const auto r2 = run({"verify", tmp.write("hash.dec", hashed)});
  EXPECT_EQ(r2.code, 1);
  EXPECT_NE(r2.err.find("input-hash"), std::string::npos) << r2.err;

  json weighted = good;
  std::vector<std::string> one(8, "0");
  one[0] = "1";
  weighted["v_basis"].push_back(one);
  const auto r3 = run({"verify", tmp.write("weight.dec", weighted), "--format", "human"});
  EXPECT_EQ(r3.code, 1);
  EXPECT_NE(r3.err.find("v-in-bar"), std::string::npos) << r3.err;
  EXPECT_NE(r3.out.find("v-in-bar: FAIL"), std::string::npos) << r3.out;
}

TEST(Cli, PeirceCornerDimensions) {
  const auto p = run({"peirce", fixture_path("t9"), "--principal", "--format", "human"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_NE(p.out.find("(5,3,0,0)"), std::string::npos) << p.out;
  const auto q = run({"peirce", fixture_path("t2"), "--idempotent", "0,1,0,0,0"});
  EXPECT_EQ(q.code, 0) << q.err;
  const json j = parse_json_text(q.out);
  EXPECT_EQ(j["components"]["U11"]["dim"], 1);
  EXPECT_EQ(j["components"]["U00"]["dim"], 2);
  EXPECT_TRUE(j["relations"]["passed"].get<bool>());
  const auto bad = run({"peirce", fixture_path("t2"), "--idempotent", "0,0,1,0,0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("not-idempotent"), std::string::npos);
}

TEST(Cli, RadicalAndBRadical) {
  const auto r = run({"radical", fixture_path("t9")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse_json_text(r.out);
  EXPECT_EQ(j["nilradical"]["dim"], 3);
  EXPECT_TRUE(j["certificate"]["certified"].get<bool>());
  const auto b = run({"bradical", fixture_path("t3")});
  ASSERT_EQ(b.code, 0) << b.err;
  const json k = parse_json_text(b.out);
  EXPECT_EQ(k["b_radical"]["dim"], 1);
  EXPECT_EQ(k["b_radical"]["basis"][0], json({"0", "0", "1", "0"}));
  const auto t5 = parse_json_text(run({"bradical", fixture_path("t5")}).out);
  EXPECT_TRUE(t5["b_semisimple"].get<bool>());
}

TEST(Cli, PrimeFieldFile) {
  TempDir tmp;
  json j = load(fixture_path("t6"));
  j["field"] = {{"Fp", 101}};
  const std::string path = tmp.write("t6p.alg", j);
  const auto d = run({"decompose", path, "-o", tmp.file("t6p.dec")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(run({"verify", tmp.file("t6p.dec")}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", fixture_path("t3")}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.alg"}).code, 2);
  EXPECT_EQ(run({"peirce", fixture_path("t3")}).code, 2);
  EXPECT_EQ(run({"decompose", fixture_path("t3"), "--search-bound", "0"}).code, 2);
  EXPECT_EQ(run({"check", fixture_path("t3"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MalformedInputIsParseError) {
  TempDir tmp;
  std::ofstream(tmp.file("broken.alg")) << "{\"field\": \"Q\", ";
  const auto r = run({"check", tmp.file("broken.alg")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("parse-error"), std::string::npos);
  json j = load(fixture_path("t3"));
  j["structure"].push_back({9, 0, 0, "1"});
  const auto s = run({"check", tmp.write("range.alg", j)});
  EXPECT_EQ(s.code, 1);
  EXPECT_NE(s.err.find("parse-error"), std::string::npos);
}
