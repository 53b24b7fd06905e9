#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schubert/cache.hpp"
#include "schubert/cli.hpp"
#include "schubert/io.hpp"

using namespace schubert;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("schubert-test-" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schubert");
  args.push_back("--cache-dir");
  args.push_back(scratch_dir().string());
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST(Parse, ElementGrammar) {
  auto a3 = RootSystem::build({Family::A, 3});
  auto w = parse_element(*a3, "4231");
  EXPECT_EQ(parse_element(*a3, "4,2,3,1"), w);
  EXPECT_EQ(parse_element(*a3, "s1 s2 s3 s2 s1"), w);
  EXPECT_EQ(parse_element(*a3, "e"), identity(*a3));
  EXPECT_EQ(format_element(w), "4231");
  EXPECT_THROW(parse_element(*a3, "4232"), InvalidArgument);
  EXPECT_THROW(parse_element(*a3, "s4"), InvalidArgument);

  auto g2 = RootSystem::build({Family::G, 2});
  EXPECT_EQ(parse_element(*g2, "s t s"), from_word(*g2, {0, 1, 0}));
  EXPECT_EQ(parse_element(*g2, "sts"), from_word(*g2, {0, 1, 0}));
  EXPECT_EQ(format_element(from_word(*g2, {1, 0})), "s2 s1");
  EXPECT_EQ(format_element(identity(*g2)), "e");

  auto a9 = RootSystem::build({Family::A, 8});
  EXPECT_EQ(format_element(parse_element(*a9, "213456789")), "213456789");
  EXPECT_EQ(parse_subset(*a3, "s1,s3"), SimpleSubset::of(3, {0, 2}));
  EXPECT_EQ(parse_subset(*a3, ""), SimpleSubset::none(3));
  EXPECT_EQ(parse_generator(*a3, "a2"), 1);
}

TEST(Format, RoundTripsEveryElement) {
  for (auto t : {CartanType{Family::A, 4}, CartanType{Family::B, 3}, CartanType{Family::G, 2}}) {
    auto sys = RootSystem::build(t);
    for (const auto& w : enumerate_group(*sys, kDefaultCap)) ASSERT_EQ(parse_element(*sys, format_element(w)), w);
  }
}

TEST(Cache, StoresAndRejectsOtherSchemaVersions) {
  fs::path dir = scratch_dir() / "cache-unit";
  fs::remove_all(dir);
  Cache c(dir);
  CartanType t{Family::B, 3};
  EXPECT_FALSE(c.load("kind", t).has_value());
  c.store("kind", t, Json{{"x", 1}});
  auto got = c.load("kind", t);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ((*got)["x"], 1);

  Json stale = Json::parse(std::ifstream(c.path_for("kind", t, "")));
  EXPECT_EQ(stale["schema_version"], kCacheSchemaVersion);
  stale["schema_version"] = kCacheSchemaVersion + 1;
  std::ofstream(c.path_for("kind", t, "")) << stale.dump();
  EXPECT_FALSE(c.load("kind", t).has_value());

  std::ofstream(c.path_for("kind", t, "")) << "{not json";
  EXPECT_FALSE(c.load("kind", t).has_value());
}

TEST(Cache, GroupEnumerationIsReusedAndRebuilt) {
  fs::path dir = scratch_dir() / "cache-group";
  fs::remove_all(dir);
  Cache c(dir);
  auto sys = RootSystem::build({Family::D, 4});
  auto first = cached_group(*sys, &c, kDefaultCap);
  EXPECT_EQ(first.size(), 192u);
  EXPECT_TRUE(fs::exists(c.path_for("group-enumeration", sys->type(), "")));
  EXPECT_EQ(cached_group(*sys, &c, kDefaultCap), first);
  std::ofstream(c.path_for("group-enumeration", sys->type(), "")) << "[]";
  EXPECT_EQ(cached_group(*sys, &c, kDefaultCap), first);
}

TEST(Cache, DirectoryPrecedence) {
  EXPECT_EQ(Cache::resolve_dir(std::string("/tmp/flag-dir")), fs::path("/tmp/flag-dir"));
  ::setenv("SCHUBERT_CACHE_DIR", "/tmp/env-dir", 1);
  EXPECT_EQ(Cache::resolve_dir(std::nullopt), fs::path("/tmp/env-dir"));
  ::unsetenv("SCHUBERT_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(Cache::resolve_dir(std::nullopt), fs::path("/tmp/xdg/schubert"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST(Cli, Analyze4231) {
  auto r = run({"analyze", "-t", "A", "-r", "3", "-e", "4231", "--check"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["length"], 5);
  EXPECT_EQ(j["N_Delta"], Json::array({"a1", "a3"}));
  EXPECT_EQ(j["smoothness"]["smooth"], false);
  EXPECT_EQ(j["certificate"]["verdict"], "spherical");
  EXPECT_EQ(j["certificate"]["reason"]["kind"], "KempfTransfer");
  EXPECT_EQ(j["certificate"]["reason"]["pair_check"]["accepted"], true);
  EXPECT_EQ(j["check"]["passed"], true);
  EXPECT_EQ(j["poincare"], Json::array({1, 3, 5, 6, 4, 1}));
}

TEST(Cli, AnalyzeG2AndIdentity) {
  auto g = run({"analyze", "-t", "G", "-r", "2", "-e", "s t s"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_EQ(Json::parse(g.out)["length"], 3);
  EXPECT_EQ(Json::parse(g.out)["smoothness"]["smooth"], "unsupported");

  auto e = run({"analyze", "-t", "A", "-r", "3", "-e", "1234"});
  ASSERT_EQ(e.code, kExitOk);
  Json j = Json::parse(e.out);
  EXPECT_EQ(j["certificate"]["reason"]["kind"], "MaximalParabolic");
  EXPECT_EQ(j["certificate"]["reason"]["J"], Json::array());
}

TEST(Cli, EnumerateCounts) {
  EXPECT_EQ(lines(run({"enumerate", "-t", "A", "-r", "3", "--filter", "toral-cell"}).out).size(), 8u);
  EXPECT_EQ(lines(run({"enumerate", "-t", "A", "-r", "3", "--filter", "smooth"}).out).size(), 22u);
  auto all = lines(run({"enumerate", "-t", "G", "-r", "2", "--filter", "all"}).out);
  ASSERT_EQ(all.size(), 12u);
  for (const auto& l : all) EXPECT_TRUE(Json::parse(l).contains("element"));
  auto table = lines(run({"enumerate", "-t", "A", "-r", "2", "--format", "table"}).out);
  EXPECT_EQ(table.size(), 7u);
  EXPECT_EQ(table[0].rfind("element", 0), 0u);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--suite", "gl4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PASS gl4: 24/24 spherical"), std::string::npos);
  auto w = run({"verify", "--suite", "weak-iso", "--max-rank", "3"});
  EXPECT_EQ(w.code, kExitOk) << w.out;
}

TEST(Cli, BP) {
  auto r = run({"bp", "-t", "A", "-r", "3", "-e", "4321", "--leaf", "s3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out)["decomposition"];
  EXPECT_EQ(j["is_bp"], true);
  EXPECT_EQ(j["u"], "3214");

  auto s = run({"bp", "-t", "A", "-r", "3", "-e", "3412", "--leaf", "s1"});
  EXPECT_EQ(Json::parse(s.out)["decomposition"]["is_chain"], false);

  auto t = run({"bp", "-t", "A", "-r", "3", "-e", "3412", "--J", ""});
  Json d = Json::parse(t.out)["decomposition"];
  EXPECT_EQ(d["v"], "3412");
  EXPECT_EQ(d["u"], "1234");
  EXPECT_EQ(d["J"], Json::array());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "-t", "X", "-r", "3", "-e", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "-t", "D", "-r", "3", "-e", "e"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "-t", "A", "-r", "3", "-e", "4444"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "-t", "A", "-r", "5", "--cap", "100"}).code, kExitResourceCap);
  auto bad = run({"analyze", "-t", "A", "-r", "3", "-e", "4231", "--bogus"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}
