#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/io.hpp"
#include "schubert/order.hpp"
#include "schubert/smooth.hpp"

using namespace schubert;

namespace {

std::vector<std::string> names(const std::vector<WeylElement>& v) {
  std::vector<std::string> out;
  for (const auto& w : v) out.push_back(format_element(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Patterns, Examples) {
  EXPECT_TRUE(avoids_pattern({1, 2, 3, 4}, {4, 2, 3, 1}));
  EXPECT_FALSE(avoids_pattern({4, 2, 3, 1}, {4, 2, 3, 1}));
  EXPECT_FALSE(avoids_pattern({4, 5, 3, 1, 2}, {3, 4, 1, 2}));
  EXPECT_THROW(avoids_pattern({1, 1, 2}, {1, 2}), InvalidArgument);
}

TEST(Patterns, AgreeWithSubsequenceScan) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all_perms(n))
      for (const auto& q : {oracle::Perm{4, 2, 3, 1}, oracle::Perm{3, 4, 1, 2}, oracle::Perm{2, 1, 3}})
        ASSERT_EQ(avoids_pattern(p, q), !oracle::contains_pattern(p, q));
}

TEST(Smooth, A3) {
  auto sys = RootSystem::build({Family::A, 3});
  EXPECT_TRUE(is_rationally_smooth(identity(*sys)));
  std::set<std::string> singular;
  for (const auto& w : enumerate_group(*sys, kDefaultCap)) {
    auto r = is_smooth(w);
    EXPECT_EQ(r.method, SmoothMethod::PatternAvoidance);
    EXPECT_EQ(r.smooth == Tri::True, r.rationally_smooth);
    if (r.smooth == Tri::False) singular.insert(format_element(w));
  }
  EXPECT_EQ(singular, (std::set<std::string>{"3412", "4231"}));
}

TEST(Smooth, TypeAPatternAndPalindromeAgreeThroughRankFive) {
  for (int n = 2; n <= 6; ++n) {
    auto sys = RootSystem::build({Family::A, n - 1});
    for (const auto& p : oracle::all_perms(n)) {
      bool pattern = !oracle::contains_pattern(p, {4, 2, 3, 1}) && !oracle::contains_pattern(p, {3, 4, 1, 2});
      auto r = is_smooth(perm_to_element(*sys, p));
      ASSERT_EQ(r.smooth == Tri::True, pattern);
      ASSERT_EQ(r.rationally_smooth, pattern);
    }
  }
}

TEST(Smooth, Examples) {
  auto a4 = RootSystem::build({Family::A, 4});
  // 4512 is an occurrence of 3412
  EXPECT_TRUE(oracle::contains_pattern({4, 5, 1, 2, 3}, {3, 4, 1, 2}));
  EXPECT_EQ(is_smooth(parse_element(*a4, "45123")).smooth, Tri::False);
  EXPECT_EQ(is_smooth(parse_element(*a4, "34512")).smooth, Tri::False);
  EXPECT_EQ(is_smooth(parse_element(*a4, "45312")).smooth, Tri::False);
  EXPECT_EQ(is_smooth(parse_element(*a4, "23451")).smooth, Tri::True);
  auto g2 = RootSystem::build({Family::G, 2});
  for (const auto& w : enumerate_group(*g2, kDefaultCap)) {
    auto r = is_smooth(w);
    EXPECT_EQ(r.smooth, Tri::Unsupported);
    EXPECT_TRUE(r.rationally_smooth);
  }
  auto d4 = RootSystem::build({Family::D, 4});
  EXPECT_EQ(is_smooth(longest_element(*d4, SimpleSubset::all(4))).method, SmoothMethod::PetersonTransfer);
  EXPECT_EQ(to_string(Tri::Unsupported), "unsupported");
}

TEST(Smooth, SmoothImpliesRationallySmooth) {
  for (auto t : {CartanType{Family::D, 4}, CartanType{Family::B, 3}, CartanType{Family::C, 3}}) {
    auto sys = RootSystem::build(t);
    for (const auto& w : enumerate_group(*sys, kDefaultCap)) {
      auto r = is_smooth(w);
      if (r.smooth == Tri::True) { ASSERT_TRUE(r.rationally_smooth); }
    }
  }
}

TEST(Divisors, Examples) {
  auto sys = RootSystem::build({Family::A, 3});
  auto s = simple_reflection(*sys, 1);
  EXPECT_EQ(smooth_divisors(s), std::vector<WeylElement>{identity(*sys)});
  auto w0 = parse_element(*sys, "4321");
  EXPECT_EQ(names(covers_bruhat(w0)), (std::vector<std::string>{"3421", "4231", "4312"}));
  EXPECT_EQ(names(smooth_divisors(w0)), (std::vector<std::string>{"3421", "4312"}));
  EXPECT_THROW(smooth_divisors(parse_element(*sys, "4231")), InvalidArgument);
  auto g2 = RootSystem::build({Family::G, 2});
  EXPECT_THROW(smooth_divisors(simple_reflection(*g2, 0)), InvalidArgument);
}

TEST(Divisors, EverySmoothNonMaximalA4ElementHasOne) {
  auto sys = RootSystem::build({Family::A, 4});
  for (const auto& w : enumerate_group(*sys, kDefaultCap)) {
    if (is_smooth(w).smooth != Tri::True || w == longest_element(*sys, support(w))) continue;
    ASSERT_FALSE(smooth_divisors(w).empty()) << format_element(w);
  }
}
