#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/inversion.hpp"
#include "schubert/io.hpp"

using namespace schubert;

namespace {

SystemPtr a(int r) { return RootSystem::build({Family::A, r}); }

std::set<std::string> root_set(const RootSystem& sys, const RootMask& m) {
  std::set<std::string> out;
  for (int k = 0; k < sys.num_positive(); ++k)
    if (m.test(k)) out.insert(sys.root_name(k));
  return out;
}

}  // namespace

TEST(Inversions, Golden4231) {
  auto sys = a(3);
  auto w = parse_element(*sys, "4231");
  auto n = inversions_left(w);
  EXPECT_EQ(n.side, Side::Left);
  EXPECT_EQ(root_set(*sys, n.roots.mask()),
            (std::set<std::string>{"a1", "a1+a2", "a1+a2+a3", "a2+a3", "a3"}));
  EXPECT_EQ(root_set(*sys, n.roots.complement().mask()), (std::set<std::string>{"a2"}));
  EXPECT_TRUE(inversions_left(identity(*sys)).roots.mask().none());
}

TEST(Inversions, SimpleInversions) {
  auto sys = a(3);
  EXPECT_EQ(simple_inversions(parse_element(*sys, "3412")), SimpleSubset::of(3, {1}));
  EXPECT_EQ(simple_inversions(parse_element(*sys, "2143")), SimpleSubset::of(3, {0, 2}));
  EXPECT_EQ(simple_inversions(parse_element(*sys, "4321")), SimpleSubset::all(3));
}

TEST(Inversions, RightSetIsLeftSetOfInverse) {
  auto sys = a(4);
  for (const auto& p : oracle::all_perms(5)) {
    auto w = perm_to_element(*sys, p);
    ASSERT_EQ(inversions_right(w).roots.mask(), oracle::perm_left_inversions(*sys, oracle::perm_inverse(p)));
  }
}

TEST(Biclosed, RoundTripExamples) {
  auto sys = a(3);
  EXPECT_EQ(element_from_biclosed(RootSubset(*sys, RootMask())), identity(*sys));
  EXPECT_EQ(element_from_biclosed(RootSubset(*sys, sys->all_positive())), parse_element(*sys, "4321"));
  RootSubset n(*sys, sys->all_positive() & ~RootMask().set(1));
  EXPECT_EQ(format_element(element_from_biclosed(n)), "4231");
  // {a1, a2} is not closed
  EXPECT_THROW(element_from_biclosed(RootSubset::from_indices(*sys, {0, 1})), InvalidArgument);
}

TEST(Biclosed, CountEqualsGroupOrder) {
  for (auto t : {CartanType{Family::A, 2}, CartanType{Family::A, 3}, CartanType{Family::B, 2},
                 CartanType{Family::G, 2}}) {
    auto sys = RootSystem::build(t);
    oracle::GridCone grid(*sys);
    auto g = enumerate_group(*sys, kDefaultCap);
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sys->num_positive()); ++bits) {
      RootMask m(bits);
      if (!grid.biclosed(m, sys->all_positive())) continue;
      ++count;
      ASSERT_EQ(element_from_biclosed(RootSubset(*sys, m)).left_mask(), m);
    }
    EXPECT_EQ(count, g.size()) << t.name();
  }
}

TEST(Involutions, LeftEqualsRightExactlyForInvolutions) {
  for (auto t : {CartanType{Family::A, 4}, CartanType{Family::B, 3}, CartanType{Family::G, 2},
                 CartanType{Family::F, 4}}) {
    auto sys = RootSystem::build(t);
    for (const auto& w : enumerate_group(*sys, kDefaultCap))
      ASSERT_EQ(w.left_mask() == w.right_mask(), w * w == identity(*sys)) << t.name();
  }
}

TEST(Concat, Examples) {
  auto sys = a(3);
  auto w0 = parse_element(*sys, "4321");
  auto v = parse_element(*sys, "3214");
  EXPECT_TRUE(check_concat(w0, v, inverse(v) * w0));
  auto s1 = simple_reflection(*sys, 0);
  EXPECT_TRUE(check_concat(s1, identity(*sys), s1));
  EXPECT_FALSE(check_concat(identity(*sys), s1, s1));
  EXPECT_THROW(check_concat(w0, s1, s1), InvalidArgument);
}

TEST(Concat, UnionFormulaMatchesLengthAdditivity) {
  auto sys = RootSystem::build({Family::B, 3});
  auto g = enumerate_group(*sys, kDefaultCap);
  for (const auto& v : g)
    for (const auto& u : g) {
      auto w = v * u;
      bool additive = w.length() == v.length() + u.length();
      ASSERT_EQ(check_concat(w, v, u), additive);
      if (!additive) continue;
      bool pos = false;
      RootMask moved = act_on_mask(v, u.left_mask(), &pos);
      ASSERT_TRUE(pos);
      ASSERT_TRUE((moved & v.left_mask()).none());
      ASSERT_EQ(moved | v.left_mask(), w.left_mask());
    }
}
