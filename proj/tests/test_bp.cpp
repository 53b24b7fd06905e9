#include <gtest/gtest.h>

#include "schubert/bp.hpp"
#include "schubert/io.hpp"
#include "schubert/order.hpp"
#include "schubert/parastab.hpp"
#include "schubert/smooth.hpp"

using namespace schubert;

namespace {

SystemPtr a3() { return RootSystem::build({Family::A, 3}); }

}  // namespace

TEST(Decompose, TrivialParabolics) {
  auto sys = a3();
  auto w = parse_element(*sys, "3412");
  auto none = decompose(w, SimpleSubset::none(3), Side::Right);
  EXPECT_EQ(none.v, w);
  EXPECT_EQ(none.u, identity(*sys));
  EXPECT_TRUE(none.is_bp);
  auto all = decompose(w, SimpleSubset::all(3), Side::Right);
  EXPECT_EQ(all.v, identity(*sys));
  EXPECT_EQ(all.u, w);
  EXPECT_TRUE(all.is_bp);
}

TEST(Decompose, LengthAdditiveOnBothSides) {
  auto sys = RootSystem::build({Family::B, 3});
  for (const auto& w : enumerate_group(*sys, kDefaultCap))
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      SimpleSubset J(3, bits);
      auto r = parabolic_decompose(w, J, Side::Right);
      ASSERT_EQ(r.v * r.u, w);
      ASSERT_EQ(r.v.length() + r.u.length(), w.length());
      ASSERT_TRUE(in_parabolic(r.u, J));
      ASSERT_TRUE(is_min_coset_rep(r.v, J));
      auto l = parabolic_decompose(w, J, Side::Left);
      ASSERT_EQ(l.u * l.v, w);
      ASSERT_EQ(l.v.length() + l.u.length(), w.length());
      ASSERT_TRUE(in_parabolic(l.u, J));
    }
}

TEST(Decompose, Example4231) {
  auto sys = a3();
  auto J = SimpleSubset::of(3, {0, 2});
  auto d = parabolic_decompose(parse_element(*sys, "4231"), J, Side::Right);
  EXPECT_TRUE(in_parabolic(d.u, J));
  EXPECT_EQ(d.v.length() + d.u.length(), 5);
}

TEST(BP, LongestParabolicFactorIsAlwaysBP) {
  auto sys = RootSystem::build({Family::D, 4});
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    SimpleSubset J(4, bits);
    auto u = longest_element(*sys, J);
    for (const auto& v : enumerate_group(*sys, kDefaultCap)) {
      if (!is_min_coset_rep(v, J)) continue;
      ASSERT_TRUE(is_bp(v * u, J, Side::Right));
    }
  }
}

TEST(BP, ConditionsAgreeExhaustively) {
  for (auto t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}, CartanType{Family::G, 2}}) {
    auto sys = RootSystem::build(t);
    for (const auto& w : enumerate_group(*sys, kDefaultCap))
      for (std::uint32_t bits = 0; bits < (1u << sys->rank()); ++bits) {
        SimpleSubset J(sys->rank(), bits);
        auto c = bp_conditions(w, J);
        ASSERT_EQ(c.max_in_interval, c.poincare_factors) << t.name() << " " << format_element(w);
        ASSERT_EQ(c.max_in_interval, c.support_descents) << t.name() << " " << format_element(w);
        ASSERT_NO_THROW(is_bp(w, J, Side::Right, BPMode::Verify));
        ASSERT_NO_THROW(is_bp(w, J, Side::Left, BPMode::Verify));
      }
  }
}

TEST(BP, Example4231) {
  auto sys = a3();
  auto w = parse_element(*sys, "4231");
  auto J = SimpleSubset::of(3, {0, 1});
  // condition (1) by brute force: the maximum of [e, w] cap W_J is u
  auto d = parabolic_decompose(w, J, Side::Right);
  bool is_max = true;
  for (const auto& x : lower_interval_bruhat(w))
    if (in_parabolic(x, J) && !bruhat_leq(x, d.u)) is_max = false;
  EXPECT_EQ(is_bp(w, J, Side::Right, BPMode::Verify), is_max);
  EXPECT_TRUE(is_bp(parse_element(*sys, "2134"), SimpleSubset::all(3), Side::Right));
}

TEST(ChainBP, Examples) {
  auto sys = a3();
  auto s = simple_reflection(*sys, 0);
  auto one = decompose(s, SimpleSubset::all(3).without(0), Side::Right);
  EXPECT_TRUE(one.is_bp);
  EXPECT_TRUE(one.is_chain);
  EXPECT_EQ(one.v, s);

  auto w0 = parse_element(*sys, "4321");
  auto d = decompose(w0, SimpleSubset::of(3, {0, 1}), Side::Right);
  EXPECT_TRUE(d.is_bp);
  EXPECT_TRUE(d.is_chain);
  EXPECT_EQ(format_element(d.u), "3214");
  EXPECT_TRUE(is_maximal_in_quotient(d.v, SimpleSubset::of(3, {0, 1})));

  auto w = parse_element(*sys, "3412");
  for (int leaf : leaves(*sys, support(w)))
    for (Side side : {Side::Right, Side::Left})
      EXPECT_FALSE(is_chain_bp(w, support(w).without(leaf), side));
  EXPECT_FALSE(find_chain_bp(w).has_value());
  EXPECT_FALSE(find_chain_bp(parse_element(*sys, "4231")).has_value());
  EXPECT_TRUE(find_chain_bp(parse_element(*sys, "2143")).has_value());
}

TEST(ChainBP, GrassmannianFlag) {
  auto sys = a3();
  auto w = parse_element(*sys, "2341");
  auto d = decompose(w, SimpleSubset::of(3, {2}), Side::Right);
  EXPECT_TRUE(d.is_grassmannian);
  EXPECT_FALSE(decompose(w, SimpleSubset::of(3, {1, 2}), Side::Right).is_grassmannian);
  EXPECT_FALSE(decompose(w, SimpleSubset::none(3), Side::Right).is_grassmannian);
}

TEST(Leaves, Diagrams) {
  auto d5 = RootSystem::build({Family::D, 5});
  EXPECT_EQ(leaves(*d5, SimpleSubset::all(5)), (std::vector<int>{0, 1, 4}));
  auto a3s = a3();
  EXPECT_EQ(leaves(*a3s, SimpleSubset::of(3, {0, 2})), (std::vector<int>{0, 2}));
  auto e6 = RootSystem::build({Family::E, 6});
  EXPECT_EQ(leaves(*e6, SimpleSubset::all(6)), (std::vector<int>{0, 1, 5}));
}

TEST(MaximalInQuotient, SmoothA4ChainFactorsSatisfySupportInclusion) {
  auto sys = RootSystem::build({Family::A, 4});
  for (const auto& w : enumerate_group(*sys, kDefaultCap)) {
    if (is_smooth(w).smooth != Tri::True) continue;
    for (int leaf : leaves(*sys, support(w))) {
      auto J = support(w).without(leaf);
      if (!is_bp(w, J, Side::Right)) continue;
      auto v = parabolic_decompose(w, J, Side::Right).v;
      if (is_maximal_in_quotient(v, J)) { ASSERT_TRUE(support(v).subset_of(levi_support(w).simples)); }
    }
  }
}

TEST(EKL, Catalogue) {
  EXPECT_THROW(EKLIndex::make(5, 5), InvalidArgument);
  EXPECT_THROW(EKLIndex::make(9, 5), InvalidArgument);
  EXPECT_THROW(EKLIndex::make(6, 4), InvalidArgument);
  auto e6 = RootSystem::build({Family::E, 6});
  auto idx = EKLIndex::make(6, 5);
  auto w = ekl_element(*e6, idx);
  auto u = ekl_u(*e6, 6);
  auto v = ekl_v(*e6, 5);
  EXPECT_EQ(w, v * u);
  EXPECT_EQ(w.length(), v.length() + u.length());
  // J_6 is D5 with 20 positive roots
  EXPECT_EQ(u.length(), 20);
  EXPECT_EQ(ekl_J(*e6, 6), SimpleSubset::all(6).without(1));
  auto cat = ekl_catalogue(*e6);
  ASSERT_EQ(cat.size(), 2u);
  EXPECT_FALSE(cat[0].inverse);
  EXPECT_TRUE(cat[1].inverse);
  EXPECT_EQ(cat[1].element, inverse(w));
  EXPECT_EQ(ekl_catalogue(*RootSystem::build({Family::E, 8})).size(), 12u);
}
