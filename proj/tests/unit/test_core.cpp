#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "generators.hpp"
#include "pya/core.hpp"
#include "pya/errors.hpp"

using namespace pya;
using pyatest::mseg;
using pyatest::seg;

TEST(Segment, RejectsEmptyOrOffGridSegments) {
  EXPECT_THROW(seg("1", "0"), DomainError);
  EXPECT_THROW(seg("0", "1/2"), DomainError);
  EXPECT_EQ(seg("-1/2", "3/2").length(), 3);
}

TEST(Segment, DualFlipsEndpoints) {
  EXPECT_EQ(seg_dual(seg("0", "1")), seg("-1", "0"));
  EXPECT_EQ(seg_dual(seg("0", "0")), seg("0", "0"));
  EXPECT_EQ(seg_dual(seg("-3/2", "1/2")), seg("-1/2", "3/2"));
  const Segment s(pyatest::sigma(), 0, 1);
  EXPECT_EQ(seg_dual(s), Segment(pyatest::sigma_dual(), -1, 0));
}

TEST(Segment, MinusAndPreminus) {
  EXPECT_EQ(seg_minus(seg("0", "2")), seg("0", "1"));
  EXPECT_FALSE(seg_minus(seg("1", "1")).has_value());
  EXPECT_EQ(seg_preminus(seg("-1", "0")), seg("0", "0"));
  EXPECT_FALSE(seg_preminus(seg("1/2", "1/2")).has_value());
}

TEST(Segment, Precedes) {
  EXPECT_TRUE(precedes(seg("-1", "0"), seg("0", "1")));
  EXPECT_FALSE(precedes(seg("0", "0"), seg("0", "1")));
  EXPECT_FALSE(precedes(seg("-2", "-1"), seg("1", "2")));
  EXPECT_TRUE(precedes(seg("-2", "-1"), seg("0", "2")));  // juxtaposed
  EXPECT_FALSE(precedes(seg("0", "0"), seg("1/2", "1/2")));
  EXPECT_FALSE(precedes(seg("0", "0", pyatest::chi()), seg("1", "1")));
}

TEST(MultiSegment, CanonicalOrderAndPrinting) {
  const MultiSegment m = mseg({{"-1", "0", 1}, {"0", "0", 2}, {"0", "1", 1}});
  EXPECT_EQ(m.to_string(), "{[0,1]_1, [0,0]_1 x2, [-1,0]_1}");
  EXPECT_EQ(m.size(), 4);
  EXPECT_EQ(m.distinct(), 3U);
  EXPECT_EQ(m.dimension(), 6);
  MultiSegment n = m;
  EXPECT_THROW(n.remove(seg("1", "1")), DomainError);
  n.remove(seg("0", "0"), 2);
  EXPECT_EQ(n.multiplicity(seg("0", "0")), 0);
}

TEST(Infinitesimal, ExpandsLatticePoints) {
  const auto lambda = infinitesimal(mseg({{"0", "1", 1}}));
  EXPECT_EQ(lambda, pyatest::support({{"0", 1}, {"1", 1}}));
  EXPECT_EQ(infinitesimal(mseg({{"0", "1", 1}, {"-1", "0", 1}, {"0", "0", 2}})),
            pyatest::support({{"1", 1}, {"0", 4}, {"-1", 1}}));
  EXPECT_TRUE(infinitesimal(MultiSegment{}).empty());
}

TEST(Lines, DecomposeSeparatesGridsAndPairsClasses) {
  const auto lines = decompose_lines(MultiSegment{seg("0", "1"), seg("1/2", "3/2")});
  EXPECT_EQ(lines.size(), 2U);
  const MultiSegment paired{Segment(pyatest::sigma(), 0, 0), Segment(pyatest::sigma_dual(), 0, 0)};
  EXPECT_EQ(decompose_lines(paired).size(), 1U);
  EXPECT_EQ(decompose_class_lines(paired).size(), 2U);
  EXPECT_EQ(decompose_lines(mseg({{"0", "1", 1}, {"-1", "0", 1}, {"0", "0", 2}})).begin()->first.to_string(), "1:0");
}

TEST(Lines, Parity) {
  const LineKey integral{pyatest::triv(), 0};
  const LineKey half{pyatest::triv(), HalfInt::half()};
  EXPECT_EQ(line_parity(integral, {GroupKind::SO_odd, 3}), Parity::bad);
  EXPECT_EQ(line_parity(half, {GroupKind::Sp, 1}), Parity::bad);
  EXPECT_EQ(line_parity(integral, {GroupKind::Sp, 1}), Parity::good);
  EXPECT_EQ(line_parity(half, {GroupKind::SO_odd, 1}), Parity::good);
  EXPECT_EQ(line_parity({pyatest::tau(), 0}, {GroupKind::SO_odd, 2}), Parity::good);
  EXPECT_EQ(line_parity({pyatest::tau(), 0}, {GroupKind::O_even, 2}), Parity::bad);
  EXPECT_EQ(line_parity({pyatest::sigma(), 0}, {GroupKind::Sp, 2}), Parity::nonselfdual);
  EXPECT_THROW(line_parity(integral, {GroupKind::GL, 2}), DomainError);
}

TEST(Validate, AcceptsAndRejects) {
  const GroupType so7{GroupKind::SO_odd, 3};
  EXPECT_TRUE(validate({so7, mseg({{"0", "1", 1}, {"-1", "0", 1}, {"0", "0", 2}})}).empty());

  const auto v = validate({so7, mseg({{"-1", "1", 1}, {"0", "0", 3}})});
  ASSERT_EQ(v.size(), 2U);
  for (const auto& x : v) EXPECT_EQ(x.kind, ViolationKind::bad_line_odd_multiplicity);

  EXPECT_TRUE(validate({{GroupKind::GL, 6}, mseg({{"-1", "1", 1}, {"0", "0", 3}})}).empty());

  const auto wrong_dim = validate({{GroupKind::GL, 5}, mseg({{"-1", "1", 1}, {"0", "0", 3}})});
  ASSERT_EQ(wrong_dim.size(), 1U);
  EXPECT_EQ(wrong_dim[0].kind, ViolationKind::dimension_mismatch);

  const auto asym = validate({{GroupKind::Sp, 1}, mseg({{"0", "2", 1}})});
  ASSERT_FALSE(asym.empty());
  EXPECT_EQ(asym[0].kind, ViolationKind::not_selfdual);
}

TEST(GroupType, StandardDimensionsAndNames) {
  EXPECT_EQ((GroupType{GroupKind::SO_odd, 3}).std_dim(), 6);
  EXPECT_EQ((GroupType{GroupKind::Sp, 2}).std_dim(), 5);
  EXPECT_EQ((GroupType{GroupKind::O_even, 2}).std_dim(), 4);
  EXPECT_EQ((GroupType{GroupKind::GL, 6}).std_dim(), 6);
  EXPECT_EQ((GroupType{GroupKind::SO_odd, 3}).name(), "SO_7");
  EXPECT_EQ((GroupType{GroupKind::SO_odd, 3}).form_sign(), -1);
  EXPECT_EQ((GroupType{GroupKind::Sp, 3}).form_sign(), 1);
}

TEST(CoreProperty, DualityIdentities) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto& rho = (t % 3 == 0) ? pyatest::sigma() : pyatest::triv();
    const HalfInt delta = (t % 2 == 0) ? HalfInt(0) : HalfInt::half();
    const MultiSegment m = pyatest::random_line(rng, rho, delta, 8);
    const MultiSegment n = pyatest::random_line(rng, rho, delta, 8);
    EXPECT_EQ(dual(dual(m)), m);
    EXPECT_EQ(infinitesimal(dual(m)), dual(infinitesimal(m)));
    InfinitesimalParameter sum = infinitesimal(m);
    sum += infinitesimal(n);
    EXPECT_EQ(infinitesimal(m + n), sum);
    for (const auto& [a, ka] : m) {
      EXPECT_EQ(seg_dual(seg_dual(a)), a);
      for (const auto& [b, kb] : n) EXPECT_EQ(precedes(a, b), precedes(seg_dual(b), seg_dual(a)));
    }
  }
}

TEST(CoreProperty, DecompositionIsAPartition) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    MultiSegment m = pyatest::random_line(rng, pyatest::triv(), 0, 6) + pyatest::random_line(rng, pyatest::triv(), HalfInt::half(), 6) +
                     pyatest::random_line(rng, pyatest::sigma(), 0, 4) + pyatest::random_line(rng, pyatest::sigma_dual(), 0, 4);
    auto recombine = [](const LineMap& lines) {
      MultiSegment back;
      for (const auto& [key, part] : lines) back += part;
      return back;
    };
    EXPECT_EQ(recombine(decompose_lines(m)), m);
    EXPECT_EQ(recombine(decompose_class_lines(m)), m);
  }
}

TEST(CoreProperty, ValidityClosedUnderDual) {
  std::mt19937_64 rng(7);
  const GroupKind kinds[] = {GroupKind::SO_odd, GroupKind::Sp, GroupKind::O_even};
  for (int t = 0; t < 300; ++t) {
    const HalfInt delta = (t % 2 == 0) ? HalfInt(0) : HalfInt::half();
    const MultiSegment m = pyatest::random_selfdual_line(rng, pyatest::triv(), delta, 8, t % 3 == 0);
    const int n = static_cast<int>(m.dimension());
    const GroupKind kind = kinds[t % 3];
    if ((kind == GroupKind::Sp) != (n % 2 == 1)) continue;
    const GroupType g{kind, kind == GroupKind::Sp ? (n - 1) / 2 : n / 2};
    if (validate({g, m}).empty()) {
      EXPECT_TRUE(validate({g, dual(m)}).empty()) << m.to_string();
    }
  }
}
