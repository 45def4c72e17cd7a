#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "generators.hpp"
#include "pya/duality.hpp"
#include "pya/errors.hpp"

using namespace pya;
using pyatest::mseg;
using pyatest::seg;

namespace {

const MultiSegment phi1 = mseg({{"0", "1", 1}, {"-1", "0", 1}, {"0", "0", 2}});
const MultiSegment phi4 = mseg({{"1", "1", 1}, {"-1", "-1", 1}, {"0", "0", 4}});
const GroupType so7{GroupKind::SO_odd, 3};
const GroupType gl6{GroupKind::GL, 6};

}  // namespace

TEST(MwStep, Examples) {
  const ExtractionTrace a = mw_step(mseg({{"0", "1", 1}}));
  EXPECT_EQ(a.d, HalfInt(1));
  EXPECT_EQ(a.r, 0);
  EXPECT_EQ(a.chain, std::vector<Segment>{seg("0", "1")});
  EXPECT_EQ(a.remainder, mseg({{"0", "0", 1}}));

  const ExtractionTrace b = mw_step(mseg({{"0", "0", 1}, {"1", "1", 1}}));
  EXPECT_EQ(b.r, 1);
  EXPECT_EQ(b.chain, (std::vector<Segment>{seg("1", "1"), seg("0", "0")}));
  EXPECT_TRUE(b.remainder.empty());

  const ExtractionTrace c = mw_step(mseg({{"5/2", "5/2", 1}}));
  EXPECT_EQ(c.d, HalfInt::from_twice(5));
  EXPECT_TRUE(c.remainder.empty());

  EXPECT_THROW(mw_step(MultiSegment{}), DomainError);
}

TEST(MwStep, ChainPicksMaximalBeginning) {
  // Both [0,1] and [1,1] end at 1 and precede [2,2]; the longer one loses.
  const ExtractionTrace t = mw_step(mseg({{"2", "2", 1}, {"1", "1", 1}, {"0", "1", 1}}));
  EXPECT_EQ(t.chain, (std::vector<Segment>{seg("2", "2"), seg("1", "1")}));
  EXPECT_EQ(t.remainder, mseg({{"0", "1", 1}}));
}

TEST(MwDual, Examples) {
  EXPECT_EQ(mw_dual(mseg({{"0", "1", 1}})), mseg({{"1", "1", 1}, {"0", "0", 1}}));
  EXPECT_EQ(mw_dual(mseg({{"0", "0", 1}, {"1", "1", 1}})), mseg({{"0", "1", 1}}));
  EXPECT_TRUE(mw_dual(MultiSegment{}).empty());
  // A selfdual input has a selfdual dual: {[-1,1],[0,0]} is the open orbit of
  // {-1,0,0,1} and goes to the closed one.
  EXPECT_EQ(mw_dual(mseg({{"-1", "1", 1}, {"0", "0", 1}})), mseg({{"1", "1", 1}, {"0", "0", 2}, {"-1", "-1", 1}}));
  EXPECT_THROW(mw_dual(MultiSegment{seg("0", "0"), seg("1/2", "1/2")}), DomainError);
}

TEST(MwDual, TraceRecordsEveryLevel) {
  std::vector<ExtractionTrace> trace;
  const MultiSegment out = mw_dual(mseg({{"-1", "1", 1}, {"0", "0", 1}}), &trace);
  EXPECT_EQ(static_cast<int>(trace.size()), out.size());
  EXPECT_EQ(trace.front().chain.front(), seg("-1", "1"));
  EXPECT_TRUE(trace.back().remainder.empty());
}

TEST(AzBadStep, ConditionBBlocksSingleDuals) {
  const ExtractionTrace a = az_bad_step(mseg({{"1", "1", 1}, {"-1", "-1", 1}, {"0", "0", 2}}));
  EXPECT_EQ(a.d, HalfInt(1));
  EXPECT_EQ(a.chain, (std::vector<Segment>{seg("1", "1"), seg("0", "0")}));
  EXPECT_TRUE(a.remainder.empty());

  const ExtractionTrace b = az_bad_step(phi1);
  EXPECT_EQ(b.chain, std::vector<Segment>{seg("0", "1")});
  EXPECT_EQ(b.remainder, mseg({{"0", "0", 4}}));

  const ExtractionTrace c = az_bad_step(mseg({{"0", "0", 2}}));
  EXPECT_EQ(c.r, 0);
  EXPECT_TRUE(c.remainder.empty());
}

TEST(AzBadStep, RejectsInvalidLines) {
  EXPECT_THROW(az_bad_step(mseg({{"0", "0", 1}})), DomainError);
  EXPECT_THROW(az_bad_step(mseg({{"0", "1", 1}})), DomainError);
  EXPECT_THROW(az_bad_step(MultiSegment{}), DomainError);
  EXPECT_THROW(az_bad_step(MultiSegment{Segment(pyatest::sigma(), 0, 0), Segment(pyatest::sigma_dual(), 0, 0)}),
               DomainError);
}

TEST(AzBad, Examples) {
  EXPECT_EQ(az_bad(phi1), phi4);
  EXPECT_EQ(az_bad(phi4), phi1);
  EXPECT_EQ(az_bad(mseg({{"1", "1", 1}, {"-1", "-1", 1}, {"0", "0", 2}})), mseg({{"0", "1", 1}, {"-1", "0", 1}}));
  EXPECT_TRUE(az_bad(MultiSegment{}).empty());
  EXPECT_THROW(az_bad(mseg({{"-1", "1", 1}, {"0", "0", 3}})), DomainError);
}

TEST(DualNonselfdual, Examples) {
  const RhoClass s = pyatest::sigma();
  const RhoClass sv = pyatest::sigma_dual();
  const MultiSegment fixed{Segment(s, 0, 0), Segment(sv, 0, 0)};
  EXPECT_EQ(dual_nonselfdual(fixed), fixed);
  EXPECT_EQ(dual_nonselfdual(MultiSegment{Segment(s, 0, 1), Segment(sv, -1, 0)}),
            (MultiSegment{Segment(s, 1, 1), Segment(s, 0, 0), Segment(sv, 0, 0), Segment(sv, -1, -1)}));
  EXPECT_TRUE(dual_nonselfdual(MultiSegment{}).empty());
  EXPECT_THROW(dual_nonselfdual(MultiSegment{Segment(s, 0, 1), Segment(sv, 0, 1)}), DomainError);
  EXPECT_THROW(dual_nonselfdual(mseg({{"0", "0", 1}})), DomainError);
}

TEST(DualGood, Examples) {
  EXPECT_EQ(dual_good(mseg({{"0", "0", 1}})), mseg({{"0", "0", 1}}));
  EXPECT_EQ(dual_good(mseg({{"-1", "1", 1}})), mseg({{"1", "1", 1}, {"0", "0", 1}, {"-1", "-1", 1}}));
  EXPECT_EQ(dual_good(mseg({{"1", "1", 1}, {"0", "0", 1}, {"-1", "-1", 1}})), mseg({{"-1", "1", 1}}));
}

TEST(PyasetskiiDual, SixDimensionalExample) {
  EXPECT_EQ(pyasetskii_dual({so7, phi1}), (LParameter{so7, phi4}));
  EXPECT_EQ(pyasetskii_dual({so7, phi4}), (LParameter{so7, phi1}));
  const MultiSegment phi0 = mseg({{"-1", "1", 1}, {"0", "0", 3}});
  const MultiSegment phi2 = mseg({{"0", "1", 1}, {"-1", "-1", 1}, {"0", "0", 3}});
  const MultiSegment phi3 = mseg({{"-1", "0", 1}, {"1", "1", 1}, {"0", "0", 3}});
  EXPECT_EQ(pyasetskii_dual({gl6, phi0}).mseg, phi4);
  EXPECT_EQ(pyasetskii_dual({gl6, phi1}).mseg, phi1);
  EXPECT_EQ(pyasetskii_dual({gl6, phi2}).mseg, phi3);
  EXPECT_EQ(gl_dual(phi4), phi0);
  EXPECT_THROW(pyasetskii_dual({so7, phi0}), DomainError);
}

TEST(PyasetskiiDual, TraceNamesTheAlgorithmPerLine) {
  const RhoClass s = pyatest::sigma();
  const MultiSegment m = mseg({{"1/2", "1/2", 1}, {"-1/2", "-1/2", 1}}) +
                         MultiSegment{Segment(s, 0, 1), Segment(pyatest::sigma_dual(), -1, 0)} + mseg({{"0", "0", 1}});
  std::vector<LineTrace> trace;
  const LParameter p{GroupType{GroupKind::Sp, 3}, m};
  ASSERT_TRUE(validate(p).empty());
  pyasetskii_dual(p, &trace);
  ASSERT_EQ(trace.size(), 3U);
  EXPECT_EQ(trace[0].line.to_string(), "1:0");
  EXPECT_EQ(trace[0].algorithm, "mw");
  EXPECT_EQ(trace[1].line.to_string(), "1:1/2");
  EXPECT_EQ(trace[1].algorithm, "az-bad");
  EXPECT_EQ(trace[2].algorithm, "mw-paired");
}

TEST(Unramify, RelabelsAndPicksGroup) {
  const RhoClass ortho2 = RhoClass::selfdual_class("o2", 2, Duality::orthogonal);
  const Unramified a = unramify(MultiSegment{Segment(ortho2, 0, 1), Segment(ortho2, -1, 0)}, {GroupKind::Sp, 4});
  EXPECT_EQ(a.mseg, mseg({{"0", "1", 1}, {"-1", "0", 1}}));
  EXPECT_EQ(a.form_sign, 1);
  EXPECT_EQ(a.group, (GroupType{GroupKind::O_even, 2}));

  const Unramified b = unramify(mseg({{"1/2", "1/2", 1}, {"-1/2", "-1/2", 1}}, pyatest::tau()), {GroupKind::Sp, 2});
  EXPECT_EQ(b.mseg, mseg({{"1/2", "1/2", 1}, {"-1/2", "-1/2", 1}}));
  EXPECT_EQ(b.form_sign, -1);
  EXPECT_EQ(b.group, (GroupType{GroupKind::SO_odd, 1}));

  EXPECT_EQ(unramify(phi1, so7).mseg, phi1);
  EXPECT_EQ(unramify(mseg({{"0", "0", 1}}), {GroupKind::Sp, 0}).group, (GroupType{GroupKind::Sp, 0}));
  EXPECT_THROW(unramify(MultiSegment{Segment(pyatest::sigma(), 0, 0)}, so7), DomainError);
}

TEST(Unramify, CommutesWithDuality) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const MultiSegment m = pyatest::random_selfdual_line(rng, pyatest::tau(), 0, 8, true);
    const Unramified u = unramify(m, {GroupKind::O_even, 1});
    ASSERT_EQ(u.form_sign, -1);
    const Unramified back = unramify(az_bad(m), {GroupKind::O_even, 1});
    EXPECT_EQ(back.mseg, az_bad(u.mseg)) << m.to_string();
  }
}

TEST(DualityProperty, AllAlgorithmsAreInvolutions) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 400; ++t) {
    const HalfInt delta = (t % 2 == 0) ? HalfInt(0) : HalfInt::half();
    const MultiSegment any = pyatest::random_line(rng, pyatest::triv(), delta, 10);
    const MultiSegment w = mw_dual(any);
    EXPECT_EQ(mw_dual(w), any) << any.to_string();
    EXPECT_EQ(infinitesimal(w), infinitesimal(any));
    EXPECT_EQ(mw_dual(dual(any)), dual(w)) << any.to_string();

    const MultiSegment bad = pyatest::random_selfdual_line(rng, pyatest::triv(), delta, 10, true);
    const MultiSegment z = az_bad(bad);
    EXPECT_EQ(az_bad(z), bad) << bad.to_string();
    EXPECT_EQ(infinitesimal(z), infinitesimal(bad));
    EXPECT_TRUE(is_valid_bad_line(z));

    const MultiSegment good = pyatest::random_selfdual_line(rng, pyatest::triv(), delta, 10, false);
    EXPECT_EQ(dual_good(dual_good(good)), good);
    EXPECT_TRUE(is_selfdual(dual_good(good)));

    const MultiSegment half = pyatest::random_line(rng, pyatest::sigma(), delta, 6);
    const MultiSegment paired = half + dual(half);
    EXPECT_EQ(dual_nonselfdual(dual_nonselfdual(paired)), paired);
  }
}
