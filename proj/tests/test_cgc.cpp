#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "spinstat/cgc.hpp"

using namespace spinstat;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
HalfInt i(int value) { return HalfInt::from_int(value); }
SignedSqrtRational v(const char* text) { return SignedSqrtRational::parse(text); }

}  // namespace

TEST(RatioFactor, HandEvaluated) {
    EXPECT_EQ(ratio_factor(2, 0, 0), v("1"));          // sqrt[(2*1)/(1*2)]
    EXPECT_EQ(ratio_factor(2, 1, 0), v("1"));          // sqrt[(1*2)/(1*2)]
    EXPECT_EQ(ratio_factor(3, 1, 0), v("sqrt(4/3)"));  // sqrt[(2*2)/(1*3)]
    EXPECT_EQ(ratio_factor(3, 1, 1), v("sqrt(3/4)"));  // sqrt[(1*3)/(2*2)]
}

TEST(RatioFactor, RangeChecked) {
    EXPECT_THROW(ratio_factor(2, 0, 2), IndexOutOfRange);  // k = 2, n in [0,1]
    EXPECT_THROW(ratio_factor(2, 0, -1), IndexOutOfRange);
    EXPECT_THROW(ratio_factor(2, 2, 0), IndexOutOfRange);  // k = 0: empty range
    EXPECT_THROW(ratio_factor(2, 3, 0), IndexOutOfRange);
}

TEST(HighestWeight, SpinOneSinglet) {
    const auto hw = highest_weight_coeffs(2, 0);
    ASSERT_EQ(hw.k, 2);
    EXPECT_EQ(hw.a[0], v("sqrt(1/3)"));
    EXPECT_EQ(hw.a[1], v("-sqrt(1/3)"));
    EXPECT_EQ(hw.a[2], v("sqrt(1/3)"));
}

TEST(HighestWeight, StretchedState) {
    const auto hw = highest_weight_coeffs(2, 2);
    ASSERT_EQ(hw.k, 0);
    ASSERT_EQ(hw.a.size(), 1u);
    EXPECT_EQ(hw.a[0], v("1"));
}

TEST(HighestWeight, SpinHalfSinglet) {
    const auto hw = highest_weight_coeffs(1, 0);
    ASSERT_EQ(hw.a.size(), 2u);
    EXPECT_EQ(hw.a[0], v("-sqrt(1/2)"));
    EXPECT_EQ(hw.a[1], v("sqrt(1/2)"));
    // Independent route.
    EXPECT_EQ(hw.a[0], racah_oracle(1, i(0), i(0), h(-1), h(1)));
}

TEST(HighestWeight, NormalizedWithPositiveLastCoefficient) {
    for (int two_s = 0; two_s <= 16; ++two_s)
        for (int j = 0; j <= two_s; ++j) {
            const auto hw = highest_weight_coeffs(two_s, j);
            Rational norm = 0;
            for (const auto& a : hw.a) norm += a.square();
            EXPECT_EQ(norm, Rational(1)) << "two_s=" << two_s << " j=" << j;
            EXPECT_EQ(hw.a.back().sign(), 1);
        }
}

TEST(BuildTable, SpinOneGoldenValues) {
    const auto t = build_table(2);
    EXPECT_EQ(cgc(t, i(2), i(2), i(1), i(1)), v("1"));
    EXPECT_EQ(cgc(t, i(2), i(1), i(1), i(0)), v("sqrt(1/2)"));
    EXPECT_EQ(cgc(t, i(2), i(1), i(0), i(1)), v("sqrt(1/2)"));
    EXPECT_EQ(cgc(t, i(2), i(0), i(0), i(0)), v("sqrt(2/3)"));
    EXPECT_EQ(cgc(t, i(2), i(0), i(1), i(-1)), v("sqrt(1/6)"));
    EXPECT_EQ(cgc(t, i(2), i(0), i(-1), i(1)), v("sqrt(1/6)"));
    EXPECT_EQ(cgc(t, i(0), i(0), i(-1), i(1)), v("sqrt(1/3)"));
    EXPECT_EQ(cgc(t, i(0), i(0), i(1), i(-1)), v("sqrt(1/3)"));
    EXPECT_EQ(cgc(t, i(0), i(0), i(0), i(0)), v("-sqrt(1/3)"));
    EXPECT_EQ(cgc(t, i(1), i(1), i(1), i(0)), v("sqrt(1/2)"));
    EXPECT_EQ(cgc(t, i(1), i(1), i(0), i(1)), v("-sqrt(1/2)"));
    EXPECT_EQ(cgc(t, i(1), i(0), i(1), i(-1)), v("sqrt(1/2)"));
    EXPECT_EQ(cgc(t, i(1), i(0), i(-1), i(1)), v("-sqrt(1/2)"));
}

TEST(BuildTable, SelectionRuleAndRangeChecks) {
    const auto t = build_table(2);
    EXPECT_TRUE(cgc(t, i(2), i(2), i(1), i(0)).is_zero());
    EXPECT_TRUE(cgc(t, i(1), i(0), i(0), i(0)).is_zero());  // allowed indices, vanishing value
    EXPECT_THROW(cgc(t, i(3), i(0), i(0), i(0)), IndexOutOfRange);
    EXPECT_THROW(cgc(t, i(1), i(2), i(1), i(1)), IndexOutOfRange);
    EXPECT_THROW(cgc(t, i(1), i(0), h(1), h(-1)), IndexOutOfRange);  // half-integer m for s=1
    EXPECT_THROW(cgc(t, h(1), h(1), i(1), i(0)), IndexOutOfRange);   // half-integer j
    EXPECT_THROW(build_table(-1), IndexOutOfRange);
}

TEST(BuildTable, EntryCounts) {
    EXPECT_EQ(build_table(0).entry_count(), 1u);
    EXPECT_EQ(build_table(1).entry_count(), 6u);
    // Sum over m of (#j) * (#(m1,m2)) = sum_m (2s+1-|m|)^2 for s=1: 1+4+9+4+1
    EXPECT_EQ(build_table(2).entry_count(), 19u);
}

TEST(BuildTable, SortedEntryOrder) {
    std::vector<std::tuple<int, int, int>> keys;
    build_table(3).for_each_entry(
        [&](int j, int two_m, int t1, int, const SignedSqrtRational&) { keys.emplace_back(j, two_m, t1); });
    for (std::size_t n = 1; n < keys.size(); ++n) EXPECT_GT(keys[n - 1], keys[n]);
}

TEST(RacahOracle, Examples) {
    EXPECT_EQ(racah_oracle(2, i(0), i(0), i(0), i(0)), v("-sqrt(1/3)"));
    EXPECT_EQ(racah_oracle(1, i(1), i(1), h(1), h(1)), v("1"));
    EXPECT_EQ(racah_oracle(3, i(3), i(3), h(3), h(3)), v("1"));
    EXPECT_TRUE(racah_oracle(2, i(2), i(1), i(1), i(1)).is_zero());
}

TEST(RacahOracle, MatchesTableForSmallSpins) {
    for (int two_s = 0; two_s <= 8; ++two_s) {
        const auto verdict = check_oracle_equivalence(build_table(two_s));
        EXPECT_TRUE(verdict.passed()) << "two_s=" << two_s << ": " << verdict.violations.front();
    }
}

TEST(Identities, RatioReciprocity) {
    EXPECT_TRUE(check_ratio_reciprocity(2, 0).passed());
    EXPECT_EQ(check_ratio_reciprocity(2, 0).checked, 2u);
    EXPECT_TRUE(check_ratio_reciprocity(3, 1).passed());
    EXPECT_EQ(ratio_factor(3, 1, 0) * ratio_factor(3, 1, 1), v("1"));
    const auto vacuous = check_ratio_reciprocity(4, 4);
    EXPECT_TRUE(vacuous.passed());
    EXPECT_EQ(vacuous.checked, 0u);
}

TEST(Identities, CoefficientSymmetryExamples) {
    const auto t1 = build_table(2);
    EXPECT_EQ(cgc(t1, i(0), i(0), i(1), i(-1)), cgc(t1, i(0), i(0), i(-1), i(1)));
    EXPECT_EQ(cgc(t1, i(1), i(0), i(1), i(-1)), -cgc(t1, i(1), i(0), i(-1), i(1)));
    const auto t2 = build_table(1);
    EXPECT_EQ(cgc(t2, i(0), i(0), h(1), h(-1)), -cgc(t2, i(0), i(0), h(-1), h(1)));
    EXPECT_TRUE(check_coefficient_symmetry(t1).passed());
    EXPECT_TRUE(check_coefficient_symmetry(t2).passed());
}

TEST(Identities, AllHoldUpToTwoSTwelve) {
    for (int two_s = 0; two_s <= 12; ++two_s) {
        const auto t = build_table(two_s);
        for (const auto& verdict : {check_coefficient_symmetry(t), check_orthogonality(t),
                                    check_ladder_consistency(t), check_product_formula(t)})
            EXPECT_TRUE(verdict.passed()) << "two_s=" << two_s << ": " << verdict.violations.front();
    }
}
