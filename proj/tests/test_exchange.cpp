#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "spinstat/exchange.hpp"

using namespace spinstat;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
HalfInt i(int value) { return HalfInt::from_int(value); }
RadicalSum v(const char* text) { return SignedSqrtRational::parse(text); }

constexpr auto R12 = OrbitalOrder::R12;
constexpr auto R21 = OrbitalOrder::R21;

// Dense double-precision reference for the coupled-basis route. CGCs come from
// the Racah closed form, so nothing here touches build_table or to_coupled.
using Dense = std::map<std::tuple<int, int, int>, double>;  // (orbital, two_m1, two_m2)

Dense dense_parity(int two_s, const Dense& psi) {
    std::map<std::tuple<int, int, int>, double> chi;  // (orbital, j, two_m)
    for (const auto& [key, amp] : psi) {
        const auto [o, t1, t2] = key;
        for (int j = 0; j <= two_s; ++j) {
            if (std::abs(t1 + t2) > 2 * j) continue;
            const double c = racah_oracle(two_s, i(j), h(t1 + t2), h(t1), h(t2)).to_double();
            chi[{1 - o, j, t1 + t2}] += (j % 2 ? -1.0 : 1.0) * c * amp;
        }
    }
    Dense out;
    for (const auto& [key, amp] : chi) {
        const auto [o, j, two_m] = key;
        for (int t1 = -two_s; t1 <= two_s; t1 += 2) {
            const int t2 = two_m - t1;
            if (std::abs(t2) > two_s) continue;
            out[{o, t1, t2}] += racah_oracle(two_s, i(j), h(two_m), h(t1), h(t2)).to_double() * amp;
        }
    }
    return out;
}

Dense to_dense(const TwoParticleState& psi) {
    Dense out;
    for (const auto& [key, amp] : psi.terms())
        out[{key.first == R12 ? 0 : 1, key.second.m1.twice(), key.second.m2.twice()}] = amp.to_double();
    return out;
}

double max_gap(const Dense& a, const Dense& b) {
    double gap = 0.0;
    for (const auto& [key, x] : a) {
        const auto it = b.find(key);
        gap = std::max(gap, std::abs(x - (it == b.end() ? 0.0 : it->second)));
    }
    for (const auto& [key, y] : b)
        if (!a.count(key)) gap = std::max(gap, std::abs(y));
    return gap;
}

}  // namespace

TEST(Parity, CoupledBasisPhases) {
    // Spin-1/2 singlet (j=0) keeps its sign, triplet (j=1) flips; orbital order swaps.
    const auto singlet = parity(coupled_basis_state(1, R12, i(0), i(0)));
    EXPECT_EQ(singlet.amplitude(R21, {i(0), i(0)}), v("1"));
    const auto triplet = parity(coupled_basis_state(1, R12, i(1), i(0)));
    EXPECT_EQ(triplet.amplitude(R21, {i(1), i(0)}), v("-1"));
    const auto chi20 = parity(coupled_basis_state(2, R12, i(2), i(0)));
    EXPECT_EQ(chi20.amplitude(R21, {i(2), i(0)}), v("1"));
    EXPECT_TRUE(chi20.amplitude(R12, {i(2), i(0)}).is_zero());
}

TEST(SpinSwap, SwapsProjectionsOnly) {
    const auto psi = spin_swap(basis_state(1, R12, h(1), h(-1)));
    EXPECT_EQ(psi.amplitude(R12, {h(-1), h(1)}), v("1"));
    EXPECT_EQ(psi.terms().size(), 1u);
    auto rng = trial_stream(11, 0);
    const auto x = random_state(4, rng);
    EXPECT_EQ(spin_swap(spin_swap(x)), x);
    EXPECT_EQ(orbital_swap(orbital_swap(x)), x);
    EXPECT_EQ(full_swap(x), spin_swap(orbital_swap(x)));
}

TEST(Exchange, SpinHalfExample) {
    const auto table = build_table(1);
    const auto out = exchange(basis_state(1, R12, h(1), h(-1)), table);
    ASSERT_EQ(out.terms().size(), 1u);
    EXPECT_EQ(out.amplitude(R21, {h(-1), h(1)}), v("-1"));
}

TEST(Exchange, SpinOneExample) {
    const auto table = build_table(2);
    const auto out = exchange(basis_state(2, R12, i(1), i(0)), table);
    ASSERT_EQ(out.terms().size(), 1u);
    EXPECT_EQ(out.amplitude(R21, {i(0), i(1)}), v("1"));
}

TEST(Exchange, AgreesWithDenseReference) {
    for (int two_s = 0; two_s <= 6; ++two_s) {
        const auto table = build_table(two_s);
        for (const auto& [order, idx] : uncoupled_keys(two_s)) {
            const auto psi = basis_state(two_s, order, idx.m1, idx.m2);
            EXPECT_LT(max_gap(to_dense(exchange(psi, table)), dense_parity(two_s, to_dense(psi))), 1e-12)
                << "two_s=" << two_s << " m1=" << idx.m1.str() << " m2=" << idx.m2.str();
        }
        for (std::size_t t = 0; t < 3; ++t) {
            auto rng = trial_stream(99, t);
            const auto psi = random_state(two_s, rng);
            EXPECT_LT(max_gap(to_dense(exchange(psi, table)), dense_parity(two_s, to_dense(psi))), 1e-12);
        }
    }
}

TEST(Exchange, SpinStatisticsSign) {
    const auto minus = verify_spin_statistics(1, 20, 42);
    EXPECT_EQ(minus.sign, ObservedSign::Minus);
    EXPECT_TRUE(minus.matches_statistics());
    EXPECT_FALSE(minus.witness.has_value());
    EXPECT_EQ(verify_spin_statistics(2, 20, 42).sign, ObservedSign::Plus);
    EXPECT_EQ(verify_spin_statistics(3, 20, 42).sign, ObservedSign::Minus);
    EXPECT_EQ(verify_spin_statistics(0, 5, 42).sign, ObservedSign::Plus);
    EXPECT_THROW(verify_spin_statistics(1, 0, 42), std::invalid_argument);
    EXPECT_EQ(to_string(ObservedSign::Mixed), "mixed");
}

TEST(Exchange, ObservedSignDetectsMixedImages) {
    auto rng = trial_stream(5, 0);
    const auto psi = random_state(2, rng);
    EXPECT_EQ(observed_exchange_sign(psi, full_swap(psi)), 1);
    EXPECT_EQ(observed_exchange_sign(psi, full_swap(psi).scaled(RadicalSum::from_rational(-1))), -1);
    EXPECT_FALSE(observed_exchange_sign(psi, orbital_swap(psi)).has_value());
}

TEST(Exchange, InvolutionsFixedPointsAndLinearity) {
    for (int two_s = 0; two_s <= 5; ++two_s) {
        const auto table = build_table(two_s);
        for (std::size_t t = 0; t < 4; ++t) {
            auto rng = trial_stream(2024 + two_s, t);
            const auto a = random_state(two_s, rng);
            const auto b = random_state(two_s, rng);
            EXPECT_EQ(parity(parity(a, table), table), a);
            EXPECT_EQ(exchange(exchange(a, table), table), a);
            const auto sym = symmetrize(a);
            EXPECT_EQ(exchange(sym, table), sym);
            const RadicalSum alpha = v("-sqrt(2/3)");
            EXPECT_EQ(exchange(a.scaled(alpha) + b, table), exchange(a, table).scaled(alpha) + exchange(b, table));
        }
    }
}

TEST(Exchange, SpinSwapAfterParityIsSignedOrbitalSwap) {
    // Composing the spin relabelling with the coupled-basis parity cancels the
    // spin permutation; this pins that algebra so exchange() stays the parity route.
    for (int two_s = 0; two_s <= 5; ++two_s) {
        const auto table = build_table(two_s);
        auto rng = trial_stream(77, static_cast<std::uint64_t>(two_s));
        const auto psi = random_state(two_s, rng);
        const auto sign = RadicalSum::from_rational(statistics_sign(two_s));
        EXPECT_EQ(spin_swap(parity(psi, table)), orbital_swap(psi).scaled(sign));
        EXPECT_EQ(exchange(psi, table), full_swap(psi).scaled(sign));
    }
}
