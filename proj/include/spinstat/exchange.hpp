#pragma once

/*
 * Parity, spin permutation and particle exchange on two-spin states.
 *
 * Parity acts in the coupled basis only: chi_{j,m}(r1, r2) -> (-1)^j chi_{j,m}(r2, r1).
 * It never relabels uncoupled spin projections directly.  Because the CGCs
 * obey C(j,m;m1,m2) = (-1)^{2s-j} C(j,m;m2,m1), the coupled phase (-1)^j
 * carries the interchange of the spin labels with it, and the parity image of
 * psi_{m1,m2}(r1, r2) comes out as (-1)^{2s} psi_{m2,m1}(r2, r1): the full
 * permutation of both particles, with the spin-statistics sign.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "spinstat/cgc.hpp"
#include "spinstat/spin_space.hpp"

namespace spinstat {

/// Moves every amplitude from (o, m1, m2) to (swap(o), m1, m2).
inline TwoParticleState orbital_swap(const TwoParticleState& state) {
    TwoParticleState out(state.two_s());
    for (const auto& [key, amp] : state.terms()) out.set(swap(key.first), key.second, amp);
    return out;
}

/// E_s |m1, m2> = |m2, m1>; orbital order untouched.
inline TwoParticleState spin_swap(const TwoParticleState& state) {
    TwoParticleState out(state.two_s());
    for (const auto& [key, amp] : state.terms()) out.set(key.first, key.second.swapped(), amp);
    return out;
}

/// (o, m1, m2) -> (swap(o), m2, m1) with no phase: relabelling of both particles.
inline TwoParticleState full_swap(const TwoParticleState& state) {
    TwoParticleState out(state.two_s());
    for (const auto& [key, amp] : state.terms()) out.set(swap(key.first), key.second.swapped(), amp);
    return out;
}

/// Coupled-basis parity: (-1)^j on each |j, m> and the orbital arguments interchanged.
inline CoupledState parity(const CoupledState& state) {
    CoupledState out(state.two_s());
    for (const auto& [key, amp] : state.terms()) {
        const auto& [order, idx] = key;
        out.set(swap(order), idx, parity_sign(idx.j.as_int()) > 0 ? amp : -amp);
    }
    return out;
}

/// Parity on an uncoupled state, routed through the coupled basis.
inline TwoParticleState parity(const TwoParticleState& state, const CgcTable& table) {
    return to_uncoupled(parity(to_coupled(state, table)), table);
}

/// Permutation of the two identical particles as realised by parity in the
/// centre-of-mass frame.  The spin permutation is not applied as a separate
/// relabelling: it is already contained in the (-1)^j phase of the coupled
/// basis (see the file comment), and applying spin_swap on top would undo it,
/// leaving only (-1)^{2s} times the orbital interchange.
inline TwoParticleState exchange(const TwoParticleState& state, const CgcTable& table) {
    return parity(state, table);
}

/// (-1)^{2s}
constexpr int statistics_sign(int two_s) { return parity_sign(two_s); }

enum class ObservedSign { Minus, Plus, Mixed };

inline std::string to_string(ObservedSign s) {
    switch (s) {
        case ObservedSign::Minus: return "-1";
        case ObservedSign::Plus: return "+1";
        case ObservedSign::Mixed: return "mixed";
    }
    return "mixed";
}

/// +1 or -1 if exchanged == sign * full_swap(original) key by key, otherwise nullopt.
inline std::optional<int> observed_exchange_sign(const TwoParticleState& original,
                                                 const TwoParticleState& exchanged) {
    const auto image = full_swap(original);
    if (exchanged == image) return 1;
    if (exchanged == image.scaled(RadicalSum::from_rational(-1))) return -1;
    return std::nullopt;
}

struct ExchangeWitness {
    TwoParticleState before;
    TwoParticleState after;
};

struct ExchangeReport {
    int two_s = 0;
    std::size_t states_tested = 0;
    ObservedSign sign = ObservedSign::Mixed;
    std::optional<ExchangeWitness> witness;

    bool matches_statistics() const {
        return sign == (statistics_sign(two_s) < 0 ? ObservedSign::Minus : ObservedSign::Plus);
    }
};

/// Checks E psi_{m1,m2}(r1,r2) = (-1)^{2s} psi_{m2,m1}(r2,r1) on `trials` seeded random states.
inline ExchangeReport verify_spin_statistics(const CgcTable& table, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_spin_statistics: trials must be >= 1");
    ExchangeReport report;
    report.two_s = table.two_s();
    std::optional<int> common;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_stream(seed, t);
        const auto psi = random_state(table.two_s(), rng);
        ++report.states_tested;
        if (psi.is_zero()) continue;
        const auto image = exchange(psi, table);
        const auto observed = observed_exchange_sign(psi, image);
        if (!observed || (common && *common != *observed)) {
            report.sign = ObservedSign::Mixed;
            report.witness = ExchangeWitness{psi, image};
            return report;
        }
        common = observed;
    }
    if (!common) common = statistics_sign(table.two_s());  // only zero states drawn
    report.sign = *common < 0 ? ObservedSign::Minus : ObservedSign::Plus;
    return report;
}

inline ExchangeReport verify_spin_statistics(int two_s, std::size_t trials, std::uint64_t seed) {
    return verify_spin_statistics(build_table(two_s), trials, seed);
}

/// psi + (-1)^{2s} full_swap(psi): obeys the spin-statistics relation by construction.
inline TwoParticleState symmetrize(const TwoParticleState& state) {
    return state + full_swap(state).scaled(RadicalSum::from_rational(statistics_sign(state.two_s())));
}

}  // namespace spinstat
