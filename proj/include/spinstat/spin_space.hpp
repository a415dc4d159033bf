#pragma once

// Two-spin states in the uncoupled |m1, m2> and coupled |j, m> bases, each
// amplitude tagged with the formal orbital argument order (r1, r2) / (r2, r1).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "spinstat/basis.hpp"
#include "spinstat/cgc.hpp"
#include "spinstat/radical_sum.hpp"

namespace spinstat {

/// Sparse exact amplitudes keyed by (orbital order, basis index); absent key = 0.
template <typename Index>
class BasicState {
public:
    using Key = std::pair<OrbitalOrder, Index>;
    using Map = std::map<Key, RadicalSum>;

    explicit BasicState(int two_s) : pair_(two_s) {}

    int two_s() const { return pair_.two_s; }
    const SpinPair& pair() const { return pair_; }
    const Map& terms() const { return amplitudes_; }
    bool is_zero() const { return amplitudes_.empty(); }

    RadicalSum amplitude(OrbitalOrder o, const Index& idx) const {
        auto it = amplitudes_.find({o, idx});
        return it == amplitudes_.end() ? RadicalSum{} : it->second;
    }

    void set(OrbitalOrder o, const Index& idx, RadicalSum amp) {
        check_index(pair_, idx);
        if (amp.is_zero())
            amplitudes_.erase({o, idx});
        else
            amplitudes_[{o, idx}] = std::move(amp);
    }

    void add(OrbitalOrder o, const Index& idx, const RadicalSum& amp) {
        check_index(pair_, idx);
        if (amp.is_zero()) return;
        auto [it, inserted] = amplitudes_.try_emplace({o, idx}, amp);
        if (inserted) return;
        it->second += amp;
        if (it->second.is_zero()) amplitudes_.erase(it);
    }

    /// Sum of squared amplitudes.
    RadicalSum norm() const {
        RadicalSum total;
        for (const auto& [key, amp] : amplitudes_) total += amp * amp;
        return total;
    }

    BasicState scaled(const RadicalSum& alpha) const {
        BasicState out(two_s());
        for (const auto& [key, amp] : amplitudes_) out.set(key.first, key.second, alpha * amp);
        return out;
    }

    BasicState& operator+=(const BasicState& o) {
        require_same_spin(o);
        for (const auto& [key, amp] : o.amplitudes_) add(key.first, key.second, amp);
        return *this;
    }
    friend BasicState operator+(BasicState a, const BasicState& b) { return a += b; }

    friend bool operator==(const BasicState& a, const BasicState& b) {
        return a.two_s() == b.two_s() && a.amplitudes_ == b.amplitudes_;
    }

private:
    void require_same_spin(const BasicState& o) const {
        if (o.two_s() != two_s()) throw std::invalid_argument("states have different spin magnitudes");
    }

    SpinPair pair_;
    Map amplitudes_;
};

/// psi_{m1,m2}(r1, r2) in the uncoupled basis.
using TwoParticleState = BasicState<UncoupledIndex>;
/// chi_{j,m}(r1, r2) in the coupled basis.
using CoupledState = BasicState<CoupledIndex>;

namespace detail {

inline void require_table(int two_s, const CgcTable& table) {
    if (table.two_s() != two_s)
        throw std::invalid_argument("CGC table built for two_s=" + std::to_string(table.two_s()) +
                                    ", state has two_s=" + std::to_string(two_s));
}

}  // namespace detail

/// chi_{j,m} = sum_{m1+m2=m} C(j,m;m1,m2) psi_{m1,m2}, per orbital order.
inline CoupledState to_coupled(const TwoParticleState& state, const CgcTable& table) {
    detail::require_table(state.two_s(), table);
    CoupledState out(state.two_s());
    for (const auto& [key, amp] : state.terms()) {
        const auto& [order, idx] = key;
        const HalfInt m = idx.total();
        for (int j = std::abs(m.as_int()); j <= state.two_s(); ++j) {
            const auto J = HalfInt::from_int(j);
            const RadicalSum& c = table.radical(J, idx.m1, idx.m2);
            if (!c.is_zero()) out.add(order, CoupledIndex{J, m}, c * amp);
        }
    }
    return out;
}

/// psi_{m1,m2} = sum_{|m|<=j<=2s} C(j,m;m1,m2) chi_{j,m}, per orbital order.
inline TwoParticleState to_uncoupled(const CoupledState& state, const CgcTable& table) {
    detail::require_table(state.two_s(), table);
    TwoParticleState out(state.two_s());
    const int two_s = state.two_s();
    for (const auto& [key, amp] : state.terms()) {
        const auto& [order, idx] = key;
        for (int t1 = two_s; t1 >= -two_s; t1 -= 2) {
            const int t2 = idx.m.twice() - t1;
            if (t2 < -two_s || t2 > two_s) continue;
            const auto m1 = HalfInt::from_twice(t1), m2 = HalfInt::from_twice(t2);
            const RadicalSum& c = table.radical(idx.j, m1, m2);
            if (!c.is_zero()) out.add(order, UncoupledIndex{m1, m2}, c * amp);
        }
    }
    return out;
}

/// Single basis ket with unit amplitude.
inline TwoParticleState basis_state(int two_s, OrbitalOrder o, HalfInt m1, HalfInt m2) {
    TwoParticleState out(two_s);
    out.set(o, {m1, m2}, SignedSqrtRational::one());
    return out;
}

inline CoupledState coupled_basis_state(int two_s, OrbitalOrder o, HalfInt j, HalfInt m) {
    CoupledState out(two_s);
    out.set(o, {j, m}, SignedSqrtRational::one());
    return out;
}

/// Every (orbital order, m1, m2) key for the spin pair: R12 first, then m1 and m2 descending.
inline std::vector<std::pair<OrbitalOrder, UncoupledIndex>> uncoupled_keys(int two_s) {
    std::vector<std::pair<OrbitalOrder, UncoupledIndex>> keys;
    const SpinPair pair(two_s);
    for (OrbitalOrder o : kOrbitalOrders)
        for (HalfInt m1 : pair.projections())
            for (HalfInt m2 : pair.projections()) keys.push_back({o, {m1, m2}});
    return keys;
}

/// SplitMix64 (Steele, Lea, Flood).  Small, seedable, and easy to reproduce in
/// any language, which keeps random test states portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Independent generator for trial number `trial` of a run seeded with `seed`.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 master(seed);
    std::uint64_t word = 0;
    for (std::uint64_t i = 0; i <= trial; ++i) word = master.next();
    return SplitMix64(word);
}

/// One word per key in uncoupled_keys() order: sign from bit 63, amplitude
/// sqrt(k/64) with k = word mod 65 (k = 0 leaves the key empty).
inline TwoParticleState random_state(int two_s, SplitMix64& rng) {
    TwoParticleState out(two_s);
    for (const auto& [order, idx] : uncoupled_keys(two_s)) {
        const std::uint64_t word = rng.next();
        const int sign = (word >> 63) ? -1 : 1;
        const auto k = static_cast<long>(word % 65);
        out.set(order, idx, SignedSqrtRational(sign, Integer(k), Integer(64)));
    }
    return out;
}

}  // namespace spinstat
