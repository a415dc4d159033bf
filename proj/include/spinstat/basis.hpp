#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "spinstat/errors.hpp"
#include "spinstat/half_int.hpp"

namespace spinstat {

/// Two identical spins of magnitude s = two_s / 2.
struct SpinPair {
    int two_s = 0;

    explicit SpinPair(int twice_s) : two_s(twice_s) {
        if (two_s < 0) throw IndexOutOfRange("two_s must be nonnegative, got " + std::to_string(two_s));
    }

    HalfInt s() const { return HalfInt::from_twice(two_s); }
    int single_dim() const { return two_s + 1; }
    int pair_dim() const { return (two_s + 1) * (two_s + 1); }
    int max_j() const { return two_s; }  // j ranges over 0..2s

    /// m with |m| <= s and s - m integer.
    bool valid_projection(HalfInt m) const {
        int t = m.twice();
        return t >= -two_s && t <= two_s && (two_s - t) % 2 == 0;
    }

    /// s, s-1, ..., -s
    std::vector<HalfInt> projections() const {
        std::vector<HalfInt> out;
        for (int t = two_s; t >= -two_s; t -= 2) out.push_back(HalfInt::from_twice(t));
        return out;
    }

    std::string label() const { return "s=" + s().str(); }
};

struct UncoupledIndex {
    HalfInt m1;
    HalfInt m2;

    HalfInt total() const { return m1 + m2; }
    UncoupledIndex swapped() const { return {m2, m1}; }
    auto operator<=>(const UncoupledIndex&) const = default;
};

struct CoupledIndex {
    HalfInt j;
    HalfInt m;
    auto operator<=>(const CoupledIndex&) const = default;
};

inline void check_index(const SpinPair& pair, const UncoupledIndex& idx) {
    if (!pair.valid_projection(idx.m1) || !pair.valid_projection(idx.m2))
        throw IndexOutOfRange("invalid projections (" + idx.m1.str() + ", " + idx.m2.str() + ") for " +
                              pair.label());
}

inline void check_index(const SpinPair& pair, const CoupledIndex& idx) {
    int tj = idx.j.twice(), tm = idx.m.twice();
    if (!idx.j.is_integer() || tj < 0 || tj > 2 * pair.two_s || !idx.m.is_integer() || tm < -tj || tm > tj)
        throw IndexOutOfRange("invalid coupled index (j=" + idx.j.str() + ", m=" + idx.m.str() + ") for " +
                              pair.label());
}

/// Formal argument order of the orbital factor: psi(r1, r2) or psi(r2, r1).
enum class OrbitalOrder { R12, R21 };

constexpr OrbitalOrder swap(OrbitalOrder o) {
    return o == OrbitalOrder::R12 ? OrbitalOrder::R21 : OrbitalOrder::R12;
}

inline std::string to_string(OrbitalOrder o) { return o == OrbitalOrder::R12 ? "R12" : "R21"; }

inline OrbitalOrder parse_orbital(std::string_view s) {
    if (s == "R12") return OrbitalOrder::R12;
    if (s == "R21") return OrbitalOrder::R21;
    throw ParseError("orbital order must be R12 or R21, got '" + std::string(s) + "'");
}

constexpr OrbitalOrder kOrbitalOrders[] = {OrbitalOrder::R12, OrbitalOrder::R21};

}  // namespace spinstat
