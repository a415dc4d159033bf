#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace spinstat {

/// Integer or half-integer quantum number, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double to_double() const { return twice_ / 2.0; }

    /// Integer value; only meaningful when is_integer().
    constexpr int as_int() const { return twice_ / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "1", "-3/2", "0".
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

/// (-1)^n for an integer exponent of either sign.
constexpr int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace spinstat
