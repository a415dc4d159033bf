#pragma once

/*
 * Clebsch-Gordan coefficients C(j, m; m1, m2) = <j, m | m1, m2> for two equal
 * spins s, built exactly:
 *
 *   1. the highest-weight row |j, j> = sum_n a_n |j - s + n, s - n> from the
 *      two-term recurrence a_{n+1} = -r_n a_n that follows from j+ |j, j> = 0,
 *      normalised and with the Condon-Shortley sign a_k > 0 (k = 2s - j);
 *   2. every other |j, m> by repeated application of j- = s1- + s2-.
 *
 * An independent closed form (Racah's sum over factorials) is provided as an
 * oracle, together with checks of the identities the construction implies.
 */

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "spinstat/basis.hpp"
#include "spinstat/exact_number.hpp"
#include "spinstat/radical_sum.hpp"

namespace spinstat {

/// Outcome of an identity check: how many cases were examined and which failed.
struct Verdict {
    std::size_t checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    void fail(std::string what) { violations.push_back(std::move(what)); }
    void merge(const Verdict& o) {
        checked += o.checked;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

namespace detail {

inline void require_j(int two_s, int j) {
    if (two_s < 0) throw IndexOutOfRange("two_s must be nonnegative");
    if (j < 0 || j > two_s)
        throw IndexOutOfRange("j=" + std::to_string(j) + " outside [0, 2s] for two_s=" + std::to_string(two_s));
}

/// sqrt(a * b / c), all nonnegative integers, c > 0.
inline SignedSqrtRational sqrt_ratio(long a, long b, long c) {
    return SignedSqrtRational::sqrt_of(Rational(Integer(a) * b, Integer(c)));
}

}  // namespace detail

/// r_n = sqrt[(2s - j - n)(j + n + 1) / ((n + 1)(2s - n))],  0 <= n < 2s - j.
inline SignedSqrtRational ratio_factor(int two_s, int j, int n) {
    detail::require_j(two_s, j);
    const int k = two_s - j;
    if (n < 0 || n >= k)
        throw IndexOutOfRange("ratio_factor: n=" + std::to_string(n) + " outside [0, " + std::to_string(k - 1) +
                              "]");
    Rational r(Integer(two_s - j - n) * (j + n + 1), Integer(n + 1) * (two_s - n));
    r.canonicalize();
    return SignedSqrtRational::sqrt_of(r);
}

/// a_n = C(j, j; m1 = j - s + n, m2 = s - n) for n = 0..k.
struct HighestWeightCoeffs {
    int two_s = 0;
    int j = 0;
    int k = 0;
    std::vector<SignedSqrtRational> a;

    /// twice m1 of term n
    int two_m1(int n) const { return 2 * j - two_s + 2 * n; }
    int two_m2(int n) const { return two_s - 2 * n; }
};

inline HighestWeightCoeffs highest_weight_coeffs(int two_s, int j) {
    detail::require_j(two_s, j);
    HighestWeightCoeffs hw{two_s, j, two_s - j, {}};
    hw.a.reserve(hw.k + 1);
    hw.a.push_back(SignedSqrtRational::one());
    Rational norm = 1;
    for (int n = 0; n < hw.k; ++n) {
        hw.a.push_back(-(ratio_factor(two_s, j, n) * hw.a.back()));
        norm += hw.a.back().square();
    }
    // Normalise, then fix the global sign by a_k > 0.
    const int sign = hw.a.back().sign();
    const SignedSqrtRational scale(sign, Rational(1) / norm);
    for (auto& x : hw.a) x = x * scale;
    return hw;
}

/// Complete, immutable table of C(j, m; m1, m2) for one spin magnitude.
class CgcTable {
public:
    int two_s() const { return two_s_; }
    SpinPair pair() const { return SpinPair(two_s_); }

    /// Exact lookup; zero when m != m1 + m2.  Throws IndexOutOfRange on invalid indices.
    const SignedSqrtRational& at(HalfInt j, HalfInt m, HalfInt m1, HalfInt m2) const {
        check_index(pair(), CoupledIndex{j, m});
        check_index(pair(), UncoupledIndex{m1, m2});
        if (m != m1 + m2) return zero_;
        return entries_[slot(j.as_int(), m1.twice(), m2.twice())];
    }

    /// Same coefficient embedded in the radical field, for state transforms.
    const RadicalSum& radical(HalfInt j, HalfInt m1, HalfInt m2) const {
        return radicals_[slot(j.as_int(), m1.twice(), m2.twice())];
    }

    const HighestWeightCoeffs& highest_weight(int j) const { return highest_[static_cast<std::size_t>(j)]; }

    /// Visit (j, m, m1, m2, C) with m = m1 + m2 over all valid indices, sorted by
    /// j descending, then m descending, then m1 descending.
    void for_each_entry(
        const std::function<void(int j, int two_m, int two_m1, int two_m2, const SignedSqrtRational&)>& fn) const {
        for (int j = two_s_; j >= 0; --j)
            for (int m = j; m >= -j; --m)
                for (int t1 = two_s_; t1 >= -two_s_; t1 -= 2) {
                    int t2 = 2 * m - t1;
                    if (t2 < -two_s_ || t2 > two_s_) continue;
                    fn(j, 2 * m, t1, t2, entries_[slot(j, t1, t2)]);
                }
    }

    std::size_t entry_count() const {
        std::size_t n = 0;
        for_each_entry([&](int, int, int, int, const SignedSqrtRational&) { ++n; });
        return n;
    }

    friend CgcTable build_table(int two_s);

private:
    explicit CgcTable(int two_s)
        : two_s_(two_s), n_(two_s + 1), entries_(static_cast<std::size_t>(n_) * n_ * n_) {}

    std::size_t slot(int j, int two_m1, int two_m2) const {
        const int a = (two_s_ - two_m1) / 2;
        const int b = (two_s_ - two_m2) / 2;
        return (static_cast<std::size_t>(j) * n_ + a) * n_ + b;
    }

    int two_s_;
    int n_;
    std::vector<SignedSqrtRational> entries_;
    std::vector<RadicalSum> radicals_;
    std::vector<HighestWeightCoeffs> highest_;
    SignedSqrtRational zero_;
};

/// Recurrence for the top row of each j, then ladder descent in m.
inline CgcTable build_table(int two_s) {
    if (two_s < 0) throw IndexOutOfRange("two_s must be nonnegative");
    CgcTable table(two_s);
    const int n = two_s + 1;
    // Lowering factor of a single spin: s- |m> = sqrt[(s + m)(s - m + 1)] |m - 1>,
    // written for the target projection m' = m - 1: sqrt[(s + m' + 1)(s - m')].
    auto lower_into = [two_s](int two_target) {
        return detail::sqrt_ratio((two_s + two_target) / 2 + 1, (two_s - two_target) / 2, 1);
    };

    for (int j = 0; j <= two_s; ++j) {
        table.highest_.push_back(highest_weight_coeffs(two_s, j));
        const auto& hw = table.highest_.back();

        // current[a] = C(j, m; m1 = s - a, m2 = m - m1)
        std::vector<SignedSqrtRational> current(static_cast<std::size_t>(n));
        for (int i = 0; i <= hw.k; ++i) current[static_cast<std::size_t>((two_s - hw.two_m1(i)) / 2)] = hw.a[i];

        for (int m = j;; --m) {
            for (int a = 0; a < n; ++a) {
                const int t1 = two_s - 2 * a;
                const int t2 = 2 * m - t1;
                if (t2 < -two_s || t2 > two_s) continue;
                table.entries_[table.slot(j, t1, t2)] = current[static_cast<std::size_t>(a)];
            }
            if (m == -j) break;

            // j- |j, m> = sqrt[(j + m)(j - m + 1)] |j, m - 1>
            const auto norm = detail::sqrt_ratio(j + m, j - m + 1, 1);
            std::vector<SignedSqrtRational> next(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                const int t1 = two_s - 2 * a;
                const int t2 = 2 * (m - 1) - t1;
                if (t2 < -two_s || t2 > two_s) continue;
                SignedSqrtRational sum;
                if (a > 0) {  // s1- from m1 + 1, same m2
                    sum = sum + lower_into(t1) * current[static_cast<std::size_t>(a - 1)];
                }
                if (t2 + 2 <= two_s) {  // s2- from m2 + 1, same m1
                    sum = sum + lower_into(t2) * current[static_cast<std::size_t>(a)];
                }
                next[static_cast<std::size_t>(a)] = sum / norm;
            }
            current = std::move(next);
        }
    }

    table.radicals_.reserve(table.entries_.size());
    for (const auto& e : table.entries_) table.radicals_.emplace_back(e);
    return table;
}

/// C(j, m; m1, m2) from a built table; zero when m != m1 + m2.
inline SignedSqrtRational cgc(const CgcTable& table, HalfInt j, HalfInt m, HalfInt m1, HalfInt m2) {
    return table.at(j, m, m1, m2);
}

/// Factorials as exact integers, extended on demand.
class FactorialCache {
public:
    const Integer& operator()(int n) {
        if (n < 0) throw std::domain_error("factorial of negative number");
        while (static_cast<int>(values_.size()) <= n) values_.push_back(values_.back() * static_cast<long>(values_.size()));
        return values_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<Integer> values_{Integer(1)};
};

/// Racah's closed form for two equal spins, evaluated exactly.  Independent of
/// build_table; shares only the Condon-Shortley convention.
inline SignedSqrtRational racah_oracle(FactorialCache& fact, int two_s, HalfInt j, HalfInt m, HalfInt m1,
                                       HalfInt m2) {
    const SpinPair pair(two_s);
    check_index(pair, CoupledIndex{j, m});
    check_index(pair, UncoupledIndex{m1, m2});
    if (m != m1 + m2) return {};

    // Everything below is an integer: s +- m_i and j +- m are integers.
    const int J = j.as_int();
    const int M = m.as_int();
    const int s_minus_m1 = (two_s - m1.twice()) / 2, s_plus_m1 = (two_s + m1.twice()) / 2;
    const int s_minus_m2 = (two_s - m2.twice()) / 2, s_plus_m2 = (two_s + m2.twice()) / 2;

    Rational prefactor(Integer(2 * J + 1) * fact(two_s - J) * fact(J) * fact(J), fact(two_s + J + 1));
    prefactor *= fact(J + M) * fact(J - M) * fact(s_minus_m1) * fact(s_plus_m1) * fact(s_minus_m2) *
                 fact(s_plus_m2);
    prefactor.canonicalize();

    // k-sum: (j - s + m1 + k) = J - s_minus_m1 + k,  (j - s - m2 + k) = J - s_plus_m2 + k.
    const int k_min = std::max({0, s_minus_m1 - J, s_plus_m2 - J});
    const int k_max = std::min({two_s - J, s_minus_m1, s_plus_m2});
    Rational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        Integer den = fact(k) * fact(two_s - J - k) * fact(s_minus_m1 - k) * fact(s_plus_m2 - k) *
                      fact(J - s_minus_m1 + k) * fact(J - s_plus_m2 + k);
        Rational term(Integer(k % 2 == 0 ? 1 : -1), den);
        term.canonicalize();
        sum += term;
    }
    return {sign_of(sum), sum * sum * prefactor};
}

inline SignedSqrtRational racah_oracle(int two_s, HalfInt j, HalfInt m, HalfInt m1, HalfInt m2) {
    FactorialCache fact;
    return racah_oracle(fact, two_s, j, m, m1, m2);
}

namespace detail {

inline std::string cg_label(int j, int two_m, int two_m1, int two_m2) {
    return "C(" + std::to_string(j) + "," + HalfInt::from_twice(two_m).str() + ";" +
           HalfInt::from_twice(two_m1).str() + "," + HalfInt::from_twice(two_m2).str() + ")";
}

}  // namespace detail

/// r_{k-1-n} * r_n == 1 for n in [0, k-1].
inline Verdict check_ratio_reciprocity(int two_s, int j) {
    detail::require_j(two_s, j);
    Verdict v;
    const int k = two_s - j;
    for (int n = 0; n < k; ++n) {
        ++v.checked;
        auto product = ratio_factor(two_s, j, k - 1 - n) * ratio_factor(two_s, j, n);
        if (product != SignedSqrtRational::one())
            v.fail("two_s=" + std::to_string(two_s) + " j=" + std::to_string(j) + " n=" + std::to_string(n) +
                   ": r_{k-1-n} r_n = " + product.str());
    }
    return v;
}

/// a_{k-n} = (-1)^k a_n on every top row and C(j,m;m1,m2) = (-1)^{2s-j} C(j,m;m2,m1) everywhere.
inline Verdict check_coefficient_symmetry(const CgcTable& table) {
    Verdict v;
    const int two_s = table.two_s();
    for (int j = 0; j <= two_s; ++j) {
        const auto& hw = table.highest_weight(j);
        const int phase = parity_sign(hw.k);
        for (int n = 0; n <= hw.k; ++n) {
            ++v.checked;
            const auto expected = phase > 0 ? hw.a[n] : -hw.a[n];
            if (hw.a[hw.k - n] != expected)
                v.fail("two_s=" + std::to_string(two_s) + " j=" + std::to_string(j) + " n=" + std::to_string(n) +
                       ": a_{k-n}=" + hw.a[hw.k - n].str() + " but (-1)^k a_n=" + expected.str());
        }
    }
    table.for_each_entry([&](int j, int two_m, int t1, int t2, const SignedSqrtRational& c) {
        ++v.checked;
        const auto& swapped = table.at(HalfInt::from_int(j), HalfInt::from_twice(two_m), HalfInt::from_twice(t2),
                                       HalfInt::from_twice(t1));
        const auto expected = parity_sign(two_s - j) > 0 ? swapped : -swapped;
        if (c != expected)
            v.fail(detail::cg_label(j, two_m, t1, t2) + "=" + c.str() + " but (-1)^{2s-j} C(j,m;m2,m1)=" +
                   expected.str());
    });
    return v;
}

/// Row and column orthonormality of each fixed-m block, in exact arithmetic.
inline Verdict check_orthogonality(const CgcTable& table) {
    Verdict v;
    const int two_s = table.two_s();
    const RadicalSum one = RadicalSum::from_rational(1);
    for (int m = -two_s; m <= two_s; ++m) {
        // Uncoupled keys with m1 + m2 = m, and the admissible j values.
        std::vector<std::pair<int, int>> keys;
        for (int t1 = two_s; t1 >= -two_s; t1 -= 2) {
            const int t2 = 2 * m - t1;
            if (t2 >= -two_s && t2 <= two_s) keys.emplace_back(t1, t2);
        }
        std::vector<int> js;
        for (int j = std::abs(m); j <= two_s; ++j) js.push_back(j);

        // Dot products run in the radical field, so incommensurable partial
        // sums cannot occur; the result must still be exactly 0 or 1.
        auto entry = [&](int j, const std::pair<int, int>& key) -> const RadicalSum& {
            return table.radical(HalfInt::from_int(j), HalfInt::from_twice(key.first), HalfInt::from_twice(key.second));
        };
        // `what` is only rendered on failure.
        auto report = [&](auto what, const RadicalSum& got, bool diagonal) {
            ++v.checked;
            const bool ok = diagonal ? got == one : got.is_zero();
            if (!ok) v.fail(what() + " = " + got.str() + ", expected " + (diagonal ? "1" : "0"));
        };

        for (std::size_t a = 0; a < js.size(); ++a)
            for (std::size_t b = a; b < js.size(); ++b) {
                RadicalSum dot;
                for (const auto& key : keys) dot += entry(js[a], key) * entry(js[b], key);
                report([&] {
                    return "m=" + std::to_string(m) + " rows j=" + std::to_string(js[a]) + ",j'=" + std::to_string(js[b]);
                }, dot, a == b);
            }
        for (std::size_t a = 0; a < keys.size(); ++a)
            for (std::size_t b = a; b < keys.size(); ++b) {
                RadicalSum dot;
                for (int j : js) dot += entry(j, keys[a]) * entry(j, keys[b]);
                report([&] {
                    return "m=" + std::to_string(m) + " columns " + HalfInt::from_twice(keys[a].first).str() + "," +
                           HalfInt::from_twice(keys[a].second).str() + " / " +
                           HalfInt::from_twice(keys[b].first).str() + "," + HalfInt::from_twice(keys[b].second).str();
                }, dot, a == b);
            }
    }
    return v;
}

/// (s1+ + s2+) annihilates every reconstructed |j, j>.
inline Verdict check_ladder_consistency(const CgcTable& table) {
    Verdict v;
    const int two_s = table.two_s();
    // s+ |m> = sqrt[(s - m)(s + m + 1)] |m + 1>, written for the source projection.
    auto raise_from = [two_s](int two_source) {
        return detail::sqrt_ratio((two_s - two_source) / 2, (two_s + two_source) / 2 + 1, 1);
    };
    for (int j = 0; j <= two_s; ++j) {
        const auto J = HalfInt::from_int(j);
        // Targets have total projection j + 1.
        for (int t1 = two_s; t1 >= -two_s; t1 -= 2) {
            const int t2 = 2 * (j + 1) - t1;
            if (t2 < -two_s || t2 > two_s) continue;
            ++v.checked;
            SignedSqrtRational sum;
            try {
                if (t1 - 2 >= -two_s)
                    sum = sum + raise_from(t1 - 2) *
                                    table.at(J, J, HalfInt::from_twice(t1 - 2), HalfInt::from_twice(t2));
                if (t2 - 2 >= -two_s)
                    sum = sum + raise_from(t2 - 2) *
                                    table.at(J, J, HalfInt::from_twice(t1), HalfInt::from_twice(t2 - 2));
            } catch (const IncommensurableRadicals& e) {
                v.fail(e.what());
                continue;
            }
            if (!sum.is_zero())
                v.fail("two_s=" + std::to_string(two_s) + " j=" + std::to_string(j) + ": j+|j,j> has component " +
                       sum.str() + " on (" + HalfInt::from_twice(t1).str() + "," + HalfInt::from_twice(t2).str() +
                       ")");
        }
    }
    return v;
}

/// a_n = (-1)^n a_0 prod_{l<n} r_l reproduces the recurrence output.
inline Verdict check_product_formula(const CgcTable& table) {
    Verdict v;
    const int two_s = table.two_s();
    for (int j = 0; j <= two_s; ++j) {
        const auto& hw = table.highest_weight(j);
        SignedSqrtRational product = SignedSqrtRational::one();
        for (int n = 0; n <= hw.k; ++n) {
            if (n > 0) product = product * ratio_factor(two_s, j, n - 1);
            ++v.checked;
            const auto expected = (n % 2 == 0 ? hw.a[0] : -hw.a[0]) * product;
            if (hw.a[n] != expected)
                v.fail("two_s=" + std::to_string(two_s) + " j=" + std::to_string(j) + " n=" + std::to_string(n) +
                       ": a_n=" + hw.a[n].str() + " product formula gives " + expected.str());
        }
    }
    return v;
}

/// Every table entry equals the Racah closed form exactly.
inline Verdict check_oracle_equivalence(const CgcTable& table) {
    Verdict v;
    FactorialCache fact;
    const int two_s = table.two_s();
    table.for_each_entry([&](int j, int two_m, int t1, int t2, const SignedSqrtRational& c) {
        ++v.checked;
        auto oracle = racah_oracle(fact, two_s, HalfInt::from_int(j), HalfInt::from_twice(two_m),
                                   HalfInt::from_twice(t1), HalfInt::from_twice(t2));
        if (oracle != c)
            v.fail(detail::cg_label(j, two_m, t1, t2) + ": table " + c.str() + ", oracle " + oracle.str());
    });
    return v;
}

}  // namespace spinstat
