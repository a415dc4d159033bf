#pragma once

/*
 * Finite sums  c_1 sqrt(d_1) + ... + c_n sqrt(d_n)  with rational c_i and
 * distinct squarefree integers d_i.
 *
 * Square roots of distinct squarefree integers are linearly independent over
 * the rationals, so the map d_i -> c_i is a canonical representation and
 * equality is field-by-field.  Unlike SignedSqrtRational this set is closed
 * under addition, which general two-particle states need: coupling a state
 * with amplitudes on several (m1, m2) keys mixes incommensurable CGCs.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinstat/exact_number.hpp"

namespace spinstat {

namespace detail {

inline const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1UL << 16;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long k = i * i; k <= limit; k += i) composite[k] = true;
        }
        return out;
    }();
    return primes;
}

/// n = factor^2 * kernel with kernel squarefree; n > 0.
inline std::pair<Integer, Integer> squarefree_split(Integer n) {
    Integer factor = 1, kernel = 1;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        int exponent = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++exponent;
        }
        for (int e = 0; e + 1 < exponent; e += 2) factor *= p;
        if (exponent % 2 == 1) kernel *= p;
    }
    if (n == 1) return {factor, kernel};
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return {factor * root, kernel};
    }
    // All remaining prime factors exceed 2^16; below 2^48 there are at most two
    // of them and, the cofactor not being a square, they are distinct.
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 48)
        throw std::domain_error("squarefree_split: cofactor " + n.get_str() + " too large to factor");
    return {factor, kernel * n};
}

}  // namespace detail

class RadicalSum {
public:
    RadicalSum() = default;

    RadicalSum(const SignedSqrtRational& x) {  // NOLINT(google-explicit-constructor)
        add_term(x);
    }

    static RadicalSum from_rational(const Rational& r) {
        RadicalSum out;
        if (sgn(r) != 0) out.terms_.emplace(Integer(1), r);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// kernel -> coefficient, kernels ascending.
    const std::map<Integer, Rational>& terms() const { return terms_; }

    /// Value as a single signed radical, when it has at most one term.
    std::optional<SignedSqrtRational> as_single() const {
        if (terms_.empty()) return SignedSqrtRational::zero();
        if (terms_.size() > 1) return std::nullopt;
        const auto& [kernel, coeff] = *terms_.begin();
        return SignedSqrtRational(sign_of(coeff), coeff * coeff * kernel);
    }

    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
        return std::nullopt;
    }

    /// Each term as a signed radical, in kernel order.
    std::vector<SignedSqrtRational> radicals() const {
        std::vector<SignedSqrtRational> out;
        out.reserve(terms_.size());
        for (const auto& [kernel, coeff] : terms_)
            out.emplace_back(sign_of(coeff), coeff * coeff * kernel);
        return out;
    }

    RadicalSum operator-() const {
        RadicalSum r = *this;
        for (auto& [kernel, coeff] : r.terms_) coeff = -coeff;
        return r;
    }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [kernel, coeff] : o.terms_) accumulate(kernel, coeff);
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) { return *this += -o; }

    RadicalSum& operator*=(const Rational& r) {
        if (sgn(r) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [kernel, coeff] : terms_) coeff *= r;
        return *this;
    }

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }

    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                // sqrt(ka) sqrt(kb) = g sqrt((ka/g)(kb/g)),  g = gcd(ka, kb)
                Integer g = gcd(ka, kb);
                Integer kernel = (ka / g) * (kb / g);
                out.accumulate(kernel, ca * cb * g);
            }
        }
        return out;
    }

    friend RadicalSum operator*(const RadicalSum& a, const SignedSqrtRational& x) { return a * RadicalSum(x); }
    friend RadicalSum operator*(const SignedSqrtRational& x, const RadicalSum& a) { return a * RadicalSum(x); }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

    double to_double() const {
        double sum = 0.0;
        for (const auto& [kernel, coeff] : terms_) sum += coeff.get_d() * std::sqrt(kernel.get_d());
        return sum;
    }

    /// Terms joined with " + ", e.g. "sqrt(1/2) + -sqrt(3/8)"; "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& r : radicals()) {
            if (!out.empty()) out += " + ";
            out += r.str();
        }
        return out;
    }

private:
    void add_term(const SignedSqrtRational& x) {
        if (x.is_zero()) return;
        // sqrt(p/q) = sqrt(p q) / q
        const Rational& r = x.radicand();
        auto [factor, kernel] = detail::squarefree_split(r.get_num() * r.get_den());
        Rational coeff(factor, r.get_den());
        coeff.canonicalize();
        accumulate(kernel, x.sign() * coeff);
    }

    void accumulate(const Integer& kernel, const Rational& coeff) {
        if (sgn(coeff) == 0) return;
        auto [it, inserted] = terms_.try_emplace(kernel, coeff);
        if (inserted) return;
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }

    std::map<Integer, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RadicalSum& x) { return os << x.str(); }

}  // namespace spinstat
