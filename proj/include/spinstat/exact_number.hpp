#pragma once

/*
 * Exact real numbers of the form  sign * sqrt(p/q).
 *
 * Every Clebsch-Gordan coefficient for two spins has this form, and so do
 * the ladder factors and highest-weight amplitudes used to build them.
 * The set is closed under multiplication and division; a sum of two such
 * values stays in the set iff the ratio of the radicands is the square of
 * a rational ("commensurable" radicals).
 *
 * Canonical form: q > 0, gcd(p, q) = 1, and sign == 0 iff p == 0.
 */

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>

#include "spinstat/errors.hpp"

namespace spinstat {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& r) { return sgn(r); }
inline int sign_of(const Integer& z) { return sgn(z); }

/// True iff r = t^2 for some rational t; on success t >= 0 is stored in root.
inline bool rational_sqrt(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

class SignedSqrtRational {
public:
    SignedSqrtRational() : sign_(0), radicand_(0) {}

    /// sign * sqrt(radicand); radicand must be nonnegative.
    SignedSqrtRational(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
        if (sgn(radicand_) < 0)
            throw std::domain_error("SignedSqrtRational: negative radicand");
        if (sign_ < -1 || sign_ > 1)
            throw std::domain_error("SignedSqrtRational: sign must be -1, 0 or +1");
        normalize();
    }

    SignedSqrtRational(int sign, const Integer& num, const Integer& den)
        : SignedSqrtRational(sign, make_rational(num, den)) {}

    static SignedSqrtRational zero() { return {}; }
    static SignedSqrtRational one() { return {1, Rational(1)}; }

    /// The exact rational value r.
    static SignedSqrtRational from_rational(const Rational& r) {
        return {sign_of(r), r * r};
    }
    static SignedSqrtRational from_int(long v) { return from_rational(Rational(v)); }

    /// +sqrt(r), r >= 0.
    static SignedSqrtRational sqrt_of(const Rational& r) { return {sgn(r) == 0 ? 0 : 1, r}; }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// If the value is rational, store it in out.
    bool as_rational(Rational& out) const {
        Rational root;
        if (!rational_sqrt(radicand_, root)) return false;
        out = sign_ * root;
        return true;
    }

    SignedSqrtRational operator-() const {
        SignedSqrtRational r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend SignedSqrtRational multiply(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        if (x.is_zero() || y.is_zero()) return {};
        return {x.sign_ * y.sign_, x.radicand_ * y.radicand_};
    }

    friend SignedSqrtRational divide(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        if (y.is_zero()) throw std::domain_error("SignedSqrtRational: division by zero");
        if (x.is_zero()) return {};
        return {x.sign_ * y.sign_, x.radicand_ / y.radicand_};
    }

    /// Exact sum; throws IncommensurableRadicals when the result would need two radicals.
    friend SignedSqrtRational add(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        // x + y = sqrt(ry) * (sx * t + sy) with t = sqrt(rx / ry) rational.
        Rational t;
        if (!rational_sqrt(x.radicand_ / y.radicand_, t))
            throw IncommensurableRadicals("cannot add " + x.str() + " and " + y.str());
        Rational coeff = x.sign_ * t + y.sign_;
        return {sign_of(coeff), coeff * coeff * y.radicand_};
    }

    friend SignedSqrtRational subtract(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        return add(x, -y);
    }

    friend SignedSqrtRational operator*(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        return multiply(x, y);
    }
    friend SignedSqrtRational operator/(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        return divide(x, y);
    }
    friend SignedSqrtRational operator+(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        return add(x, y);
    }
    friend SignedSqrtRational operator-(const SignedSqrtRational& x, const SignedSqrtRational& y) {
        return subtract(x, y);
    }

    /// x^2 = p/q exactly.
    Rational square() const { return radicand_; }

    double to_double() const {
        if (is_zero()) return 0.0;
        // get_d truncates; with 128 working bits the result is within 1 ulp.
        mpf_class v(radicand_, 128);
        mpf_class root(0, 128);
        mpf_sqrt(root.get_mpf_t(), v.get_mpf_t());
        return sign_ * root.get_d();
    }

    /// "0", "2", "-1/3", "sqrt(2/3)", "-sqrt(5)".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out = sign_ < 0 ? "-" : "";
        Rational root;
        if (rational_sqrt(radicand_, root)) return out + rational_str(root);
        return out + "sqrt(" + rational_str(radicand_) + ")";
    }

    /// Inverse of str(); also accepts "sqrt(p/q)" with a perfect-square radicand.
    static SignedSqrtRational parse(std::string_view text);

    friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }

private:
    static Rational make_rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("SignedSqrtRational: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    static std::string rational_str(const Rational& r) {
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }

    void normalize() {
        radicand_.canonicalize();
        if (sign_ == 0 || sgn(radicand_) == 0) {
            sign_ = 0;
            radicand_ = 0;
        }
    }

    int sign_;
    Rational radicand_;
};

namespace detail {

inline Integer parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
    for (char c : digits)
        if (c < '0' || c > '9') throw ParseError("bad integer in '" + std::string(whole) + "'");
    return Integer(std::string(digits));
}

inline Rational parse_fraction(std::string_view body, std::string_view whole) {
    auto slash = body.find('/');
    Integer num = parse_integer(body.substr(0, slash), whole);
    Integer den = 1;
    if (slash != std::string_view::npos) den = parse_integer(body.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace detail

inline SignedSqrtRational SignedSqrtRational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty number");
    int sign = 1;
    if (s.front() == '-') {
        sign = -1;
        s.remove_prefix(1);
    }
    constexpr std::string_view prefix = "sqrt(";
    if (s.substr(0, prefix.size()) == prefix) {
        if (s.back() != ')') throw ParseError("missing ')' in '" + std::string(text) + "'");
        Rational r = detail::parse_fraction(s.substr(prefix.size(), s.size() - prefix.size() - 1), text);
        return {sgn(r) == 0 ? 0 : sign, r};
    }
    Rational r = detail::parse_fraction(s, text);
    return from_rational(sign * r);
}

inline std::ostream& operator<<(std::ostream& os, const SignedSqrtRational& x) { return os << x.str(); }

}  // namespace spinstat
