#pragma once

/*
 * Wigner d-matrices d^j_{m',m}(theta) = <j m'| exp(-i theta J_y) |j m>
 * (active rotations, z-y-z Euler angles), and the two rotation-based exchange
 * arguments for special spin configurations, plus the singlet counterexample.
 *
 * Rows and columns are indexed by m', m descending from j to -j.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "spinstat/cgc.hpp"

namespace spinstat {

/// Square (2j+1) x (2j+1) matrix; T = int for the exact theta = pi path, double otherwise.
template <typename T>
class WignerDMatrix {
public:
    WignerDMatrix(int two_j, double theta) : two_j_(two_j), theta_(theta), dim_(two_j + 1), entries_(dim_ * dim_) {
        if (two_j < 0) throw IndexOutOfRange("two_j must be nonnegative");
    }

    int two_j() const { return two_j_; }
    double theta() const { return theta_; }
    int dim() const { return dim_; }

    /// Entry by row/column position (0 <-> m = j).
    T& at(int row, int col) { return entries_[static_cast<std::size_t>(row * dim_ + col)]; }
    const T& at(int row, int col) const { return entries_[static_cast<std::size_t>(row * dim_ + col)]; }

    /// d_{m',m} addressed by twice the projections.
    const T& operator()(int two_m_row, int two_m_col) const {
        return at(position(two_m_row), position(two_m_col));
    }

    int position(int two_m) const {
        if (two_m < -two_j_ || two_m > two_j_ || (two_j_ - two_m) % 2 != 0)
            throw IndexOutOfRange("projection " + HalfInt::from_twice(two_m).str() + " invalid for j=" +
                                  HalfInt::from_twice(two_j_).str());
        return (two_j_ - two_m) / 2;
    }

    friend WignerDMatrix operator*(const WignerDMatrix& a, const WignerDMatrix& b) {
        WignerDMatrix out(a.two_j_, a.theta_ + b.theta_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                T sum{};
                for (int l = 0; l < a.dim_; ++l) sum += a.at(i, l) * b.at(l, k);
                out.at(i, k) = sum;
            }
        return out;
    }

    WignerDMatrix transposed() const {
        WignerDMatrix out(two_j_, -theta_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) out.at(i, k) = at(k, i);
        return out;
    }

private:
    int two_j_;
    double theta_;
    int dim_;
    std::vector<T> entries_;
};

using ExactDMatrix = WignerDMatrix<int>;
using DMatrix = WignerDMatrix<double>;

/// d^j_{m',m}(pi) = (-1)^{j-m} delta_{m',-m}, exactly.
inline ExactDMatrix d_matrix_pi(int two_j) {
    ExactDMatrix d(two_j, std::numbers::pi);
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
        d.at(d.position(-two_m), d.position(two_m)) = parity_sign((two_j - two_m) / 2);
    return d;
}

/// Wigner's explicit sum, accumulated in long double to contain the
/// cancellation between alternating terms at larger j.
inline DMatrix d_matrix(int two_j, double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("d_matrix: theta must be finite");
    DMatrix d(two_j, theta);
    std::vector<long double> fact(static_cast<std::size_t>(two_j + 2), 1.0L);
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<long double>(i);

    const long double c = std::cos(static_cast<long double>(theta) / 2);
    const long double s = std::sin(static_cast<long double>(theta) / 2);
    auto ipow = [](long double x, int n) {
        long double r = 1.0L;
        for (int i = 0; i < n; ++i) r *= x;
        return r;
    };

    // Work with integer offsets: jp = j + m', jm = j + m.
    for (int row = 0; row <= two_j; ++row) {
        const int j_plus_mp = two_j - row, j_minus_mp = row;  // j + m', j - m'
        for (int col = 0; col <= two_j; ++col) {
            const int j_plus_m = two_j - col, j_minus_m = col;
            const int mp_minus_m = j_plus_mp - j_plus_m;  // m' - m
            const long double norm =
                std::sqrt(fact[j_plus_m] * fact[j_minus_m] * fact[j_plus_mp] * fact[j_minus_mp]);
            long double sum = 0.0L;
            for (int k = std::max(0, -mp_minus_m); k <= std::min(j_plus_m, j_minus_mp); ++k) {
                const long double den =
                    fact[j_plus_m - k] * fact[k] * fact[j_minus_mp - k] * fact[k + mp_minus_m];
                const long double term = norm / den * ipow(c, two_j - 2 * k - mp_minus_m) *
                                         ipow(s, 2 * k + mp_minus_m);
                sum += ((k + mp_minus_m) % 2 == 0) ? term : -term;
            }
            d.at(row, col) = static_cast<double>(sum);
        }
    }
    return d;
}

/// Active rotation R = exp(-i alpha J_z) exp(-i beta J_y) exp(-i gamma J_z).
struct EulerRotation {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

using ComplexMatrix = std::vector<std::complex<double>>;

/// D^j_{m',m} = exp(-i alpha m') d^j_{m',m}(beta) exp(-i gamma m), row-major.
inline ComplexMatrix wigner_D(int two_j, const EulerRotation& r) {
    const auto d = d_matrix(two_j, r.beta);
    const int n = two_j + 1;
    ComplexMatrix out(static_cast<std::size_t>(n * n));
    for (int row = 0; row < n; ++row) {
        const double mp = (two_j - 2 * row) / 2.0;
        for (int col = 0; col < n; ++col) {
            const double m = (two_j - 2 * col) / 2.0;
            out[static_cast<std::size_t>(row * n + col)] =
                std::polar(1.0, -r.alpha * mp) * d.at(row, col) * std::polar(1.0, -r.gamma * m);
        }
    }
    return out;
}

namespace detail {

inline void require_projection(int two_s, HalfInt m) {
    if (!SpinPair(two_s).valid_projection(m))
        throw IndexOutOfRange("projection m=" + m.str() + " invalid for s=" + HalfInt::from_twice(two_s).str());
}

}  // namespace detail

/// pi rotation about z on psi_{m,m}(r1, r2): spin phase exp(-i 2 pi m) times the
/// orbital interchange (+1 for l = 0).  2m has the parity of 2s, so the phase is real.
inline int exchange_by_rotation_same_spin(int two_s, HalfInt m) {
    detail::require_projection(two_s, m);
    const int spin_phase = parity_sign(m.twice());  // exp(-i pi * 2m)
    const int orbital_phase = 1;
    return spin_phase * orbital_phase;
}

/// pi rotation about y on psi_{-m,m}(r1, r2): particle 1 goes -m -> m with
/// d_{m,-m}(pi), particle 2 goes m -> -m with d_{-m,m}(pi); orbital part +1.
inline int exchange_by_rotation_opposite_spin(int two_s, HalfInt m) {
    detail::require_projection(two_s, m);
    const auto d = d_matrix_pi(two_s);
    const int orbital_phase = 1;
    return d(m.twice(), -m.twice()) * d(-m.twice(), m.twice()) * orbital_phase;
}

struct SingletVerdict {
    int two_s = 0;
    EulerRotation rotation;
    double max_deviation = 0.0;
    bool invariant = false;
    /// Phase the rotation gives the singlet (overlap <singlet|R|singlet>, rounded).
    int rotation_sign = 1;
    int statistics_sign = 1;

    /// Rotation cannot supply the exchange sign for this s.
    bool rotation_fails_exchange() const { return rotation_sign != statistics_sign; }
};

constexpr double kSingletTolerance = 1e-10;

/// Rotates the j = 0 state of two spins s by D(R) (x) D(R) and measures the change.
inline SingletVerdict singlet_rotation_invariance(int two_s, const EulerRotation& rotation) {
    if (two_s < 1) throw IndexOutOfRange("singlet_rotation_invariance: two_s must be >= 1");
    const CgcTable table = build_table(two_s);
    const int n = two_s + 1;
    const auto zero = HalfInt::from_int(0);

    // psi[a * n + b] = C(0,0; m1 = s - a, m2 = s - b)
    std::vector<std::complex<double>> psi(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto m1 = HalfInt::from_twice(two_s - 2 * a), m2 = HalfInt::from_twice(two_s - 2 * b);
            psi[static_cast<std::size_t>(a * n + b)] = table.at(zero, zero, m1, m2).to_double();
        }

    const auto D = wigner_D(two_s, rotation);
    std::vector<std::complex<double>> rotated(psi.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::complex<double> sum = 0.0;
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    sum += D[static_cast<std::size_t>(a * n + c)] * D[static_cast<std::size_t>(b * n + e)] *
                           psi[static_cast<std::size_t>(c * n + e)];
            rotated[static_cast<std::size_t>(a * n + b)] = sum;
        }

    SingletVerdict v;
    v.two_s = two_s;
    v.rotation = rotation;
    std::complex<double> overlap = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        v.max_deviation = std::max(v.max_deviation, std::abs(rotated[i] - psi[i]));
        overlap += std::conj(psi[i]) * rotated[i];
    }
    v.invariant = v.max_deviation < kSingletTolerance;
    v.rotation_sign = overlap.real() >= 0 ? 1 : -1;
    v.statistics_sign = parity_sign(two_s);
    return v;
}

/// Uniform alpha, gamma in [0, 2pi), beta in [0, pi].
template <typename Rng>
EulerRotation random_rotation(Rng& rng) {
    constexpr double two_pi = 2 * std::numbers::pi;
    EulerRotation r;
    r.alpha = two_pi * rng.next_unit();
    r.beta = std::numbers::pi * rng.next_unit();
    r.gamma = two_pi * rng.next_unit();
    return r;
}

}  // namespace spinstat
