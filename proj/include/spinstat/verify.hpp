#pragma once

// Property suites over all spins up to a bound.  Each suite returns a
// SuiteResult; `notes` carries one deterministic summary line per spin.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "spinstat/cgc.hpp"
#include "spinstat/exchange.hpp"
#include "spinstat/rotations.hpp"
#include "spinstat/spin_space.hpp"

namespace spinstat {

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double duration_ms = 0.0;
    std::vector<std::string> details;  // failure descriptors, capped
    std::vector<std::string> notes;

    bool passed() const { return failures == 0; }

    void absorb(const Verdict& v) {
        cases += v.checked;
        failures += v.violations.size();
        for (const auto& what : v.violations)
            if (details.size() < kMaxDetails) details.push_back(what);
    }

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        if (details.size() < kMaxDetails) details.push_back(what);
    }

    static constexpr std::size_t kMaxDetails = 20;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string spin_label(int two_s) { return "s=" + HalfInt::from_twice(two_s).str(); }

inline std::string ok_word(std::size_t failures_before, std::size_t failures_after) {
    return failures_before == failures_after ? "ok" : "FAIL";
}

}  // namespace detail

struct CgcSuiteOptions {
    bool identities = true;  // reciprocity, coefficient symmetry, orthogonality, ladder, product formula
    bool oracle = true;      // Racah closed form
};

inline SuiteResult run_cgc_suite(int max_two_s, CgcSuiteOptions options = {}) {
    detail::Stopwatch clock;
    SuiteResult result;
    result.suite = "cgc";
    for (int two_s = 0; two_s <= max_two_s; ++two_s) {
        const std::size_t before = result.failures;
        const CgcTable table = build_table(two_s);
        std::string line = detail::spin_label(two_s) + ":";
        if (options.identities) {
            Verdict reciprocity;
            for (int j = 0; j <= two_s; ++j) reciprocity.merge(check_ratio_reciprocity(two_s, j));
            const auto symmetry = check_coefficient_symmetry(table);
            const auto orthogonality = check_orthogonality(table);
            const auto ladder = check_ladder_consistency(table);
            const auto product = check_product_formula(table);
            for (const Verdict& v : {reciprocity, symmetry, orthogonality, ladder, product}) result.absorb(v);
            line += " reciprocity=" + std::to_string(reciprocity.checked) +
                    " symmetry=" + std::to_string(symmetry.checked) +
                    " orthogonality=" + std::to_string(orthogonality.checked) +
                    " ladder=" + std::to_string(ladder.checked) + " product=" + std::to_string(product.checked);
        }
        if (options.oracle) {
            const auto oracle = check_oracle_equivalence(table);
            result.absorb(oracle);
            line += " oracle=" + std::to_string(oracle.checked);
        }
        result.notes.push_back(line + " " + detail::ok_word(before, result.failures));
    }
    result.duration_ms = clock.elapsed_ms();
    return result;
}

struct ExchangeSuiteOptions {
    bool statistics = true;  // random-state spin-statistics sign and every basis state
    bool involutions = true; // P^2, E_s^2, E^2
    bool fixed_points = true;
};

inline SuiteResult run_exchange_suite(int max_two_s, std::size_t trials, std::uint64_t seed,
                                      ExchangeSuiteOptions options = {}) {
    detail::Stopwatch clock;
    SuiteResult result;
    result.suite = "exchange";
    for (int two_s = 0; two_s <= max_two_s; ++two_s) {
        const std::size_t before = result.failures;
        const CgcTable table = build_table(two_s);
        const int expected = statistics_sign(two_s);
        std::string line = detail::spin_label(two_s) + ":";

        if (options.statistics) {
            const auto report = verify_spin_statistics(table, trials, seed);
            result.check(report.matches_statistics(),
                         detail::spin_label(two_s) + ": observed exchange sign " + to_string(report.sign) +
                             ", expected " + std::to_string(expected));
            for (const auto& [order, idx] : uncoupled_keys(two_s)) {
                const auto psi = basis_state(two_s, order, idx.m1, idx.m2);
                const auto sign = observed_exchange_sign(psi, exchange(psi, table));
                result.check(sign && *sign == expected,
                             detail::spin_label(two_s) + ": basis state (" + to_string(order) + "," + idx.m1.str() +
                                 "," + idx.m2.str() + ") breaks the exchange relation");
            }
            line += " sign=" + to_string(report.sign) + " expected=" + (expected < 0 ? "-1" : "+1") +
                    " trials=" + std::to_string(report.states_tested);
        }

        if (options.involutions || options.fixed_points) {
            for (std::size_t t = 0; t < trials; ++t) {
                auto rng = trial_stream(seed, t);
                const auto psi = random_state(two_s, rng);
                const std::string tag = detail::spin_label(two_s) + " trial " + std::to_string(t);
                if (options.involutions) {
                    const auto p = parity(psi, table);
                    result.check(parity(p, table) == psi, tag + ": P^2 != 1");
                    result.check(spin_swap(spin_swap(psi)) == psi, tag + ": E_s^2 != 1");
                    result.check(exchange(exchange(psi, table), table) == psi, tag + ": E^2 != 1");
                }
                if (options.fixed_points) {
                    const auto sym = symmetrize(psi);
                    result.check(exchange(sym, table) == sym, tag + ": symmetrized state not fixed by E");
                }
            }
            if (options.involutions) line += " involutions";
            if (options.fixed_points) line += " fixed_points";
        }
        result.notes.push_back(line + " " + detail::ok_word(before, result.failures));
    }
    result.duration_ms = clock.elapsed_ms();
    return result;
}

inline SuiteResult run_rotation_suite(int max_two_s, std::size_t trials, std::uint64_t seed) {
    detail::Stopwatch clock;
    SuiteResult result;
    result.suite = "rotation";
    constexpr double kOrthoTol = 1e-12;
    for (int two_s = 0; two_s <= max_two_s; ++two_s) {
        const std::size_t before = result.failures;
        const std::string label = detail::spin_label(two_s);
        const int expected = statistics_sign(two_s);

        for (HalfInt m : SpinPair(two_s).projections()) {
            result.check(exchange_by_rotation_same_spin(two_s, m) == expected,
                         label + " m=" + m.str() + ": z-rotation phase differs from (-1)^{2s}");
            result.check(exchange_by_rotation_opposite_spin(two_s, m) == expected,
                         label + " m=" + m.str() + ": y-rotation phase differs from (-1)^{2s}");
        }

        const auto dpi = d_matrix_pi(two_s);
        for (HalfInt m : SpinPair(two_s).projections())
            result.check(dpi(-m.twice(), m.twice()) == parity_sign((two_s - m.twice()) / 2),
                         label + " m=" + m.str() + ": d_{-m,m}(pi) != (-1)^{j-m}");
        const auto dpi2 = dpi * dpi;
        bool square_ok = true;
        for (int r = 0; r < dpi2.dim(); ++r)
            for (int c = 0; c < dpi2.dim(); ++c) square_ok &= dpi2.at(r, c) == (r == c ? expected : 0);
        result.check(square_ok, label + ": d(pi)^2 != (-1)^{2j} I");

        const auto dfloat = d_matrix(two_s, std::numbers::pi);
        double pi_dev = 0.0;
        for (int r = 0; r < dpi.dim(); ++r)
            for (int c = 0; c < dpi.dim(); ++c) pi_dev = std::max(pi_dev, std::abs(dfloat.at(r, c) - dpi.at(r, c)));
        result.check(pi_dev < kOrthoTol, label + ": floating d(pi) deviates from exact by " + std::to_string(pi_dev));

        SplitMix64 rng(seed + static_cast<std::uint64_t>(two_s));
        double ortho_dev = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const double theta = 2 * std::numbers::pi * rng.next_unit();
            const auto d = d_matrix(two_s, theta);
            const auto dtd = d.transposed() * d;
            for (int r = 0; r < d.dim(); ++r)
                for (int c = 0; c < d.dim(); ++c)
                    ortho_dev = std::max(ortho_dev, std::abs(dtd.at(r, c) - (r == c ? 1.0 : 0.0)));
        }
        result.check(ortho_dev < kOrthoTol, label + ": d^T d deviates from I by " + std::to_string(ortho_dev));

        std::string line = label + ": rotation_sign=" + (expected < 0 ? "-1" : "+1");
        if (two_s >= 1) {
            double singlet_dev = 0.0;
            bool always_plus = true;
            for (std::size_t t = 0; t < trials; ++t) {
                const auto v = singlet_rotation_invariance(two_s, random_rotation(rng));
                singlet_dev = std::max(singlet_dev, v.max_deviation);
                always_plus &= v.rotation_sign == 1;
                result.check(v.invariant, label + ": singlet changed by " + std::to_string(v.max_deviation));
            }
            result.check(always_plus, label + ": singlet picked up a sign under rotation");
            line += std::string(" singlet=") + (singlet_dev < kSingletTolerance ? "invariant" : "changed") +
                    (expected < 0 ? " (rotation cannot give the fermionic sign)" : "");
        }
        result.notes.push_back(line + " " + detail::ok_word(before, result.failures));
    }
    result.duration_ms = clock.elapsed_ms();
    return result;
}

}  // namespace spinstat
