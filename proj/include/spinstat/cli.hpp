#pragma once

// Command-line front end: `table`, `verify`, `demo-rotation`, `exchange`.
// run_cli() takes its streams as arguments so it can be driven in-process.
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
// Timings go to the error stream; stdout is byte-identical for equal flags.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinstat/json_io.hpp"
#include "spinstat/verify.hpp"

namespace spinstat::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline std::string signed_word(int sign) { return sign < 0 ? "-1" : "+1"; }

inline std::string format_double(const char* fmt, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

inline int cmd_table(int two_s, const std::string& format, Streams io) {
    const CgcTable table = build_table(two_s);
    if (format == "json") {
        io.out << to_json(table).dump(2) << '\n';
        return kPass;
    }
    table.for_each_entry([&](int j, int two_m, int t1, int t2, const SignedSqrtRational& c) {
        io.out << "j=" << j << " m=" << two_m / 2 << " | m1=" << HalfInt::from_twice(t1).str()
               << " m2=" << HalfInt::from_twice(t2).str() << " : " << c.str() << '\n';
    });
    return kPass;
}

inline Json to_json(const SuiteResult& r) {
    return Json{{"suite", r.suite},
                {"cases", r.cases},
                {"failures", r.failures},
                {"status", r.passed() ? "pass" : "fail"},
                {"details", r.details},
                {"notes", r.notes}};
}

struct VerifyOptions {
    int max_two_s = 0;
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::string format = "text";
};

inline int cmd_verify(const VerifyOptions& opt, Streams io) {
    std::vector<SuiteResult> results;
    if (opt.suite == "cgc" || opt.suite == "all") results.push_back(run_cgc_suite(opt.max_two_s));
    if (opt.suite == "exchange" || opt.suite == "all")
        results.push_back(run_exchange_suite(opt.max_two_s, opt.trials, opt.seed));
    if (opt.suite == "rotation" || opt.suite == "all")
        results.push_back(run_rotation_suite(opt.max_two_s, opt.trials, opt.seed));

    bool all_passed = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        all_passed &= r.passed();
        io.err << "suite " << r.suite << ": " << format_double("%.1f", r.duration_ms) << " ms\n";
        if (opt.format == "json") {
            arr.push_back(to_json(r));
            continue;
        }
        io.out << "suite=" << r.suite << " max_two_s=" << opt.max_two_s << " seed=" << opt.seed
               << " trials=" << opt.trials << " cases=" << r.cases << " failures=" << r.failures << " "
               << (r.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& note : r.notes) io.out << "  " << note << '\n';
        for (const auto& what : r.details) io.out << "  failure: " << what << '\n';
    }
    if (opt.format == "json") io.out << arr.dump(2) << '\n';
    return all_passed ? kPass : kFail;
}

struct DemoOptions {
    int two_s = 0;
    std::optional<int> two_m;
    std::string which;
    std::uint64_t seed = 42;
    std::optional<double> alpha, beta, gamma;
};

inline int cmd_demo_rotation(const DemoOptions& opt, Streams io) {
    const int expected = statistics_sign(opt.two_s);
    const std::string s = HalfInt::from_twice(opt.two_s).str();

    if (opt.which == "same" || opt.which == "opposite") {
        if (!opt.two_m) throw CLI::ValidationError("--two-m", "required for --case " + opt.which);
        const HalfInt m = HalfInt::from_twice(*opt.two_m);
        const bool same = opt.which == "same";
        const int phase = same ? exchange_by_rotation_same_spin(opt.two_s, m)
                               : exchange_by_rotation_opposite_spin(opt.two_s, m);
        io.out << "s=" << s << " m=" << m.str() << " case=" << opt.which
               << (same ? " rotation=exp(-i pi J_z) on |m,m>" : " rotation=exp(-i pi J_y) on |-m,m>") << '\n';
        io.out << "phase = " << signed_word(phase) << ", expected (-1)^{2s} = " << signed_word(expected) << '\n';
        return phase == expected ? kPass : kFail;
    }

    // singlet
    EulerRotation r;
    if (opt.alpha || opt.beta || opt.gamma) {
        r = {opt.alpha.value_or(0.0), opt.beta.value_or(0.0), opt.gamma.value_or(0.0)};
    } else {
        SplitMix64 rng(opt.seed);
        r = random_rotation(rng);
    }
    const auto v = singlet_rotation_invariance(opt.two_s, r);
    io.out << "s=" << s << " case=singlet state=|j=0,m=0>\n";
    io.out << "rotation alpha=" << format_double("%.17g", r.alpha) << " beta=" << format_double("%.17g", r.beta)
           << " gamma=" << format_double("%.17g", r.gamma) << '\n';
    io.out << "max deviation " << format_double("%.1e", v.max_deviation) << (v.invariant ? " < " : " >= ")
           << format_double("%.0e", kSingletTolerance) << "; rotation sign " << signed_word(v.rotation_sign) << '\n';
    io.out << "expected exchange sign (-1)^{2s} = " << signed_word(v.statistics_sign)
           << (v.rotation_fails_exchange() ? "; rotation cannot produce it" : "; rotation agrees") << '\n';
    return v.invariant ? kPass : kFail;
}

/// With `check`, exit 1 unless the state is its own exchange image, i.e. an
/// admissible state of two identical particles.
inline int cmd_exchange(const std::string& input, bool check, Streams io) {
    Json doc;
    try {
        if (input == "-") {
            doc = Json::parse(io.in);
        } else {
            std::ifstream file(input);
            if (!file) throw ParseError("cannot open " + input);
            doc = Json::parse(file);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const auto state = state_from_json(doc);
    const auto image = exchange(state, build_table(state.two_s()));
    io.out << to_json(image).dump(2) << '\n';
    if (check && image != state) {
        io.err << "state is not invariant under exchange\n";
        return kFail;
    }
    return kPass;
}

inline int run_cli(int argc, const char* const* argv, Streams io) {
    CLI::App app{"Exact Clebsch-Gordan tables and spin-statistics checks for two identical spins", "spinstat"};
    app.require_subcommand(1);

    int table_two_s = 0;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Print the CGC table for two spins s");
    table->add_option("--two-s", table_two_s, "Twice the single-particle spin")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run property suites for every 2s up to a bound");
    verify->add_option("--max-two-s", vopt.max_two_s, "Largest 2s to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--suite", vopt.suite, "Suite to run")
        ->check(CLI::IsMember({"cgc", "exchange", "rotation", "all"}));
    verify->add_option("--seed", vopt.seed, "PRNG seed");
    verify->add_option("--trials", vopt.trials, "Random trials per spin")->check(CLI::PositiveNumber);
    verify->add_option("--format", vopt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    DemoOptions dopt;
    auto* demo = app.add_subcommand("demo-rotation", "Exchange sign produced by rotations");
    demo->add_option("--two-s", dopt.two_s, "Twice the single-particle spin")->required()->check(CLI::NonNegativeNumber);
    demo->add_option("--two-m", dopt.two_m, "Twice the projection m");
    demo->add_option("--case", dopt.which, "Configuration")
        ->required()
        ->check(CLI::IsMember({"same", "opposite", "singlet"}));
    demo->add_option("--seed", dopt.seed, "PRNG seed for the singlet rotation");
    demo->add_option("--alpha", dopt.alpha, "Euler angle alpha (radians)");
    demo->add_option("--beta", dopt.beta, "Euler angle beta (radians)");
    demo->add_option("--gamma", dopt.gamma, "Euler angle gamma (radians)");

    std::string input = "-";
    auto* exch = app.add_subcommand("exchange", "Apply the exchange operator to a state JSON");
    bool check = false;
    exch->add_option("--input", input, "State JSON file, '-' for standard input");
    exch->add_flag("--check", check, "Fail unless the state equals its exchange image");

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(table_two_s, table_format, io);
        if (verify->parsed()) return cmd_verify(vopt, io);
        if (demo->parsed()) return cmd_demo_rotation(dopt, io);
        return cmd_exchange(input, check, io);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, io.out, io.err) == 0 ? kPass : kUsage;
    } catch (const IndexOutOfRange& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

inline int run_cli(const std::vector<std::string>& args, Streams io) {
    std::vector<const char*> argv{"spinstat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), io);
}

}  // namespace spinstat::cli
