#pragma once

// JSON forms of exact numbers, states, CGC tables and exchange reports.
// Integers inside exact numbers are decimal strings so they survive JSON
// readers limited to 64-bit (or double) numbers.

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinstat/cgc.hpp"
#include "spinstat/exchange.hpp"
#include "spinstat/spin_space.hpp"

namespace spinstat {

using Json = nlohmann::ordered_json;

inline Json to_json(const SignedSqrtRational& x) {
    return Json{{"sign", x.sign()},
                {"num", x.radicand().get_num().get_str()},
                {"den", x.radicand().get_den().get_str()}};
}

inline SignedSqrtRational signed_sqrt_from_json(const Json& j) {
    try {
        const int sign = j.at("sign").get<int>();
        const auto num = j.at("num").get<std::string>();
        const auto den = j.at("den").get<std::string>();
        const Integer n = detail::parse_integer(num, num);
        if (sign < -1 || sign > 1 || (sign == 0) != (n == 0))
            throw ParseError("sign " + std::to_string(sign) + " inconsistent with radicand " + num + "/" + den);
        return SignedSqrtRational(sign, n, detail::parse_integer(den, den));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad exact number: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("bad exact number: ") + e.what());
    }
}

/// One object for a single radical, an array of objects (summed) otherwise.
inline Json to_json(const RadicalSum& x) {
    if (auto single = x.as_single()) return to_json(*single);
    Json arr = Json::array();
    for (const auto& r : x.radicals()) arr.push_back(to_json(r));
    return arr;
}

inline RadicalSum radical_sum_from_json(const Json& j) {
    if (!j.is_array()) return RadicalSum(signed_sqrt_from_json(j));
    RadicalSum sum;
    for (const auto& item : j) sum += RadicalSum(signed_sqrt_from_json(item));
    return sum;
}

inline Json to_json(const TwoParticleState& state) {
    std::vector<std::pair<TwoParticleState::Key, RadicalSum>> terms(state.terms().begin(), state.terms().end());
    // R12 before R21, then m1 and m2 descending.
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const auto& [oa, ia] = a.first;
        const auto& [ob, ib] = b.first;
        if (oa != ob) return oa < ob;
        if (ia.m1 != ib.m1) return ia.m1 > ib.m1;
        return ia.m2 > ib.m2;
    });
    Json out{{"two_s", state.two_s()}, {"terms", Json::array()}};
    for (const auto& [key, amp] : terms)
        out["terms"].push_back(Json{{"orbital", to_string(key.first)},
                                    {"two_m1", key.second.m1.twice()},
                                    {"two_m2", key.second.m2.twice()},
                                    {"amp", to_json(amp)}});
    return out;
}

inline TwoParticleState state_from_json(const Json& j) {
    try {
        TwoParticleState state(j.at("two_s").get<int>());
        for (const auto& term : j.at("terms")) {
            const auto order = parse_orbital(term.at("orbital").get<std::string>());
            const UncoupledIndex idx{HalfInt::from_twice(term.at("two_m1").get<int>()),
                                     HalfInt::from_twice(term.at("two_m2").get<int>())};
            state.add(order, idx, radical_sum_from_json(term.at("amp")));
        }
        return state;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad state JSON: ") + e.what());
    } catch (const IndexOutOfRange& e) {
        throw ParseError(std::string("bad state JSON: ") + e.what());
    }
}

inline Json to_json(const CgcTable& table) {
    Json out{{"two_s", table.two_s()}, {"convention", "condon-shortley"}, {"entries", Json::array()}};
    auto& entries = out["entries"];
    table.for_each_entry([&](int j, int two_m, int t1, int t2, const SignedSqrtRational& c) {
        entries.push_back(Json{{"two_j", 2 * j}, {"two_m", two_m}, {"two_m1", t1}, {"two_m2", t2}, {"amp", to_json(c)}});
    });
    return out;
}

inline Json to_json(const ExchangeReport& report, std::size_t trials) {
    Json out{{"two_s", report.two_s}, {"trials", trials}};
    switch (report.sign) {
        case ObservedSign::Minus: out["sign"] = -1; break;
        case ObservedSign::Plus: out["sign"] = 1; break;
        case ObservedSign::Mixed: out["sign"] = "mixed"; break;
    }
    // The witness is the failing input state; its exchanged image rides alongside.
    if (report.witness) {
        out["witness"] = to_json(report.witness->before);
        out["witness_exchanged"] = to_json(report.witness->after);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace spinstat
