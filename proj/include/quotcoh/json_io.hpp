#pragma once

// JSON forms of series and verification reports. Requires nlohmann/json on
// the include path (vendored as json.hpp); kept out of the core headers so
// the library itself stays dependency-free.

#include "quotcoh/pipeline.hpp"
#include "quotcoh/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace quotcoh {

/// {"num": {"0": 1, "2": 1}, "den": [2, 4]} means (1+t^2)/((1-t^2)(1-t^4)).
inline nlohmann::json series_to_json(const RationalSeries& s)
{
    nlohmann::json num = nlohmann::json::object();
    for (const auto& [e, c] : s.numerator().coefficients()) {
        if (c < std::numeric_limits<std::int64_t>::min() || c > std::numeric_limits<std::int64_t>::max())
            throw std::domain_error("series_to_json: coefficient out of int64 range");
        num[std::to_string(e)] = static_cast<std::int64_t>(c);
    }
    nlohmann::json den = nlohmann::json::array();
    for (int k : s.denominator())
        den.push_back(k);
    return nlohmann::json{{"num", std::move(num)}, {"den", std::move(den)}};
}

inline RationalSeries series_from_json(const nlohmann::json& j)
{
    TPoly num;
    for (const auto& [key, value] : j.at("num").items())
        num.add_term(Integer(value.get<std::int64_t>()), std::stoi(key));
    std::multiset<int> den;
    for (const auto& k : j.at("den"))
        den.insert(k.get<int>());
    return RationalSeries(std::move(num), std::move(den));
}

inline nlohmann::json case_to_json(const CaseResult& c)
{
    nlohmann::json j{{"name", c.name}, {"n", c.n}, {"pass", c.pass}};
    j["expected"] = c.expected_series ? series_to_json(*c.expected_series) : nlohmann::json(c.expected);
    j["actual"] = c.actual_series ? series_to_json(*c.actual_series) : nlohmann::json(c.actual);
    return j;
}

/// The report schema used by the CLI:
/// {"suite": str, "cases": [{"name", "n", "pass", "expected", "actual"}], "pass": bool}
inline nlohmann::json report_to_json(const VerificationReport& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseResult& c : r.cases)
        cases.push_back(case_to_json(c));
    return nlohmann::json{{"suite", r.suite}, {"cases", std::move(cases)}, {"pass", r.pass()}};
}

} // namespace quotcoh
