#pragma once

#include <string>

#include <json.hpp>  // nlohmann/json, vendored

#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/qseries.hpp"
#include "qhurwitz/tau.hpp"
#include "qhurwitz/weights.hpp"

// JSON documents emitted by the CLI. Rationals are always "p/q" strings and
// keys keep insertion order, so identical inputs give byte-identical output.

namespace qhurwitz {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

inline Json to_json(const QSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_string(c));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const MeasureReport& report)
{
    Json support = Json::array();
    for (const auto& [lambda, prob] : report.support)
        support.push_back(Json{{"lambda", to_string(lambda)}, {"prob", to_string(prob)}});
    return Json{{"d", report.d}, {"q", to_string(report.q)}, {"support", support}};
}

inline Json to_json(const BranchConfig& config)
{
    Json profiles = Json::array();
    for (const auto& mu : config.profiles())
        profiles.push_back(to_string(mu));
    return profiles;
}

inline Json to_json(const QuantumHurwitzResult& result)
{
    Json breakdown = Json::array();
    for (const auto& part : result.breakdown)
        breakdown.push_back(Json{{"lambda", to_string(part.lambda)},
                                 {"hurwitz_sum", to_string(part.hurwitz_sum)},
                                 {"weight", to_json(part.weight)},
                                 {"contribution", to_json(part.contribution)}});
    return Json{{"d", result.d},
                {"n", result.mu.weight()},
                {"mu", to_string(result.mu)},
                {"nu", to_string(result.nu)},
                {"series", to_json(result.series)},
                {"breakdown", breakdown}};
}

inline Json to_json(const TauCheckEntry& e)
{
    return Json{{"n", e.n},
                {"d", e.d},
                {"mu", to_string(e.mu)},
                {"nu", to_string(e.nu)},
                {"match", e.match()},
                {"zero", e.zero()},
                {"tau", to_json(e.tau)},
                {"hurwitz", to_json(e.hurwitz)}};
}

} // namespace qhurwitz
