/**
 * @file report.hpp
 * @brief JSON views of Hilbert functions and check reports.
 */
#pragma once

#include <json.hpp>

#include "ginred/gin.hpp"

namespace ginred {

inline nlohmann::json to_json(const HilbertFunction& hf) {
    return {{"bound", hf.bound}, {"values", hf.values}};
}

inline nlohmann::json to_json(const DominanceReport& rep) {
    nlohmann::json per = nlohmann::json::array();
    for (int j = 0; j <= rep.bound; ++j)
        per.push_back({{"j", j}, {"lhs", rep.lhs[j]}, {"rhs", rep.rhs[j]}});
    return {{"p", rep.p}, {"holds", rep.holds}, {"perDegree", per}};
}

inline nlohmann::json to_json(const ReductionComparison& c) {
    return {{"rIdeal", c.r_ideal}, {"rInitial", c.r_initial}, {"holds", c.holds}};
}

inline nlohmann::json to_json(const LexComparison& c) {
    return {{"rIdeal", c.r_ideal}, {"rLex", c.r_lex}, {"holds", c.holds}};
}

}  // namespace ginred
