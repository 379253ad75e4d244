#pragma once

#include "fibdecomp/decomposition.hpp"
#include "fibdecomp/numeric.hpp"
#include "fibdecomp/oracle.hpp"

#include <json.hpp>

namespace fibdecomp {

/// {"n": "<decimal>", "system": "chung-graham", "coefficients": [c1, c2, ...]}
/// Decimal strings, not native numbers, carry the arbitrary-precision value.
inline nlohmann::json to_json(const CGDecomposition& d) {
    return {
        {"n", to_decimal(cg_evaluate(d))},
        {"system", "chung-graham"},
        {"coefficients", d.coefficients},
    };
}

/// {"n": "<decimal>", "system": "zeckendorf", "indices": [i1, i2, ...]}
inline nlohmann::json to_json(const ZeckDecomposition& d) {
    return {
        {"n", to_decimal(zeck_evaluate(d))},
        {"system", "zeckendorf"},
        {"indices", d.indices},
    };
}

/// {"check": ..., "range": ..., "passed": bool, "counterexample": "<decimal>" | null}
inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j = {
        {"check", report.check},
        {"range", report.range},
        {"passed", report.passed},
        {"counterexample", nullptr},
    };
    if (report.counterexample) j["counterexample"] = to_decimal(*report.counterexample);
    return j;
}

}  // namespace fibdecomp
