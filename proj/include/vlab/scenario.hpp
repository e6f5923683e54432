#ifndef VLAB_SCENARIO_HPP
#define VLAB_SCENARIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "vlab/chow.hpp"
#include "vlab/geometry.hpp"

namespace vlab {

using Json = nlohmann::ordered_json;

struct ScenarioConfig {
    std::string id;            // "S1".."S11"
    std::uint64_t p = 32003;
    std::uint64_t seed = 0;
    int retry_budget = 16;
    int degree_cap = 12;
    int ext_cap = 24;
    int trials = 100;          // S10 only
};

struct CheckResult {
    std::string name;
    Json expected;
    Json actual;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::uint64_t seed = 0;
    std::string field;
    std::vector<CheckResult> checks;
    int resamples = 0;
    std::vector<std::pair<std::string, long long>> timings_ms;
    bool pass = false;

    // with_timings=false gives the byte-stable form used for determinism
    // comparisons (wall-clock values vary between runs).
    Json to_json(bool with_timings = true) const;
    std::string to_text() const;
};

std::vector<std::string> scenario_ids();
ScenarioReport run_scenario(const ScenarioConfig& cfg);

} // namespace vlab

#endif
