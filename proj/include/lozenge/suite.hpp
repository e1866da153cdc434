#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lozenge/calibration.hpp"

namespace lozenge {

struct CriterionResult {
    int id = 0;
    std::string title;
    Verdict verdict = Verdict::Fail;
    std::string summary;
    std::vector<CheckReport> checks;         // counted toward the verdict
    std::vector<CheckReport> supplementary;  // reported only
    nlohmann::json extra = nlohmann::json::object();

    std::size_t count(Verdict v) const;
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    CalibrationTable table = default_calibration();
    std::vector<int> criteria;  // empty runs all twelve plus the extras
    std::uint64_t seed = 20240601;
    std::function<void(const CriterionResult&)> on_done;
};

struct SuiteReport {
    std::vector<CriterionResult> criteria;

    bool any_fail() const;
    nlohmann::json to_json() const;
};

constexpr int kCriterionCount = 12;
// Region splitting and forced-lozenge reduction checks, reported after the numbered criteria.
constexpr int kExtrasId = 13;

CriterionResult run_criterion(int id, const SuiteOptions& opt);
SuiteReport run_suite(const SuiteOptions& opt);

}  // namespace lozenge
