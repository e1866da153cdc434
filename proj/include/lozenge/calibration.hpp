#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lozenge/identities.hpp"

namespace lozenge {

// A candidate weight-scheme rule and how it fared against the reference sweep.
struct CandidateResult {
    SchemeRule rule;
    std::size_t checks = 0;
    std::size_t passed = 0;
    bool survived = false;
    std::optional<CheckReport> first_failure;

    nlohmann::json to_json() const;
};

// status is "unique", "inconclusive-none" or "inconclusive-multiple".
struct CalibrationReport {
    Variant variant = Variant::Custom;
    std::string reference;
    std::string status;
    std::vector<CandidateResult> candidates;

    bool conclusive() const { return status == "unique"; }
    const CandidateResult* survivor() const;
    nlohmann::json to_json() const;
};

// Calibratable variants: Qprime, SprimeBase and Sprime.
std::vector<SchemeRule> candidate_rules(Variant v);

// Tries every candidate against the variant's reference formula. `budget` caps the number of
// reference instances per candidate (0 means the whole sweep).
CalibrationReport calibrate_weight_scheme(Variant v, std::size_t budget = 0);

// Replaces the variant's rule with the unique survivor; Qprime also updates Pprime.
// Returns false and leaves the table untouched when the report is inconclusive.
bool apply_calibration(CalibrationTable& table, const CalibrationReport& report);

}  // namespace lozenge
