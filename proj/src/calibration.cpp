#include "lozenge/calibration.hpp"

#include <functional>
#include <stdexcept>

namespace lozenge {

nlohmann::json CandidateResult::to_json() const {
    nlohmann::json j = {{"rule", rule.to_json()}, {"checks", checks}, {"passed", passed}, {"survived", survived}};
    if (first_failure) j["first_failure"] = first_failure->to_json();
    return j;
}

const CandidateResult* CalibrationReport::survivor() const {
    if (!conclusive()) return nullptr;
    for (const CandidateResult& c : candidates)
        if (c.survived) return &c;
    return nullptr;
}

nlohmann::json CalibrationReport::to_json() const {
    nlohmann::json j = {{"variant", variant_name(variant)}, {"reference", reference}, {"status", status}};
    nlohmann::json list = nlohmann::json::array();
    nlohmann::json rejected = nlohmann::json::array();
    for (const CandidateResult& c : candidates) {
        list.push_back(c.to_json());
        if (!c.survived) rejected.push_back(c.rule.to_json());
    }
    j["candidates"] = list;
    j["rejected"] = rejected;
    if (const CandidateResult* s = survivor()) j["selected"] = s->rule.to_json();
    return j;
}

namespace {

SchemeRule make_rule(LozengeKind k, Anchor a, int offset, int sign, AxisRule ar) {
    SchemeRule r;
    r.weighted = k;
    r.anchor = a;
    r.offset = offset;
    r.sign = sign;
    r.on_axis_rule = ar;
    r.status = "candidate";
    return r;
}

using Instance = std::function<CheckReport(const CheckOptions&)>;

std::vector<Instance> reference_instances(Variant v) {
    std::vector<Instance> out;
    switch (v) {
        case Variant::Qprime:
            for (int m = 1; m <= 3; ++m)
                for (const Dents& a : increasing_sequences(m, 2 * m)) {
                    if (!tileable_Q(a)) continue;
                    for (int x = 0; x <= 3; ++x)
                        for (int y = x + 1; y <= 3; ++y)
                            out.push_back([=](const CheckOptions& o) { return check_ratio(RatioKind::Qprime, x, y, a, {}, o); });
                }
            break;
        case Variant::SprimeBase:
            for (int b = 1; b <= 3; ++b)
                for (int a = 0; a <= 2; ++a)
                    for (const Dents& s : increasing_sequences(b, a + b))
                        out.push_back([=](const CheckOptions& o) { return check_lemma_formula(LemmaKind::SprimeBase, a, b, s, o); });
            break;
        case Variant::Sprime:
            for (int rows = 1; rows <= 3; ++rows)
                for (int m = 0; m <= rows; ++m)
                    for (const Dents& a : increasing_sequences(m, rows))
                        for (const Dents& b : increasing_sequences(rows - m, rows)) {
                            if (!tileable_S(a, b)) continue;
                            for (int x = 0; x <= 2; ++x)
                                for (int y = x + 1; y <= 2; ++y)
                                    out.push_back([=](const CheckOptions& o) { return check_ratio(RatioKind::Sprime, x, y, a, b, o); });
                        }
            break;
        default:
            throw std::invalid_argument(std::string("no calibration reference for ") + variant_name(v));
    }
    return out;
}

const char* reference_name(Variant v) {
    switch (v) {
        case Variant::Qprime: return "ratio-qprime, m <= 3, 0 <= x < y <= 3";
        case Variant::SprimeBase: return "lemma-sprimebase, a <= 2, b <= 3";
        case Variant::Sprime: return "ratio-sprime, m + n <= 3, 0 <= x < y <= 2";
        default: return "";
    }
}

}  // namespace

std::vector<SchemeRule> candidate_rules(Variant v) {
    using K = LozengeKind;
    std::vector<SchemeRule> out;
    switch (v) {
        case Variant::Qprime:
            for (int off : {-1, 1}) out.push_back(make_rule(K::Vertical, Anchor::BaseRight, off, 1, AxisRule::Half));
            for (int off : {-1, 0, 1}) out.push_back(make_rule(K::Vertical, Anchor::Zigzag, off, 1, AxisRule::Half));
            break;
        case Variant::SprimeBase:
        case Variant::Sprime:
            for (K k : {K::Right, K::Left})
                for (int sign : {1, -1})
                    for (int off = -2; off <= 2; ++off) out.push_back(make_rule(k, Anchor::Rows, off, sign, AxisRule::Normal));
            for (Anchor a : {Anchor::BaseLeft, Anchor::BaseMid, Anchor::BaseRight})
                for (int off = -1; off <= 1; ++off) out.push_back(make_rule(K::Vertical, a, off, 1, AxisRule::Normal));
            break;
        default:
            throw std::invalid_argument(std::string("variant is not calibratable: ") + variant_name(v));
    }
    return out;
}

CalibrationReport calibrate_weight_scheme(Variant v, std::size_t budget) {
    CalibrationReport report;
    report.variant = v;
    report.reference = reference_name(v);
    std::vector<Instance> instances = reference_instances(v);
    if (budget > 0 && instances.size() > budget) instances.resize(budget);
    std::size_t survivors = 0;
    for (const SchemeRule& rule : candidate_rules(v)) {
        CalibrationTable table = default_calibration();
        table.rules[v] = rule;
        CheckOptions opt;
        opt.table = &table;
        CandidateResult result;
        result.rule = rule;
        for (const Instance& inst : instances) {
            CheckReport r;
            try {
                r = inst(opt);
            } catch (const std::exception& e) {
                r.name = "error";
                r.verdict = Verdict::Fail;
                r.detail = e.what();
            }
            if (r.verdict == Verdict::Skip) continue;
            ++result.checks;
            if (r.verdict == Verdict::Fail) {
                result.first_failure = r;
                break;
            }
            ++result.passed;
        }
        result.survived = !result.first_failure && result.checks > 0;
        if (result.survived) ++survivors;
        report.candidates.push_back(std::move(result));
    }
    report.status = survivors == 1 ? "unique" : survivors == 0 ? "inconclusive-none" : "inconclusive-multiple";
    return report;
}

bool apply_calibration(CalibrationTable& table, const CalibrationReport& report) {
    const CandidateResult* s = report.survivor();
    if (!s) return false;
    SchemeRule rule = s->rule;
    rule.status = "calibrated";
    table.rules[report.variant] = rule;
    if (report.variant == Variant::Qprime) table.rules[Variant::Pprime] = rule;
    return true;
}

}  // namespace lozenge
