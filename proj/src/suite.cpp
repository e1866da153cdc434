#include "lozenge/suite.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

namespace lozenge {

std::size_t CriterionResult::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckReport& c) { return c.verdict == v; }));
}

nlohmann::json CriterionResult::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const CheckReport& c : checks) list.push_back(c.to_json());
    nlohmann::json j = {{"id", id},
                        {"title", title},
                        {"verdict", verdict_name(verdict)},
                        {"summary", summary},
                        {"pass", count(Verdict::Pass)},
                        {"fail", count(Verdict::Fail)},
                        {"skip", count(Verdict::Skip)},
                        {"checks", list}};
    if (!supplementary.empty()) {
        nlohmann::json sup = nlohmann::json::array();
        for (const CheckReport& c : supplementary) sup.push_back(c.to_json());
        j["supplementary"] = sup;
    }
    if (!extra.empty()) j["extra"] = extra;
    return j;
}

bool SuiteReport::any_fail() const {
    return std::any_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.verdict == Verdict::Fail; });
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    std::size_t passed = 0;
    for (const CriterionResult& c : criteria) {
        list.push_back(c.to_json());
        if (c.verdict == Verdict::Pass) ++passed;
    }
    return {{"criteria", list}, {"passed", passed}, {"total", criteria.size()}, {"any_fail", any_fail()}};
}

namespace {

struct SSpec {
    Dents a, b;
};

std::vector<SSpec> s_specs(int max_rows) {
    std::vector<SSpec> out;
    for (int rows = 0; rows <= max_rows; ++rows)
        for (int m = 0; m <= rows; ++m)
            for (const Dents& a : increasing_sequences(m, rows))
                for (const Dents& b : increasing_sequences(rows - m, rows)) out.push_back({a, b});
    return out;
}

std::vector<Dents> q_specs(int max_m) {
    std::vector<Dents> out;
    for (int m = 1; m <= max_m; ++m)
        for (const Dents& a : increasing_sequences(m, 2 * m)) out.push_back(a);
    return out;
}

CheckReport guarded(const std::function<CheckReport()>& f, const std::string& name, const nlohmann::json& params) {
    try {
        return f();
    } catch (const std::exception& e) {
        CheckReport r;
        r.name = name;
        r.params = params;
        r.verdict = Verdict::Fail;
        r.detail = std::string("error: ") + e.what();
        return r;
    }
}

CriterionResult criterion(int id, std::string title) {
    CriterionResult c;
    c.id = id;
    c.title = std::move(title);
    return c;
}

// PASS when nothing failed and at least one check passed.
void settle(CriterionResult& c) {
    std::size_t pass = c.count(Verdict::Pass), fail = c.count(Verdict::Fail), skip = c.count(Verdict::Skip);
    c.verdict = fail == 0 && pass > 0 ? Verdict::Pass : Verdict::Fail;
    c.summary = std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(skip) + " skipped";
}

nlohmann::json group_counts(const std::vector<CheckReport>& checks) {
    std::map<std::string, std::array<std::size_t, 3>> counts;
    for (const CheckReport& c : checks) ++counts[c.name][static_cast<std::size_t>(c.verdict)];
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, k] : counts) j[name] = {{"pass", k[0]}, {"fail", k[1]}, {"skip", k[2]}};
    return j;
}

CriterionResult criterion_ratio_S(const SuiteOptions& opt) {
    CriterionResult c = criterion(1, "S ratio formula, x,y <= 3, m+n <= 4");
    CheckOptions o{&opt.table};
    for (const SSpec& s : s_specs(4))
        for (int x = 0; x <= 3; ++x)
            for (int y = x + 1; y <= 3; ++y)
                c.checks.push_back(guarded([&] { return check_ratio(RatioKind::S, x, y, s.a, s.b, o); }, "ratio-s",
                                           {{"x", x}, {"y", y}, {"left", s.a}, {"right", s.b}}));
    settle(c);
    return c;
}

CriterionResult criterion_ratio_Q(const SuiteOptions& opt) {
    CriterionResult c = criterion(2, "Q ratio formula, x,y <= 3, m <= 3");
    CheckOptions o{&opt.table};
    for (const Dents& a : q_specs(3))
        for (int x = 0; x <= 3; ++x)
            for (int y = x + 1; y <= 3; ++y)
                c.checks.push_back(guarded([&] { return check_ratio(RatioKind::Q, x, y, a, {}, o); }, "ratio-q",
                                           {{"x", x}, {"y", y}, {"dents", a}}));
    settle(c);
    return c;
}

bool same_axis(const SchemeRule& a, const SchemeRule& b) {
    return a.weighted == b.weighted && a.anchor == b.anchor && a.offset == b.offset && a.sign == b.sign &&
           a.on_axis_rule == b.on_axis_rule;
}

CriterionResult criterion_Qprime(const SuiteOptions& opt) {
    CriterionResult c = criterion(3, "Q' ratio formula and P' product formula under the calibrated axis");
    CalibrationReport cal = calibrate_weight_scheme(Variant::Qprime);
    c.extra["calibration"] = cal.to_json();
    CheckReport unique;
    unique.name = "qprime-calibration";
    unique.params = {{"candidates", cal.candidates.size()}};
    unique.lhs = cal.status;
    unique.rhs = "unique";
    unique.verdict = cal.conclusive() ? Verdict::Pass : Verdict::Fail;
    if (const CandidateResult* s = cal.survivor()) {
        bool matches = same_axis(s->rule, opt.table.rule(Variant::Qprime));
        unique.detail = std::string("survivor ") + (matches ? "matches" : "differs from") + " the loaded table";
        if (!matches) unique.verdict = Verdict::Fail;
    }
    c.checks.push_back(unique);
    CheckOptions o{&opt.table};
    for (const Dents& a : q_specs(3))
        for (int x = 0; x <= 3; ++x)
            for (int y = x + 1; y <= 3; ++y)
                c.checks.push_back(guarded([&] { return check_ratio(RatioKind::Qprime, x, y, a, {}, o); }, "ratio-qprime",
                                           {{"x", x}, {"y", y}, {"dents", a}}));
    for (int x = 0; x <= 3; ++x)
        for (int n = 0; n <= 3; ++n) {
            c.checks.push_back(guarded([&] { return check_lemma_formula(LemmaKind::Pprime, x, n, {}, o); }, "lemma-pprime",
                                       {{"x", x}, {"n", n}}));
            c.supplementary.push_back(guarded([&] { return check_lemma_formula(LemmaKind::PprimeCorrected, x, n, {}, o); },
                                              "lemma-pprime-corrected", {{"x", x}, {"n", n}}));
        }
    settle(c);
    c.extra["groups"] = group_counts(c.checks);
    return c;
}

CriterionResult criterion_lemmas(const SuiteOptions& opt) {
    CriterionResult c = criterion(4, "S-base and P product formulas against brute force, a,b,x,n <= 3");
    CheckOptions o{&opt.table};
    for (int b = 0; b <= 3; ++b)
        for (int a = 0; a <= 3; ++a)
            for (const Dents& s : increasing_sequences(b, a + b))
                c.checks.push_back(guarded([&] { return check_lemma_formula(LemmaKind::Sbase, a, b, s, o); }, "lemma-sbase",
                                           {{"a", a}, {"b", b}, {"dents", s}}));
    for (int x = 0; x <= 3; ++x)
        for (int n = 0; n <= 3; ++n) {
            c.checks.push_back(guarded([&] { return check_lemma_formula(LemmaKind::P, x, n, {}, o); }, "lemma-p",
                                       {{"x", x}, {"n", n}}));
            c.supplementary.push_back(guarded([&] { return check_lemma_formula(LemmaKind::PCorrected, x, n, {}, o); },
                                              "lemma-p-corrected", {{"x", x}, {"n", n}}));
        }
    settle(c);
    c.extra["groups"] = group_counts(c.checks);
    return c;
}

CriterionResult criterion_macmahon(const SuiteOptions&) {
    CriterionResult c = criterion(5, "q-MacMahon box formula against the plane-partition oracle");
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int cc = 0; cc <= 3; ++cc)
                c.checks.push_back(guarded([&] { return check_macmahon(a, b, cc); }, "macmahon", {{"a", a}, {"b", b}, {"c", cc}}));
    CheckReport unit;
    unit.name = "macmahon-unit-box";
    unit.params = {{"a", 1}, {"b", 1}, {"c", 1}};
    auto e = pp_q(1, 1, 1).expand();
    unit.lhs = e ? e->to_text() : pp_q(1, 1, 1).to_text();
    unit.rhs = "1 + q";
    unit.verdict = unit.lhs == unit.rhs ? Verdict::Pass : Verdict::Fail;
    c.checks.push_back(unit);
    settle(c);
    return c;
}

CriterionResult criterion_tileability(const SuiteOptions&) {
    CriterionResult c = criterion(6, "Tileability predicates against enumeration, with hook tilings");
    for (const SSpec& s : s_specs(4))
        for (int x = 0; x <= 2; ++x)
            c.checks.push_back(guarded([&] { return check_tileability_S(x, s.a, s.b); }, "tileability-s",
                                       {{"x", x}, {"left", s.a}, {"right", s.b}}));
    for (const Dents& a : q_specs(3))
        for (int x = 0; x <= 2; ++x)
            c.checks.push_back(guarded([&] { return check_tileability_Q(x, a); }, "tileability-q", {{"x", x}, {"dents", a}}));
    settle(c);
    c.extra["groups"] = group_counts(c.checks);
    return c;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
}

std::optional<Region> random_kuo_region(KuoVariant variant, const CalibrationTable& table, std::mt19937_64& rng) {
    const int fill = static_cast<int>(variant);
    std::uniform_int_distribution<int> coin(0, 1), xs(0, 2);
    const int x = xs(rng);
    Region g;
    std::vector<std::pair<Side, int>> dents;
    if (coin(rng) == 0) {
        static const std::vector<SSpec> specs = [] {
            std::vector<SSpec> v;
            for (const SSpec& s : s_specs(4))
                if (!s.a.empty() || !s.b.empty())
                    if (tileable_S(s.a, s.b)) v.push_back(s);
            return v;
        }();
        const SSpec& s = pick(specs, rng);
        g = build_S(x, s.a, s.b, table);
        for (int r : s.a) dents.push_back({Side::Left, r});
        for (int r : s.b) dents.push_back({Side::Right, r});
    } else {
        static const std::vector<Dents> specs = [] {
            std::vector<Dents> v;
            for (const Dents& a : q_specs(3))
                if (tileable_Q(a)) v.push_back(a);
            return v;
        }();
        const Dents& a = pick(specs, rng);
        g = build_Q(x, a, table);
        for (int r : a) dents.push_back({Side::Right, r});
    }
    if (static_cast<int>(dents.size()) < fill) return std::nullopt;
    std::shuffle(dents.begin(), dents.end(), rng);
    for (int i = 0; i < fill; ++i) g = fill_dent(g, dents[static_cast<std::size_t>(i)].first, dents[static_cast<std::size_t>(i)].second);
    return g;
}

CriterionResult criterion_kuo(const SuiteOptions& opt) {
    CriterionResult c = criterion(7, "Kuo condensation on random selections and on the proof selections");
    std::mt19937_64 rng(opt.seed);
    std::size_t found = 0, attempts = 0;
    while (found < 100 && attempts < 20000) {
        ++attempts;
        KuoVariant variant = static_cast<KuoVariant>(found % 3);
        auto g = random_kuo_region(variant, opt.table, rng);
        if (!g) continue;
        auto sel = random_kuo_selection(*g, variant, rng);
        if (!sel) continue;
        ++found;
        c.checks.push_back(guarded([&] { return check_kuo(*g, *sel); }, "kuo-random", {{"index", found}}));
    }
    CheckOptions o{&opt.table};
    std::size_t proof_s = 0, proof_q = 0;
    for (const SSpec& s : s_specs(4)) {
        if (!tileable_S(s.a, s.b)) continue;
        for (int x = 0; x <= 2; ++x) {
            auto inst = proof_kuo_instance_S(x, s.a, s.b, o);
            if (!inst) continue;
            ++proof_s;
            CheckReport r = guarded([&] { return check_kuo(inst->graph, inst->selection); }, "kuo-proof-s",
                                    {{"x", x}, {"left", s.a}, {"right", s.b}});
            r.name = "kuo-proof-s";
            c.checks.push_back(r);
        }
    }
    for (const Dents& a : q_specs(4)) {
        if (!tileable_Q(a)) continue;
        for (int x = 0; x <= 2; ++x) {
            auto inst = proof_kuo_instance_Q(x, a, o);
            if (!inst) continue;
            ++proof_q;
            CheckReport r = guarded([&] { return check_kuo(inst->graph, inst->selection); }, "kuo-proof-q", {{"x", x}, {"dents", a}});
            r.name = "kuo-proof-q";
            c.checks.push_back(r);
        }
    }
    settle(c);
    c.extra = {{"random_selections", found}, {"random_attempts", attempts}, {"seed", opt.seed},
               {"proof_s", proof_s}, {"proof_q", proof_q}, {"groups", group_counts(c.checks)}};
    if (found < 100 || proof_s == 0 || proof_q == 0) c.verdict = Verdict::Fail;
    return c;
}

CriterionResult criterion_recurrences(const SuiteOptions& opt) {
    CriterionResult c = criterion(8, "Condensation recurrences and prefactor identities");
    CheckOptions o{&opt.table};
    for (const SSpec& s : s_specs(4)) {
        for (int x = 0; x <= 2; ++x) {
            CheckReport r = guarded([&] { return check_recurrence_S(x, s.a, s.b, o); }, "recurrence-s",
                                    {{"x", x}, {"left", s.a}, {"right", s.b}});
            if (r.verdict != Verdict::Skip) c.checks.push_back(r);
            for (int y = x + 1; y <= 3; ++y) {
                CheckReport p = guarded([&] { return check_prefactor_S(x, y, s.a, s.b); }, "prefactor-s",
                                        {{"x", x}, {"y", y}, {"left", s.a}, {"right", s.b}});
                if (p.verdict != Verdict::Skip) c.checks.push_back(p);
            }
        }
    }
    for (const Dents& a : q_specs(4)) {
        for (int x = 0; x <= 2; ++x) {
            CheckReport r = guarded([&] { return check_recurrence_Q(x, a, o); }, "recurrence-q", {{"x", x}, {"dents", a}});
            if (r.verdict != Verdict::Skip) c.checks.push_back(r);
            for (int y = x + 1; y <= 3; ++y) {
                CheckReport p = guarded([&] { return check_prefactor_Q(x, y, a); }, "prefactor-q", {{"x", x}, {"y", y}, {"dents", a}});
                if (p.verdict != Verdict::Skip) c.checks.push_back(p);
            }
        }
    }
    for (int x = 1; x <= 3; ++x)
        for (int n = 2; n <= 4; ++n)
            c.checks.push_back(guarded([&] { return check_recurrence_P(x, n, o); }, "recurrence-p", {{"x", x}, {"n", n}}));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const Dents& s : increasing_sequences(b, a + b)) {
                CheckReport r = guarded([&] { return check_recurrence_S_base(a, b, s, o); }, "recurrence-sbase",
                                        {{"a", a}, {"b", b}, {"dents", s}});
                if (r.verdict != Verdict::Skip) c.checks.push_back(r);
            }
    settle(c);
    nlohmann::json groups = group_counts(c.checks);
    c.extra["groups"] = groups;
    for (const char* g : {"recurrence-s", "prefactor-s", "recurrence-q", "prefactor-q", "recurrence-p", "recurrence-sbase"})
        if (!groups.contains(g) || groups[g]["pass"].get<std::size_t>() == 0) c.verdict = Verdict::Fail;
    return c;
}

CriterionResult criterion_reciprocity(const SuiteOptions&) {
    CriterionResult c = criterion(9, "Reciprocity between half-integer Q ratios and Q' ratios, no enumeration");
    for (const Dents& a : q_specs(3))
        for (int x = 1; x <= 4; ++x)
            for (int y = 1; y <= 4; ++y)
                if (x != y)
                    c.checks.push_back(guarded([&] { return check_reciprocity(x, y, a); }, "reciprocity", {{"x", x}, {"y", y}, {"dents", a}}));
    settle(c);
    return c;
}

CriterionResult criterion_symmetric(const SuiteOptions& opt) {
    CriterionResult c = criterion(10, "Symmetric S tilings against squared Q, and the symmetric ratio formula");
    CheckOptions o{&opt.table};
    for (const Dents& a : q_specs(3)) {
        for (int x = 0; x <= 2; ++x) {
            CheckReport r = guarded([&] { return check_symmetric_split(x, a, o); }, "symmetric-split", {{"x", x}, {"dents", a}});
            if (r.verdict != Verdict::Skip) c.checks.push_back(r);
            for (int y = x + 1; y <= 2; ++y) {
                CheckReport p = guarded([&] { return check_ratio(RatioKind::Sym, x, y, a, {}, o); }, "ratio-sym",
                                        {{"x", x}, {"y", y}, {"dents", a}});
                if (p.verdict != Verdict::Skip) c.checks.push_back(p);
            }
        }
    }
    settle(c);
    c.extra["groups"] = group_counts(c.checks);
    return c;
}

CriterionResult criterion_Sprime(const SuiteOptions& opt) {
    CriterionResult c = criterion(11, "S' weight-scheme calibration against the S' ratio formula");
    CalibrationReport cal = calibrate_weight_scheme(Variant::Sprime);
    c.extra["calibration"] = cal.to_json();
    if (cal.conclusive()) {
        CalibrationTable table = opt.table;
        apply_calibration(table, cal);
        CheckOptions o{&table};
        for (int rows = 1; rows <= 3; ++rows)
            for (const SSpec& s : s_specs(rows)) {
                if (static_cast<int>(s.a.size() + s.b.size()) != rows) continue;
                for (int x = 0; x <= 2; ++x)
                    for (int y = x + 1; y <= 2; ++y)
                        c.checks.push_back(guarded([&] { return check_ratio(RatioKind::Sprime, x, y, s.a, s.b, o); }, "ratio-sprime",
                                                   {{"x", x}, {"y", y}, {"left", s.a}, {"right", s.b}}));
            }
        settle(c);
        c.summary = "calibration selected a scheme; " + c.summary;
        return c;
    }
    bool named = !cal.candidates.empty();
    for (const CandidateResult& r : cal.candidates) named = named && (r.survived || r.first_failure.has_value());
    c.verdict = named ? Verdict::Pass : Verdict::Fail;
    c.summary = "calibration " + cal.status + "; " + std::to_string(cal.candidates.size()) + " candidates rejected with their first failure";
    return c;
}

CriterionResult criterion_engines(const SuiteOptions& opt) {
    CriterionResult c = criterion(12, "Path-determinant engine against the matching search on sweeps 1 and 2");
    auto run = [&] {
        std::vector<CheckReport> out;
        for (const SSpec& s : s_specs(4)) {
            if (!tileable_S(s.a, s.b)) continue;
            for (int x = 0; x <= 3; ++x)
                out.push_back(guarded([&] { return check_engines(build_S(x, s.a, s.b, opt.table)); }, "engines",
                                      {{"family", "S"}, {"x", x}, {"left", s.a}, {"right", s.b}}));
        }
        for (const Dents& a : q_specs(3)) {
            if (!tileable_Q(a)) continue;
            for (int x = 0; x <= 3; ++x)
                out.push_back(guarded([&] { return check_engines(build_Q(x, a, opt.table)); }, "engines",
                                      {{"family", "Q"}, {"x", x}, {"dents", a}}));
        }
        return out;
    };
    c.checks = run();
    std::vector<CheckReport> again = run();
    auto dump = [](const std::vector<CheckReport>& v) {
        nlohmann::json j = nlohmann::json::array();
        for (const CheckReport& r : v) j.push_back(r.to_json());
        return j.dump();
    };
    CheckReport det;
    det.name = "determinism";
    det.params = {{"checks", c.checks.size()}};
    det.lhs = std::to_string(dump(c.checks).size()) + " bytes";
    det.rhs = std::to_string(dump(again).size()) + " bytes";
    det.verdict = dump(c.checks) == dump(again) ? Verdict::Pass : Verdict::Fail;
    det.detail = "repeated engine sweep serializes identically";
    c.checks.push_back(det);
    settle(c);
    return c;
}

CheckReport check_forced_reduction(const Region& r) {
    CheckReport rep;
    rep.name = "forced-reduction";
    rep.params = {{"family", r.family}, {"region_params", r.params}};
    ForcedReduction red = reduce_forced(r);
    LaurentPoly whole = cached_tgf(r);
    LaurentPoly reduced = red.dead ? LaurentPoly(0) : red.factor * cached_tgf(red.region);
    rep.lhs = whole.to_text();
    rep.rhs = reduced.to_text();
    rep.detail = std::to_string(red.forced.size()) + " forced lozenges";
    rep.verdict = whole == reduced ? Verdict::Pass : Verdict::Fail;
    return rep;
}

CriterionResult criterion_extras(const SuiteOptions& opt) {
    CriterionResult c = criterion(kExtrasId, "Region splitting and forced-lozenge reduction");
    for (const SSpec& s : s_specs(3)) {
        for (int x = 0; x <= 2; ++x) {
            if (x == 0 && !s.a.empty() && !s.b.empty() && s.a.front() == 1 && s.b.front() == 1) continue;
            Region r = build_S(x, s.a, s.b, opt.table);
            c.checks.push_back(guarded([&] { return check_forced_reduction(r); }, "forced-reduction", {{"x", x}, {"left", s.a}, {"right", s.b}}));
            if (!tileable_S(s.a, s.b)) continue;
            const int rows = static_cast<int>(s.a.size() + s.b.size());
            for (int level = 1; level < rows; ++level) {
                CheckReport sp = guarded([&] { return check_region_splitting(r, level); }, "region-splitting",
                                         {{"x", x}, {"left", s.a}, {"right", s.b}, {"level", level}});
                if (sp.verdict != Verdict::Skip) c.checks.push_back(sp);
            }
        }
    }
    for (const Dents& a : q_specs(3))
        for (int x = 0; x <= 2; ++x) {
            Region r = build_Q(x, a, opt.table);
            c.checks.push_back(guarded([&] { return check_forced_reduction(r); }, "forced-reduction", {{"x", x}, {"dents", a}}));
        }
    settle(c);
    c.extra["groups"] = group_counts(c.checks);
    return c;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
    switch (id) {
        case 1: return criterion_ratio_S(opt);
        case 2: return criterion_ratio_Q(opt);
        case 3: return criterion_Qprime(opt);
        case 4: return criterion_lemmas(opt);
        case 5: return criterion_macmahon(opt);
        case 6: return criterion_tileability(opt);
        case 7: return criterion_kuo(opt);
        case 8: return criterion_recurrences(opt);
        case 9: return criterion_reciprocity(opt);
        case 10: return criterion_symmetric(opt);
        case 11: return criterion_Sprime(opt);
        case 12: return criterion_engines(opt);
        case kExtrasId: return criterion_extras(opt);
    }
    throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

SuiteReport run_suite(const SuiteOptions& opt) {
    std::vector<int> ids = opt.criteria;
    if (ids.empty())
        for (int i = 1; i <= kExtrasId; ++i) ids.push_back(i);
    SuiteReport report;
    for (int id : ids) {
        report.criteria.push_back(run_criterion(id, opt));
        if (opt.on_done) opt.on_done(report.criteria.back());
    }
    return report;
}

}  // namespace lozenge
