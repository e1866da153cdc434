#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lozenge/suite.hpp"

using namespace lozenge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RegionFlags {
    std::string family;
    int x = 0;
    int y = 1;
    int n = 0;
    std::vector<int> left, right, dents;
};

void add_region_flags(CLI::App* cmd, RegionFlags& f, bool with_y) {
    cmd->add_option("--family", f.family, "Region family")
        ->check(CLI::IsMember({"S", "Sprime", "Q", "Qprime", "Sbase", "SprimeBase", "P", "Pprime"}));
    cmd->add_option("--x", f.x, "Width parameter (a for base regions)");
    if (with_y) cmd->add_option("--y", f.y, "Second width parameter");
    cmd->add_option("--n", f.n, "Half-height of a halved hexagon");
    cmd->add_option("--left", f.left, "Left dent rows")->delimiter(',');
    cmd->add_option("--right", f.right, "Right dent rows")->delimiter(',');
    cmd->add_option("--dents", f.dents, "Dent positions (quartered and base regions)")->delimiter(',');
}

Region build_region(const RegionFlags& f, const CalibrationTable& t, int x) {
    if (f.family.empty()) throw std::invalid_argument("--family is required");
    switch (parse_variant(f.family)) {
        case Variant::S: return build_S(x, f.left, f.right, t);
        case Variant::Sprime: return build_Sprime(x, f.left, f.right, t);
        case Variant::Q: return build_Q(x, f.dents, t);
        case Variant::Qprime: return build_Qprime(x, f.dents, t);
        case Variant::Sbase: return build_S_base(x, static_cast<int>(f.dents.size()), f.dents, t);
        case Variant::SprimeBase: return build_Sprime_base(x, static_cast<int>(f.dents.size()), f.dents, t);
        case Variant::P: return build_P(x, f.n, t);
        case Variant::Pprime: return build_Pprime(x, f.n, t);
        default: break;
    }
    throw std::invalid_argument("unsupported family: " + f.family);
}

CalibrationTable load_table(const std::string& path) {
    if (!path.empty()) return CalibrationTable::load(path);
    const std::string shipped = std::string(LOZENGE_SOURCE_DIR) + "/config/calibration.json";
    if (std::filesystem::exists(shipped)) return CalibrationTable::load(shipped);
    return default_calibration();
}

Engine parse_engine(const std::string& e) { return e == "fast" ? Engine::Fast : Engine::Brute; }

Cell parse_cell(const std::string& text) {
    std::istringstream is(text);
    int row = 0, h = 0;
    char comma = 0;
    if (!(is >> row >> comma >> h) || comma != ',') throw std::invalid_argument("cells are given as row,h: " + text);
    return (h - row) % 2 == 0 ? up_cell(row, h) : down_cell(row, h);
}

KuoVariant parse_kuo_variant(const std::string& v) {
    if (v == "balanced") return KuoVariant::Balanced;
    if (v == "plus1") return KuoVariant::Plus1;
    if (v == "plus2") return KuoVariant::Plus2;
    throw std::invalid_argument("unknown Kuo variant: " + v);
}

int emit(const CheckReport& r, bool json) {
    std::cout << (json ? r.to_json().dump(2) : r.to_text()) << "\n";
    return r.verdict == Verdict::Fail ? kExitFail : 0;
}

std::string rational_output(const RationalFunction& f) {
    auto e = f.expand();
    return e ? e->to_text() : f.to_text();
}

nlohmann::json rational_json(const RationalFunction& f) {
    auto e = f.expand();
    nlohmann::json j = f.to_json();
    if (e) j["expanded"] = e->to_json();
    return j;
}

struct CheckFlags {
    std::string name;
    std::vector<int> args;
    RegionFlags region;
    int level = 1;
    std::string variant = "balanced";
    std::string u, v, w, s;
    std::vector<int> fill_left, fill_right;
    std::uint64_t seed = 1;
};

CheckReport run_check(const CheckFlags& c, const CheckOptions& opt, const CalibrationTable& table) {
    const RegionFlags& f = c.region;
    const std::string& n = c.name;
    if (n == "ratio-s") return check_ratio(RatioKind::S, f.x, f.y, f.left, f.right, opt);
    if (n == "ratio-sprime") return check_ratio(RatioKind::Sprime, f.x, f.y, f.left, f.right, opt);
    if (n == "ratio-q") return check_ratio(RatioKind::Q, f.x, f.y, f.dents, {}, opt);
    if (n == "ratio-qprime") return check_ratio(RatioKind::Qprime, f.x, f.y, f.dents, {}, opt);
    if (n == "ratio-sym") return check_ratio(RatioKind::Sym, f.x, f.y, f.dents, {}, opt);
    if (n == "symmetric-split") return check_symmetric_split(f.x, f.dents, opt);
    const int b = static_cast<int>(f.dents.size());
    if (n == "lemma-sbase") return check_lemma_formula(LemmaKind::Sbase, f.x, b, f.dents, opt);
    if (n == "lemma-sprimebase") return check_lemma_formula(LemmaKind::SprimeBase, f.x, b, f.dents, opt);
    if (n == "lemma-p") return check_lemma_formula(LemmaKind::P, f.x, f.n, {}, opt);
    if (n == "lemma-pprime") return check_lemma_formula(LemmaKind::Pprime, f.x, f.n, {}, opt);
    if (n == "lemma-p-corrected") return check_lemma_formula(LemmaKind::PCorrected, f.x, f.n, {}, opt);
    if (n == "lemma-pprime-corrected") return check_lemma_formula(LemmaKind::PprimeCorrected, f.x, f.n, {}, opt);
    if (n == "tileability") {
        if (f.family == "S") return check_tileability_S(f.x, f.left, f.right);
        if (f.family == "Q") return check_tileability_Q(f.x, f.dents);
        throw std::invalid_argument("tileability needs --family S or Q");
    }
    if (n == "kuo") {
        Region g = build_region(f, table, f.x);
        for (int row : c.fill_left) g = fill_dent(g, Side::Left, row);
        for (int row : c.fill_right) g = fill_dent(g, Side::Right, row);
        KuoVariant variant = parse_kuo_variant(c.variant);
        if (c.u.empty() && c.v.empty() && c.w.empty() && c.s.empty()) {
            std::mt19937_64 rng(c.seed);
            auto sel = random_kuo_selection(g, variant, rng);
            if (!sel) throw std::invalid_argument("no valid Kuo selection on this region for the variant");
            return check_kuo(g, *sel);
        }
        if (c.u.empty() || c.v.empty() || c.w.empty() || c.s.empty())
            throw std::invalid_argument("give all of --u --v --w --s or none");
        KuoSelection sel{parse_cell(c.u), parse_cell(c.v), parse_cell(c.w), parse_cell(c.s), variant};
        return check_kuo(g, sel);
    }
    if (n == "kuo-proof") {
        std::optional<KuoInstance> inst;
        if (f.family == "S") inst = proof_kuo_instance_S(f.x, f.left, f.right, opt);
        else if (f.family == "Q") inst = proof_kuo_instance_Q(f.x, f.dents, opt);
        else throw std::invalid_argument("kuo-proof needs --family S or Q");
        if (!inst) throw std::invalid_argument("dents do not meet the recurrence preconditions");
        return check_kuo(inst->graph, inst->selection);
    }
    if (n == "recurrence-s") return check_recurrence_S(f.x, f.left, f.right, opt);
    if (n == "recurrence-q") return check_recurrence_Q(f.x, f.dents, opt);
    if (n == "recurrence-p") return check_recurrence_P(f.x, f.n, opt);
    if (n == "recurrence-sbase") return check_recurrence_S_base(f.x, b, f.dents, opt);
    if (n == "prefactor-s") return check_prefactor_S(f.x, f.y, f.left, f.right);
    if (n == "prefactor-q") return check_prefactor_Q(f.x, f.y, f.dents);
    if (n == "splitting") return check_region_splitting(build_region(f, table, f.x), c.level);
    if (n == "reciprocity") return check_reciprocity(f.x, f.y, f.dents);
    if (n == "macmahon") {
        if (c.args.size() != 3) throw std::invalid_argument("macmahon takes three box sides");
        return check_macmahon(c.args[0], c.args[1], c.args[2]);
    }
    if (n == "engines") return check_engines(build_region(f, table, f.x));
    throw std::invalid_argument("unknown check: " + n);
}

int run_formula(const std::string& name, const std::vector<int>& args, const RegionFlags& f, bool json) {
    RationalFunction value;
    const int b = static_cast<int>(f.dents.size());
    if (name == "pp-q") {
        if (args.size() != 3) throw std::invalid_argument("pp-q takes three box sides");
        value = pp_q(args[0], args[1], args[2]);
    } else if (name == "q-int" || name == "q-fact") {
        if (args.size() != 1) throw std::invalid_argument(name + " takes one argument");
        value = name == "q-int" ? q_int(args[0]) : q_fact(args[0]);
    } else if (name == "ratio-s") {
        value = ratio_S(f.x, f.y, f.left, f.right);
    } else if (name == "ratio-sprime") {
        value = ratio_Sprime(f.x, f.y, f.left, f.right);
    } else if (name == "ratio-q") {
        value = ratio_Q(f.x, f.y, f.dents);
    } else if (name == "ratio-qprime") {
        value = ratio_Qprime(f.x, f.y, f.dents);
    } else if (name == "ratio-sym") {
        value = ratio_sym(f.x, f.y, f.dents);
    } else if (name == "sbase") {
        value = tgf_S_base_rational(f.x, b, f.dents);
    } else if (name == "sprimebase") {
        value = tgf_Sprime_base_rational(f.x, b, f.dents);
    } else if (name == "p") {
        value = tgf_P(f.x, f.n);
    } else if (name == "pprime") {
        value = tgf_Pprime(f.x, f.n);
    } else if (name == "p-corrected") {
        value = tgf_P_corrected(f.x, f.n);
    } else if (name == "pprime-corrected") {
        value = tgf_Pprime_corrected(f.x, f.n);
    } else {
        throw std::invalid_argument("unknown formula: " + name);
    }
    if (json) std::cout << nlohmann::json{{"formula", name}, {"value", rational_json(value)}}.dump(2) << "\n";
    else std::cout << rational_output(value) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tiling generating functions of dented semi-hexagons and quartered hexagons"};
    app.require_subcommand(1);
    std::string calibration_path;
    bool json = false;
    std::string engine = "brute";
    app.add_option("--calibration", calibration_path, "Calibration table (JSON)");

    RegionFlags region_flags;
    bool show_tiling = false;
    auto* region_cmd = app.add_subcommand("region", "Build a region and render it");
    add_region_flags(region_cmd, region_flags, false);
    region_cmd->add_flag("--tiling", show_tiling, "Also render the hook tiling");
    region_cmd->add_flag("--json", json, "JSON output");
    region_cmd->add_option("--calibration", calibration_path, "Calibration table (JSON)");

    RegionFlags tgf_flags;
    bool symmetric = false;
    auto* tgf_cmd = app.add_subcommand("tgf", "Tiling generating function of a region");
    add_region_flags(tgf_cmd, tgf_flags, false);
    tgf_cmd->add_option("--engine", engine, "brute or fast")->check(CLI::IsMember({"brute", "fast"}));
    tgf_cmd->add_flag("--symmetric", symmetric, "Sum over reflection-symmetric tilings");
    tgf_cmd->add_flag("--json", json, "JSON output");
    tgf_cmd->add_option("--calibration", calibration_path, "Calibration table (JSON)");

    std::string formula_name;
    std::vector<int> formula_args;
    RegionFlags formula_flags;
    auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form expression");
    formula_cmd->add_option("name", formula_name, "pp-q, q-int, q-fact, ratio-s, ratio-sprime, ratio-q, ratio-qprime, ratio-sym, "
                                                  "sbase, sprimebase, p, pprime, p-corrected, pprime-corrected")
        ->required();
    formula_cmd->add_option("args", formula_args, "Integer arguments");
    add_region_flags(formula_cmd, formula_flags, true);
    formula_cmd->add_flag("--json", json, "JSON output");

    CheckFlags check_flags;
    auto* check_cmd = app.add_subcommand("check", "Verify one identity exactly");
    check_cmd->add_option("name", check_flags.name, "Identity to check")->required();
    check_cmd->add_option("args", check_flags.args, "Integer arguments");
    add_region_flags(check_cmd, check_flags.region, true);
    check_cmd->add_option("--level", check_flags.level, "Cut line for splitting");
    check_cmd->add_option("--variant", check_flags.variant, "Kuo variant")->check(CLI::IsMember({"balanced", "plus1", "plus2"}));
    check_cmd->add_option("--u", check_flags.u, "Kuo cell row,h");
    check_cmd->add_option("--v", check_flags.v, "Kuo cell row,h");
    check_cmd->add_option("--w", check_flags.w, "Kuo cell row,h");
    check_cmd->add_option("--s", check_flags.s, "Kuo cell row,h");
    check_cmd->add_option("--fill-left", check_flags.fill_left, "Left dents to fill")->delimiter(',');
    check_cmd->add_option("--fill-right", check_flags.fill_right, "Right dents to fill")->delimiter(',');
    check_cmd->add_option("--seed", check_flags.seed, "Seed for a random Kuo selection");
    check_cmd->add_option("--engine", engine, "brute or fast")->check(CLI::IsMember({"brute", "fast"}));
    check_cmd->add_flag("--json", json, "JSON output");
    check_cmd->add_option("--calibration", calibration_path, "Calibration table (JSON)");

    std::string calibrate_family;
    std::size_t budget = 0;
    std::string write_path;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "Search for a weight scheme matching the reference formulas");
    calibrate_cmd->add_option("--family", calibrate_family, "Qprime, SprimeBase or Sprime")
        ->required()
        ->check(CLI::IsMember({"Qprime", "SprimeBase", "Sprime"}));
    calibrate_cmd->add_option("--budget", budget, "Reference instances per candidate (0 = all)");
    calibrate_cmd->add_option("--write", write_path, "Write the updated calibration table here");
    calibrate_cmd->add_flag("--json", json, "JSON output");
    calibrate_cmd->add_option("--calibration", calibration_path, "Calibration table (JSON)");

    std::vector<int> criteria;
    std::string output_path = "suite_report.json";
    std::uint64_t seed = SuiteOptions{}.seed;
    auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance matrix and write a JSON report");
    suite_cmd->add_option("--criteria", criteria, "Criterion ids (default: all)")->delimiter(',');
    suite_cmd->add_option("--output", output_path, "Report path");
    suite_cmd->add_option("--seed", seed, "Seed for randomized selections");
    suite_cmd->add_flag("--json", json, "Print the report to stdout");
    suite_cmd->add_option("--calibration", calibration_path, "Calibration table (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const CalibrationTable table = load_table(calibration_path);
        CheckOptions opt{&table, parse_engine(engine)};

        if (*region_cmd) {
            Region r = build_region(region_flags, table, region_flags.x);
            std::optional<Tiling> hook = show_tiling ? canonical_tiling(r) : std::nullopt;
            if (json) {
                nlohmann::json j = r.to_json();
                if (show_tiling) j["tiling"] = hook ? tiling_to_json(*hook) : nlohmann::json(nullptr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << render_ascii(r);
                std::cout << r.up_count() << " up, " << r.down_count() << " down\n";
                if (show_tiling) std::cout << (hook ? render_tiling_ascii(r, *hook) : std::string("no hook tiling\n"));
            }
            return 0;
        }
        if (*tgf_cmd) {
            Region r = build_region(tgf_flags, table, tgf_flags.x);
            LaurentPoly value = symmetric ? tgf_symmetric(r) : tgf_with(r, opt.engine);
            if (json) {
                nlohmann::json j = {{"family", r.family}, {"params", r.params}, {"engine", engine},
                                    {"symmetric", symmetric}, {"tgf", value.to_json()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << value.to_text() << "\n";
            }
            return 0;
        }
        if (*formula_cmd) return run_formula(formula_name, formula_args, formula_flags, json);
        if (*check_cmd) return emit(run_check(check_flags, opt, table), json);
        if (*calibrate_cmd) {
            CalibrationReport report = calibrate_weight_scheme(parse_variant(calibrate_family), budget);
            if (json) {
                std::cout << report.to_json().dump(2) << "\n";
            } else {
                std::cout << calibrate_family << ": " << report.status << "\n";
                for (const CandidateResult& c : report.candidates) {
                    std::cout << (c.survived ? "  keep   " : "  reject ") << c.rule.to_json().dump() << " " << c.passed << "/"
                              << c.checks;
                    if (c.first_failure) std::cout << " first failure " << c.first_failure->name << " " << c.first_failure->params.dump();
                    std::cout << "\n";
                }
            }
            if (!write_path.empty()) {
                CalibrationTable updated = table;
                if (apply_calibration(updated, report)) updated.save(write_path);
                else std::cerr << "calibration inconclusive; table not written\n";
            }
            return 0;
        }
        if (*suite_cmd) {
            SuiteOptions so;
            so.table = table;
            so.criteria = criteria;
            so.seed = seed;
            if (!json) {
                so.on_done = [](const CriterionResult& c) {
                    std::cout << verdict_name(c.verdict) << " " << c.id << " " << c.title << " (" << c.summary << ")" << std::endl;
                };
            }
            SuiteReport report = run_suite(so);
            const std::string text = report.to_json().dump(2) + "\n";
            if (!output_path.empty()) std::ofstream(output_path) << text;
            if (json) std::cout << text;
            return report.any_fail() ? kExitFail : 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
