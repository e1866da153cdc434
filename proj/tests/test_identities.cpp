#include <doctest.h>

#include <random>

#include "lozenge/suite.hpp"

using namespace lozenge;

TEST_CASE("outer face of a single lozenge region") {
    Region r = build_P(0, 1);
    std::vector<Cell> face = outer_face_cells(r);
    CHECK(face.size() == r.cells.size());
    for (const Cell& c : r.cells) CHECK(std::count(face.begin(), face.end(), c) == 1);
}

namespace {

std::vector<Cell> cells_around(int c, int k) {
    return {up_cell(k, c), down_cell(k, c - 1), up_cell(k, c - 2), down_cell(k + 1, c - 2), up_cell(k + 1, c - 1), down_cell(k + 1, c)};
}

std::vector<std::pair<int, int>> corners(const Cell& c) {
    if (c.is_up()) return {{c.h, c.row}, {c.h + 2, c.row}, {c.h + 1, c.row - 1}};
    return {{c.h + 1, c.row}, {c.h + 2, c.row - 1}, {c.h, c.row - 1}};
}

}  // namespace

TEST_CASE("outer face is the set of cells touching the boundary") {
    for (const Region& r : {build_S(2, {2}, {1, 3}), build_Q(1, {2, 3}), build_S_base(1, 3, {1, 3, 4})}) {
        std::vector<Cell> face = outer_face_cells(r);
        for (const Cell& c : r.cells) {
            bool boundary = false;
            for (const auto& [vc, vk] : corners(c)) {
                auto around = cells_around(vc, vk);
                REQUIRE(std::find(around.begin(), around.end(), c) != around.end());
                for (const Cell& d : around) boundary = boundary || !r.contains(d);
            }
            CHECK(boundary == (std::find(face.begin(), face.end(), c) != face.end()));
        }
    }
}

TEST_CASE("Kuo condensation on random selections") {
    std::mt19937_64 rng(5);
    const std::vector<std::pair<Region, KuoVariant>> cases = {
        {build_S(1, {2, 3}, {1, 4}), KuoVariant::Balanced},
        {fill_dent(build_S(2, {1, 3}, {2}), Side::Left, 3), KuoVariant::Plus1},
        {fill_dent(fill_dent(build_Q(1, {2, 3, 6}), Side::Right, 2), Side::Right, 6), KuoVariant::Plus2},
    };
    for (const auto& [g, variant] : cases) {
        for (int i = 0; i < 5; ++i) {
            auto sel = random_kuo_selection(g, variant, rng);
            REQUIRE(sel.has_value());
            CHECK(kuo_selection_problem(g, *sel).empty());
            CHECK(check_kuo(g, *sel).passed());
        }
    }
}

TEST_CASE("invalid Kuo selections are rejected") {
    Region g = build_S(1, {2, 3}, {1, 4});
    KuoSelection sel{up_cell(1, -1), up_cell(1, 1), up_cell(3, -3), down_cell(3, -2), KuoVariant::Balanced};
    CHECK_FALSE(kuo_selection_problem(g, sel).empty());
    CHECK_THROWS_AS(check_kuo(g, sel), std::invalid_argument);
}

TEST_CASE("proof selections satisfy the Kuo hypotheses") {
    auto s = proof_kuo_instance_S(1, {2, 3}, {2, 4});
    REQUIRE(s.has_value());
    CHECK(kuo_selection_problem(s->graph, s->selection).empty());
    CHECK(check_kuo(s->graph, s->selection).passed());
    auto q = proof_kuo_instance_Q(1, {3, 5, 6});
    REQUIRE(q.has_value());
    CHECK(check_kuo(q->graph, q->selection).passed());
}

TEST_CASE("ratio checks pass, and skip untileable specs") {
    CHECK(check_ratio(RatioKind::S, 0, 1, {2}, {1}).passed());
    CHECK(check_ratio(RatioKind::Q, 0, 2, {2, 3}).passed());
    CHECK(check_ratio(RatioKind::Qprime, 1, 3, {1, 4}).passed());
    CHECK(check_ratio(RatioKind::S, 1, 2, {1}, {1}).verdict == Verdict::Skip);
    CHECK(check_ratio(RatioKind::S, 0, 1, {2}, {1}, {&default_calibration(), Engine::Fast}).passed());
}

TEST_CASE("recurrences and prefactor identities") {
    CHECK(check_recurrence_S(1, {2, 3}, {2, 4}).passed());
    CHECK(check_prefactor_S(0, 2, {2, 3}, {2, 4}).passed());
    CHECK(check_recurrence_Q(0, {3, 5, 6}).passed());
    CHECK(check_prefactor_Q(1, 2, {3, 5, 6}).passed());
    CHECK(check_recurrence_P(1, 3).passed());
    CHECK(check_recurrence_S_base(2, 3, {1, 2, 5}).passed());
    CHECK(check_recurrence_S(1, {2, 3}, {3, 4}).verdict == Verdict::Skip);
}

TEST_CASE("product formulas for halved hexagons") {
    for (int x = 0; x <= 2; ++x)
        for (int n = 0; n <= 3; ++n) {
            CHECK(check_lemma_formula(LemmaKind::PCorrected, x, n).passed());
            CHECK(check_lemma_formula(LemmaKind::PprimeCorrected, x, n).passed());
        }
    CHECK(check_lemma_formula(LemmaKind::P, 1, 1).passed());
    CHECK(check_lemma_formula(LemmaKind::P, 1, 2).verdict == Verdict::Fail);
}

TEST_CASE("region splitting along a balanced cut") {
    Region r = build_S(1, {1, 3}, {2, 4});
    CHECK(check_region_splitting(r, 2).passed());
    for (int level = 1; level <= 3; ++level) CHECK(check_region_splitting(r, level).verdict != Verdict::Fail);
}

TEST_CASE("calibration searches") {
    CalibrationReport qp = calibrate_weight_scheme(Variant::Qprime);
    REQUIRE(qp.conclusive());
    CHECK(qp.survivor()->rule.anchor == Anchor::Zigzag);
    CHECK(qp.survivor()->rule.offset == 0);
    CalibrationTable t = default_calibration();
    CHECK(apply_calibration(t, qp));
    CHECK(t.rule(Variant::Pprime).on_axis_rule == AxisRule::Half);

    CalibrationReport sp = calibrate_weight_scheme(Variant::Sprime);
    CHECK_FALSE(sp.conclusive());
    for (const CandidateResult& c : sp.candidates) CHECK(c.first_failure.has_value());
    CHECK(sp.to_json()["rejected"].size() == sp.candidates.size());
    CHECK_FALSE(apply_calibration(t, sp));
}

TEST_CASE("suite criteria are deterministic") {
    SuiteOptions opt;
    for (int id : {5, 9}) {
        CriterionResult a = run_criterion(id, opt), b = run_criterion(id, opt);
        CHECK(a.verdict == Verdict::Pass);
        CHECK(a.to_json().dump() == b.to_json().dump());
    }
    CHECK_THROWS(run_criterion(99, opt));
}

TEST_CASE("increasing sequences") {
    CHECK(increasing_sequences(2, 4).size() == 6);
    CHECK(increasing_sequences(0, 3).size() == 1);
    CHECK(increasing_sequences(4, 3).empty());
}
