#include <doctest.h>

#include <fstream>

#include "lozenge/identities.hpp"

using namespace lozenge;

TEST_CASE("cells and lozenges") {
    auto l = lozenge_between(up_cell(2, 0), down_cell(3, 0));
    REQUIRE(l.has_value());
    CHECK(l->kind == LozengeKind::Vertical);
    CHECK(lozenge_between(up_cell(2, 0), down_cell(2, 1))->kind == LozengeKind::Right);
    CHECK(lozenge_between(down_cell(2, -1), up_cell(2, 0))->kind == LozengeKind::Left);
    CHECK_FALSE(lozenge_between(up_cell(2, 0), down_cell(2, 3)).has_value());
}

TEST_CASE("dented semi-hexagons are balanced") {
    for (int rows = 1; rows <= 4; ++rows)
        for (int m = 0; m <= rows; ++m)
            for (const Dents& a : increasing_sequences(m, rows))
                for (const Dents& b : increasing_sequences(rows - m, rows))
                    for (int x = 1; x <= 2; ++x) {
                        Region r = build_S(x, a, b);
                        CHECK(r.balanced());
                        CHECK(r.cells.size() == static_cast<std::size_t>(rows * (2 * x + rows) - rows));
                    }
}

TEST_CASE("quartered hexagons and halved hexagons are balanced") {
    for (int m = 1; m <= 3; ++m)
        for (const Dents& a : increasing_sequences(m, 2 * m)) CHECK(build_Q(1, a).balanced());
    for (int n = 0; n <= 3; ++n) CHECK(build_P(2, n).balanced());
}

TEST_CASE("builders reject invalid dents with a reason") {
    CHECK_THROWS_AS(build_S(1, {2, 1}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(build_Q(1, {5}), std::invalid_argument);
    CHECK_THROWS_AS(build_S(0, {1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(build_S_base(1, 2, {1}), std::invalid_argument);
}

TEST_CASE("reflection is an involution and fixes symmetric shapes") {
    Region r = build_S(2, {1, 3}, {2});
    CHECK(reflect(reflect(r)).cells == r.cells);
    Region sym = build_S(2, {2, 3}, {2, 3});
    CHECK(reflect(sym).cells == sym.cells);
    Region base = build_S_base(2, 2, {1, 4});
    CHECK(reflect(base).cells == base.cells);
}

TEST_CASE("filling a dent restores its cell") {
    Region r = build_S(1, {2}, {1, 3});
    Cell c = dent_cell(r, Side::Right, 3);
    CHECK_FALSE(r.contains(c));
    Region filled = fill_dent(r, Side::Right, 3);
    CHECK(filled.contains(c));
    CHECK(filled.up_count() == filled.down_count() + 1);
    CHECK(delete_cells(filled, {c}).cells == r.cells);
    CHECK(add_cells(r, {c}).cells == filled.cells);
}

TEST_CASE("hook tilings are valid whenever the predicates say tileable") {
    for (int rows = 1; rows <= 4; ++rows)
        for (int m = 0; m <= rows; ++m)
            for (const Dents& a : increasing_sequences(m, rows))
                for (const Dents& b : increasing_sequences(rows - m, rows)) {
                    if (!tileable_S(a, b)) continue;
                    Region r = build_S(1, a, b);
                    auto t = canonical_tiling(r);
                    REQUIRE(t.has_value());
                    CHECK(is_valid_tiling(r, *t));
                }
    CHECK_FALSE(tileable_S({1}, {1}));
    CHECK_FALSE(canonical_tiling(build_S(1, {1}, {1})).has_value());
}

TEST_CASE("weight schemes") {
    Region r = build_S(1, {1}, {2});
    CHECK(r.scheme.axis_h == 1);
    CHECK(WeightScheme::from_json(r.scheme.to_json()) == r.scheme);
    Lozenge on_axis{up_cell(2, 0), down_cell(3, 0), LozengeKind::Vertical};
    CHECK(r.scheme.index(on_axis).value() == 0);
    CHECK(r.scheme.weight(on_axis) == (LaurentPoly::var_x() + LaurentPoly::var_y()) * Rational(1, 2));
    Region qp = build_Qprime(1, {1, 2});
    Lozenge half{up_cell(1, -1), down_cell(2, -1), LozengeKind::Vertical};
    CHECK(qp.scheme.weight(half) == LaurentPoly(Rational(1, 2)));
}

TEST_CASE("shipped calibration table equals the built-in default") {
    CalibrationTable shipped = CalibrationTable::load(std::string(LOZENGE_SOURCE_DIR) + "/config/calibration.json");
    CHECK(shipped.to_json() == default_calibration().to_json());
    CHECK(CalibrationTable::from_json(default_calibration().to_json()).to_json() == default_calibration().to_json());
}

TEST_CASE("forced lozenges are removed with their weight") {
    Region r = build_S_base(2, 2, {2, 3});
    ForcedReduction red = reduce_forced(r);
    CHECK_FALSE(red.dead);
    CHECK(red.region.cells.size() < r.cells.size());
    CHECK(red.factor * cached_tgf(red.region) == cached_tgf(r));
    CHECK(reduce_forced(build_S(1, {1}, {1})).dead);
}

TEST_CASE("ascii rendering is deterministic and marks every cell") {
    Region r = build_Q(1, {2});
    std::string text = render_ascii(r);
    CHECK(text == render_ascii(r));
    CHECK(std::count(text.begin(), text.end(), '^') == static_cast<long>(r.up_count()));
    CHECK(std::count(text.begin(), text.end(), 'v') == static_cast<long>(r.down_count()));
    auto t = canonical_tiling(r);
    REQUIRE(t.has_value());
    CHECK(tiling_to_json(*t).size() == t->size());
    CHECK_FALSE(render_tiling_ascii(r, *t).empty());
}
