#include <doctest.h>

#include <functional>

#include "lozenge/identities.hpp"

using namespace lozenge;

namespace {

LaurentPoly sum_of_weights(const Region& r) {
    LaurentPoly total;
    for_each_tiling(r, [&](const Tiling& t) {
        total += tiling_weight(r, t);
        return true;
    });
    return total;
}

std::vector<Region> sample_regions() {
    std::vector<Region> out;
    for (int x = 0; x <= 2; ++x) {
        out.push_back(build_S(x, {2}, {1, 3}));
        out.push_back(build_S(x, {2, 3}, {1, 4}));
        out.push_back(build_Q(x, {2, 3}));
        out.push_back(build_Qprime(x, {1, 4, 5}));
        out.push_back(build_P(x, 2));
        out.push_back(build_Pprime(x, 2));
        out.push_back(build_S_base(x, 3, {1, 2, x + 3}));
        out.push_back(build_Sprime(x, {1}, {2, 3}));
    }
    return out;
}

// Plane partitions in an a x b box with entries at most c, counted row by row.
long count_plane_partitions(int a, int b, int c) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(a), std::vector<int>(static_cast<std::size_t>(b), 0));
    std::function<long(int)> fill = [&](int k) -> long {
        if (k == a * b) return 1;
        const int i = k / b, j = k % b;
        int hi = c;
        if (i > 0) hi = std::min(hi, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
        if (j > 0) hi = std::min(hi, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        long total = 0;
        for (int v = 0; v <= hi; ++v) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            total += fill(k + 1);
        }
        return total;
    };
    return fill(0);
}

}  // namespace

TEST_CASE("memoized search equals the sum over enumerated tilings") {
    for (const Region& r : sample_regions()) {
        CAPTURE(r.params.dump());
        CHECK(tgf(r) == sum_of_weights(r));
    }
}

TEST_CASE("path determinant equals the memoized search") {
    for (const Region& r : sample_regions()) {
        CAPTURE(r.params.dump());
        CHECK(tgf_fast(r) == tgf(r));
    }
}

TEST_CASE("every enumerated tiling is valid and distinct") {
    Region r = build_P(3, 2);
    std::vector<Tiling> all = enumerate_tilings(r);
    REQUIRE(all.size() >= 3);
    CHECK(all.size() == static_cast<std::size_t>(tgf(r).eval(1, 1, 1).get_num().get_si()));
    std::set<Tiling> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const Tiling& t : all) CHECK(is_valid_tiling(r, t));
    CHECK(enumerate_tilings(r, 3).size() == 3);
}

TEST_CASE("degenerate and untileable regions") {
    CHECK(tgf(build_S(3, {}, {})) == LaurentPoly(1));
    CHECK(tgf(build_S(1, {1}, {1})).is_zero());
    CHECK_FALSE(has_tiling(build_Q(1, {1, 2})));
    CHECK(tgf(build_Q(1, {1})) == LaurentPoly(1));
}

TEST_CASE("halved hexagons with one row of triangles") {
    for (int x = 0; x <= 4; ++x) CHECK(enumerate_tilings(build_P(x, 1)).size() == static_cast<std::size_t>(x + 1));
}

TEST_CASE("dual graph matches the region") {
    Region r = build_Q(1, {2, 3});
    DualGraph g = dual_graph(r);
    CHECK(g.balanced());
    CHECK(g.ups.size() == r.up_count());
    std::size_t edges = 0;
    for (const Cell& c : r.cells)
        if (c.is_up())
            for (const Cell& d : {down_cell(c.row, c.h - 1), down_cell(c.row, c.h + 1), down_cell(c.row + 1, c.h)})
                edges += r.contains(d);
    CHECK(g.edge_count() == edges);
}

TEST_CASE("symmetric tilings are the reflection-fixed tilings") {
    for (const Dents& a : std::vector<Dents>{{2}, {2, 4}, {3, 4}, {2, 3}}) {
        for (int x = 0; x <= 2; ++x) {
            Region r = build_S(2 * x, a, a);
            Region mirror = reflect(r);
            REQUIRE(mirror.cells == r.cells);
            std::size_t fixed = 0;
            for_each_tiling(r, [&](const Tiling& t) {
                Tiling reflected;
                for (const Lozenge& l : t) {
                    Region pair;
                    pair.cells = {l.up, l.down};
                    pair.mirror_center = r.mirror_center;
                    Region back = reflect(pair);
                    std::vector<Cell> cs(back.cells.begin(), back.cells.end());
                    auto m = lozenge_between(cs[0], cs[1]);
                    reflected.push_back(*m);
                }
                std::sort(reflected.begin(), reflected.end());
                Tiling sorted = t;
                std::sort(sorted.begin(), sorted.end());
                fixed += reflected == sorted;
                return true;
            });
            CHECK(tgf_symmetric(r).eval(1, 1, 1) == static_cast<long>(fixed));
        }
    }
}

TEST_CASE("plane-partition oracle against direct counting") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) CHECK(pp_box_oracle(a, b, c).eval(1, 1, 1) == count_plane_partitions(a, b, c));
    CHECK(pp_box_oracle(1, 1, 2).to_text() == "1 + q + q^2");
}

TEST_CASE("engines agree through the dispatcher") {
    Region r = build_S(2, {2}, {1, 3});
    CHECK(tgf_with(r, Engine::Fast) == tgf_with(r, Engine::Brute));
}
