#include <doctest.h>

#include "lozenge/identities.hpp"

using namespace lozenge;

namespace {

Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational at_one(const RationalFunction& f) {
    auto e = f.expand();
    REQUIRE(e.has_value());
    return e->eval(1, 1, 1);
}

// Plane partitions in an a x b x c box by the hook-content product at q = 1.
Rational macmahon_count(int a, int b, int c) {
    Rational out = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) out *= frac(i + j + k - 1, i + j + k - 2);
    return out;
}

// Tilings of a semi-hexagon with unit dents on its base at positions s.
Rational semihexagon_count(const Dents& s) {
    Rational out = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) out *= frac(s[j] - s[i], static_cast<long>(j - i));
    return out;
}

}  // namespace

TEST_CASE("q-integers and q-factorials specialize to integers") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(q_int(n).eval(1, 1, 1) == n);
        Rational fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(q_fact(n).eval(1, 1, 1) == fact);
    }
    CHECK(q_int(3).to_text() == "1 + q + q^2");
}

TEST_CASE("q-MacMahon formula") {
    CHECK(pp_q(1, 1, 1).expand()->to_text() == "1 + q");
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(at_one(pp_q(a, b, c)) == macmahon_count(a, b, c));
                CHECK(pp_q(a, b, c) == pp_q(b, c, a));
            }
}

TEST_CASE("ratio formulas are cocycles") {
    const Dents a = {2, 3}, b = {1, 4};
    for (int x = 0; x <= 2; ++x) {
        CHECK(ratio_S(x, x, a, b) == RationalFunction(LaurentPoly(1)));
        CHECK(ratio_Q(x, x, {2, 4}) == RationalFunction(LaurentPoly(1)));
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) {
                CHECK(ratio_S(x, y, a, b) * ratio_S(y, z, a, b) == ratio_S(x, z, a, b));
                CHECK(ratio_Q(x, y, {1, 3}) * ratio_Q(y, z, {1, 3}) == ratio_Q(x, z, {1, 3}));
                CHECK(ratio_Qprime(x, y, {2, 3}) * ratio_Qprime(y, z, {2, 3}) == ratio_Qprime(x, z, {2, 3}));
                CHECK(ratio_Sprime(x, y, a, b) * ratio_Sprime(y, z, a, b) == ratio_Sprime(x, z, a, b));
            }
    }
}

TEST_CASE("factored and expanded ratios agree") {
    CHECK(ratio_S_factored(0, 2, {1, 3}, {2}).collapse() == ratio_S(0, 2, {1, 3}, {2}));
    CHECK(ratio_Q_factored(2, 4, {2, 3}, 2).collapse() == ratio_Q(1, 2, {2, 3}));
    CHECK(ratio_Q_half(2, 4, {2, 3}) == ratio_Q(1, 2, {2, 3}));
}

TEST_CASE("half-integer Q ratios match Q' ratios") {
    for (const Dents& a : increasing_sequences(2, 4))
        for (int x = 1; x <= 3; ++x)
            for (int y = 1; y <= 3; ++y) CHECK(ratio_Q_half(2 * x - 1, 2 * y - 1, a) == ratio_Qprime(x, y, a));
}

TEST_CASE("semi-hexagon product formula counts tilings at q = 1") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const Dents& s : increasing_sequences(b, a + b)) {
                CAPTURE(a);
                CHECK(tgf_S_base(a, b, s).eval(1, 1, 1) == semihexagon_count(s));
            }
}

TEST_CASE("halved hexagon with one row of triangles") {
    for (int x = 0; x <= 4; ++x) {
        CHECK(tgf_P(x, 1).eval(1, 1, 1) == x + 1);
        CHECK(tgf_P_corrected(x, 1) == tgf_P(x, 1));
        CHECK(tgf_Pprime_corrected(x, 1) == tgf_Pprime(x, 1));
        CHECK(tgf_P(x, 0) == LaurentPoly(1));
    }
}

TEST_CASE("invalid dent specifications are rejected") {
    CHECK_THROWS_AS(tgf_S_base(2, 2, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(tgf_S_base(1, 2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ratio_sym(0, 1, {1, 4}), std::invalid_argument);
}
