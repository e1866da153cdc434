#include <doctest.h>

#include <random>

#include "lozenge/exactalg.hpp"

using namespace lozenge;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 4), exp(-4, 4), var(0, 2), coef(-3, 3), den(1, 3);
    LaurentPoly p;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(Monomial{exp(rng), var(rng), var(rng)}, Rational(c, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical text for small polynomials") {
    CHECK((LaurentPoly(1) + LaurentPoly::q_pow(1)).to_text() == "1 + q");
    CHECK(LaurentPoly().to_text() == "0");
    CHECK(LaurentPoly::q_half_pow(3).to_text() == "q^(3/2)");
    LaurentPoly p = LaurentPoly::q_pow(-2) * Rational(1, 2) - LaurentPoly::var_x() * LaurentPoly::q_pow(3);
    CHECK(LaurentPoly::from_text(p.to_text()) == p);
}

TEST_CASE("ring laws hold on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(LaurentPoly::from_text(a.to_text()) == a);
        CHECK(LaurentPoly::from_json(a.to_json()) == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    const Rational q(3, 2), x(2, 5), y(-7, 3);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).eval(q * q, x, y) == a.eval(q * q, x, y) * b.eval(q * q, x, y));
        CHECK((a + b).eval(q * q, x, y) == a.eval(q * q, x, y) + b.eval(q * q, x, y));
    }
}

TEST_CASE("exact quotient recovers a factor") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        auto quotient = exact_quotient(a * b, b);
        REQUIRE(quotient.has_value());
        CHECK(*quotient == a);
    }
    CHECK_FALSE(exact_quotient(LaurentPoly(1) + LaurentPoly::q_pow(1), LaurentPoly(1) + LaurentPoly::q_pow(2)).has_value());
}

TEST_CASE("rational functions compare by cross-multiplication") {
    LaurentPoly one_q = LaurentPoly(1) + LaurentPoly::q_pow(1);
    LaurentPoly one_mq = LaurentPoly(1) - LaurentPoly::q_pow(1);
    RationalFunction f(one_q * one_mq, one_mq);
    CHECK(f == RationalFunction(one_q));
    CHECK(f.expand().value() == one_q);
    CHECK((f / f) == RationalFunction(LaurentPoly(1)));
    CHECK(f.inverse() * f == RationalFunction(LaurentPoly(1)));
    CHECK_FALSE(RationalFunction(one_q).expand()->is_zero());
}

TEST_CASE("factored ratios cancel before expanding") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        FactoredRatio f;
        f.mul(a).mul(b).div(c).div(a);
        CHECK(f.collapse() == RationalFunction(b, c));
        FactoredRatio g = f;
        g.mul(g);
        CHECK(g.collapse() == RationalFunction(b * b, c * c));
        CHECK(f.inverse().collapse() == RationalFunction(c, b));
    }
}
