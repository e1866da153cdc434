#include "lozenge/qformulas.hpp"

#include <numeric>
#include <stdexcept>

namespace lozenge {

namespace {

Monomial mono_pow(const Monomial& m, int k) { return {m.halfq * k, m.xe * k, m.ye * k}; }

LaurentPoly minus_q(int exponent) { return LaurentPoly(Monomial{2 * exponent, 0, 0}, -1); }

int sum_of(const Dents& d) { return std::accumulate(d.begin(), d.end(), 0); }

LaurentPoly two_pow(int e) {
    Rational r = 1;
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    return LaurentPoly(r);
}

// (q^{2 hi} - q^{2 lo}) over (q^{2 j} - q^{2 i}) for all i < j.
void mul_vandermonde_ratio(FactoredRatio& f, const Dents& s) {
    const int b = static_cast<int>(s.size());
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            f.mul(LaurentPoly::q_pow(2 * s[j]) - LaurentPoly::q_pow(2 * s[i]));
            f.div(LaurentPoly::q_pow(2 * (j + 1)) - LaurentPoly::q_pow(2 * (i + 1)));
        }
    }
}

void check_base_spec(int a, int b, const Dents& s) {
    if (a < 0 || b < 0 || static_cast<int>(s.size()) != b) throw std::invalid_argument("base dent count must equal b");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > a + b || (i > 0 && s[i] <= s[i - 1]))
            throw std::invalid_argument("base dents must be strictly increasing in [1, a+b]");
    }
}

FactoredRatio proctor_factored(int x, int n, int d, bool corrected) {
    FactoredRatio f;
    int qexp = 0;
    for (int i = 1; i <= n; ++i) qexp -= (2 * i - 1) * (2 * x + i - d);
    if (corrected) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) qexp += 2 * x + i + j - d;
        f.mul(two_pow(-n * (n + 1) / 2));
    } else {
        f.mul(two_pow(-n * n));
    }
    f.mul(LaurentPoly::q_pow(qexp));
    for (int k = 1; k <= n; ++k) {
        for (int t = 1; t <= 2 * k - 1; ++t) f.div(q_int(t, 2));
    }
    for (int i = 1; i <= n; ++i) f.mul(q_int(2 * (x + i) - d, 2));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int k = 2 * x + i + j - d;
            f.mul(q_int(corrected ? k : 2 * k, 2));
            f.mul(q_int(2 * (j - i), 2));
        }
    }
    return f;
}

}  // namespace

LaurentPoly q_int(int n, int base_exp) {
    if (n < 0) throw std::invalid_argument("q_int needs n >= 0");
    LaurentPoly out;
    for (int k = 0; k < n; ++k) out.add_term(Monomial{2 * base_exp * k, 0, 0}, 1);
    return out;
}

LaurentPoly q_fact(int n, int base_exp) {
    if (n < 0) throw std::invalid_argument("q_fact needs n >= 0");
    LaurentPoly out = 1;
    for (int k = 1; k <= n; ++k) out *= q_int(k, base_exp);
    return out;
}

FactoredRatio q_poch_factored(const LaurentPoly& c, const Monomial& base, int n) {
    FactoredRatio f;
    if (n >= 0) {
        for (int k = 0; k < n; ++k) f.mul(LaurentPoly(1) + c * LaurentPoly(mono_pow(base, k)));
    } else {
        for (int j = 1; j <= -n; ++j) f.div(LaurentPoly(1) + c * LaurentPoly(mono_pow(base, -j)));
    }
    return f;
}

RationalFunction q_poch(const LaurentPoly& c, const Monomial& base, int n) {
    return q_poch_factored(c, base, n).collapse();
}

FactoredRatio pp_q_factored(int a, int b, int c, int base_exp) {
    FactoredRatio f;
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            for (int k = 1; k <= c; ++k) {
                f.mul(LaurentPoly::q_pow(base_exp * (i + j + k - 1)) - LaurentPoly(1));
                f.div(LaurentPoly::q_pow(base_exp * (i + j + k - 2)) - LaurentPoly(1));
            }
        }
    }
    return f;
}

RationalFunction pp_q(int a, int b, int c, int base_exp) { return pp_q_factored(a, b, c, base_exp).collapse(); }

FactoredRatio ratio_S_factored(int x, int y, const Dents& a, const Dents& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    const int total = m + n;
    const Monomial q2{4, 0, 0};
    FactoredRatio f;
    f.mul(LaurentPoly::q_pow((y - x) * (sum_of(a) + sum_of(b) - total * (total + 1) / 2)));
    f.mul(pp_q_factored(y, m, n, 2));
    f.div(pp_q_factored(x, m, n, 2));
    for (int i = 1; i <= m; ++i) {
        f.mul(q_poch_factored(minus_q(2 * (x + i)), q2, a[i - 1] - i));
        f.div(q_poch_factored(minus_q(2 * (y + i)), q2, a[i - 1] - i));
    }
    for (int j = 1; j <= n; ++j) {
        f.mul(q_poch_factored(minus_q(2 * (x + j)), q2, b[j - 1] - j));
        f.div(q_poch_factored(minus_q(2 * (y + j)), q2, b[j - 1] - j));
    }
    return f;
}

RationalFunction ratio_S(int x, int y, const Dents& a, const Dents& b) {
    return ratio_S_factored(x, y, a, b).collapse();
}

RationalFunction ratio_Sprime(int x, int y, const Dents& a, const Dents& b) {
    if (y < x) return ratio_Sprime(y, x, a, b).inverse();
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    FactoredRatio f = ratio_S_factored(x, y, a, b);
    // Undo the S prefactor and apply the stated one, in half units of q.
    f.div(LaurentPoly::q_pow((y - x) * (sum_of(a) + sum_of(b) - (m + n) * (m + n + 1) / 2)));
    int halfq = n * (y * y - x * x) + (y - x) * (2 * sum_of(b) - m * m - n * n - 2 * m * n + 4 * n);
    f.mul(LaurentPoly::q_half_pow(halfq));
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= y - x; ++i) {
            f.mul(LaurentPoly(Monomial{0, 2, 0}) + LaurentPoly(Monomial{4 * (x + i - b[j - 1]), 1, 1}));
        }
    }
    return f.collapse();
}

FactoredRatio ratio_Q_factored(int x2, int y2, const Dents& a, int arg_shift2) {
    const int m = static_cast<int>(a.size());
    const Monomial q2{4, 0, 0};
    FactoredRatio f;
    f.mul(LaurentPoly::q_pow((y2 - x2) * (sum_of(a) - m * m)));
    for (int i = 1; i <= m; ++i) {
        int len = 2 * i - a[i - 1] - 1;
        f.mul(q_poch_factored(minus_q(2 * y2 + 2 * a[i - 1] + arg_shift2), q2, len));
        f.div(q_poch_factored(minus_q(2 * x2 + 2 * a[i - 1] + arg_shift2), q2, len));
    }
    return f;
}

RationalFunction ratio_Q(int x, int y, const Dents& a) { return ratio_Q_factored(2 * x, 2 * y, a, 2).collapse(); }

RationalFunction ratio_Q_half(int x2, int y2, const Dents& a) { return ratio_Q_factored(x2, y2, a, 2).collapse(); }

RationalFunction ratio_Qprime(int x, int y, const Dents& a) { return ratio_Q_factored(2 * x, 2 * y, a, 0).collapse(); }

namespace {

void check_sym_spec(const Dents& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0 || a.front() <= 1 || a.back() != 2 * m)
        throw std::invalid_argument("symmetric ratio needs a_1 > 1 and a_m = 2m");
}

}  // namespace

RationalFunction ratio_sym(int x, int y, const Dents& a) {
    check_sym_spec(a);
    const int m = static_cast<int>(a.size());
    const Monomial q2{4, 0, 0};
    FactoredRatio inner;
    int partial = 0;
    for (int i = 1; i <= m - 1; ++i) {
        partial += a[i - 1];
        int len = 2 * i - a[i - 1];
        inner.mul(q_poch_factored(minus_q(2 * (2 * y + a[i - 1] - 1)), q2, len));
        inner.div(q_poch_factored(minus_q(2 * (2 * x + a[i - 1] - 1)), q2, len));
    }
    FactoredRatio f;
    f.mul(LaurentPoly::q_pow(4 * (y - x) * (partial - m * (m - 1))));
    f.mul(inner);
    f.mul(inner);
    return f.collapse();
}

RationalFunction ratio_sym_squared_q(int x, int y, const Dents& a) {
    check_sym_spec(a);
    Dents reduced(a.begin(), a.end() - 1);
    for (int& v : reduced) v -= 1;
    FactoredRatio g = ratio_Q_factored(2 * x, 2 * y, reduced, 2);
    g.mul(g);
    return g.collapse();
}

LaurentPoly expand_or_throw(const RationalFunction& f, const char* what) {
    auto p = f.expand();
    if (!p) throw std::logic_error(std::string(what) + ": denominator does not divide numerator");
    return *p;
}

RationalFunction tgf_S_base_rational(int a, int b, const Dents& s) {
    check_base_spec(a, b, s);
    FactoredRatio f;
    f.mul(two_pow(-b * (b - 1) / 2));
    int qexp = 0;
    for (int i = 1; i <= b; ++i) qexp += (b - 1) * (i + 1 - 2 * s[i - 1]);
    f.mul(LaurentPoly::q_pow(qexp));
    mul_vandermonde_ratio(f, s);
    for (int i = 1; i <= b; ++i) {
        for (int j = 1; j < i; ++j) {
            f.mul(LaurentPoly(Monomial{4 * (s[i - 1] + s[j - 1] - 2), 1, 0}) + LaurentPoly::var_y());
        }
    }
    return f.collapse();
}

RationalFunction tgf_Sprime_base_rational(int a, int b, const Dents& s) {
    check_base_spec(a, b, s);
    FactoredRatio f;
    int two_exp = 0;
    int halfq = 0;
    for (int i = 1; i <= b; ++i) {
        two_exp += i - s[i - 1];
        halfq += (i - s[i - 1]) * (s[i - 1] - 3 + i);
    }
    f.mul(two_pow(two_exp));
    f.mul(LaurentPoly::q_half_pow(halfq));
    mul_vandermonde_ratio(f, s);
    for (int i = 1; i <= b; ++i) {
        for (int j = 1; j <= s[i - 1] - i; ++j) {
            f.mul(LaurentPoly(Monomial{4 * (i + j - b - 1), 1, 0}) + LaurentPoly::var_y());
        }
    }
    return f.collapse();
}

LaurentPoly tgf_S_base(int a, int b, const Dents& s) {
    return expand_or_throw(tgf_S_base_rational(a, b, s), "tgf_S_base");
}

LaurentPoly tgf_Sprime_base(int a, int b, const Dents& s) {
    return expand_or_throw(tgf_Sprime_base_rational(a, b, s), "tgf_Sprime_base");
}

LaurentPoly tgf_P(int x, int n) { return expand_or_throw(proctor_factored(x, n, 0, false).collapse(), "tgf_P"); }

LaurentPoly tgf_Pprime(int x, int n) {
    return expand_or_throw(proctor_factored(x, n, 1, false).collapse(), "tgf_Pprime");
}

LaurentPoly tgf_P_corrected(int x, int n) {
    return expand_or_throw(proctor_factored(x, n, 0, true).collapse(), "tgf_P_corrected");
}

LaurentPoly tgf_Pprime_corrected(int x, int n) {
    return expand_or_throw(proctor_factored(x, n, 1, true).collapse(), "tgf_Pprime_corrected");
}

}  // namespace lozenge
