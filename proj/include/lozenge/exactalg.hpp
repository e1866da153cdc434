#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace lozenge {

using Rational = mpq_class;
using Integer = mpz_class;

// Exponent of q is stored in half units: halfq = 2 * (exponent of q).
struct Monomial {
    int halfq = 0;
    int xe = 0;
    int ye = 0;

    auto operator<=>(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const { return {halfq + o.halfq, xe + o.xe, ye + o.ye}; }
    bool is_one() const { return halfq == 0 && xe == 0 && ye == 0; }
};

class LaurentPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Rational& c);
    LaurentPoly(const Monomial& m, const Rational& c = 1);

    static LaurentPoly q_pow(int exponent) { return LaurentPoly(Monomial{2 * exponent, 0, 0}); }
    static LaurentPoly q_half_pow(int halfq) { return LaurentPoly(Monomial{halfq, 0, 0}); }
    static LaurentPoly var_x() { return LaurentPoly(Monomial{0, 1, 0}); }
    static LaurentPoly var_y() { return LaurentPoly(Monomial{0, 0, 1}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned n) const;
    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly swap_xy() const;
    LaurentPoly drop_xy() const;  // substitute X = Y = 1
    Monomial min_exponents() const;

    Rational eval(const Rational& q, const Rational& x, const Rational& y) const;

    std::string to_text() const;
    static LaurentPoly from_text(const std::string& text);
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    Terms terms_;
};

// Exact quotient f / g when g divides f in the Laurent ring.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& f, const LaurentPoly& g);

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(const LaurentPoly& num) : num_(num), den_(1) {}
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);

    RationalFunction inverse() const;
    bool is_zero() const { return num_.is_zero(); }

    // Cross-multiplication: a/b == c/d iff a*d == c*b.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    std::optional<LaurentPoly> expand() const;
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// A product of polynomial factors over a product of polynomial factors.
// Identical factors on both sides cancel before anything is multiplied out.
class FactoredRatio {
public:
    FactoredRatio& mul(const LaurentPoly& p);
    FactoredRatio& div(const LaurentPoly& p);
    FactoredRatio& mul(const FactoredRatio& o);
    FactoredRatio& div(const FactoredRatio& o);
    FactoredRatio inverse() const;

    RationalFunction collapse() const;

private:
    std::vector<LaurentPoly> num_;
    std::vector<LaurentPoly> den_;
    LaurentPoly num_unit_ = 1;
    LaurentPoly den_unit_ = 1;
};

std::string rational_text(const Rational& c);

}  // namespace lozenge
