#include "lozenge/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lozenge {

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("zero base with negative exponent");
        return 0;
    }
    Rational r;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t()))
        return std::nullopt;
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), v.get_den_mpz_t());
    r.canonicalize();
    return r;
}

std::string monomial_text(const Monomial& m) {
    std::vector<std::string> parts;
    if (m.halfq != 0) {
        if (m.halfq % 2 != 0) {
            parts.push_back("q^(" + std::to_string(m.halfq) + "/2)");
        } else if (m.halfq == 2) {
            parts.push_back("q");
        } else {
            parts.push_back("q^" + std::to_string(m.halfq / 2));
        }
    }
    auto var = [&](char name, int e) {
        if (e == 0) return;
        std::string s(1, name);
        if (e != 1) s += "^" + std::to_string(e);
        parts.push_back(s);
    };
    var('X', m.xe);
    var('Y', m.ye);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

std::string coefficient_text(const Rational& c) {
    if (c >= 0 && c.get_den() == 1) return c.get_str();
    return "(" + c.get_str() + ")";
}

class TermParser {
public:
    explicit TermParser(const std::string& s) : s_(s) {}

    LaurentPoly parse_sum() {
        LaurentPoly out;
        skip_ws();
        if (pos_ == s_.size()) throw std::invalid_argument("empty polynomial text");
        while (true) {
            out += parse_term();
            skip_ws();
            if (pos_ == s_.size()) break;
            expect('+');
        }
        return out;
    }

private:
    LaurentPoly parse_term() {
        Rational coef = 1;
        Monomial mono;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '(') {
                ++pos_;
                coef *= parse_rational_until(')');
                expect(')');
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
                coef *= parse_rational_until('\0');
            } else if (c == 'q' || c == 'X' || c == 'Y') {
                ++pos_;
                int halves = 2;
                if (peek() == '^') {
                    ++pos_;
                    halves = parse_exponent_halves();
                }
                if (c == 'q') {
                    mono.halfq += halves;
                } else {
                    if (halves % 2 != 0) throw std::invalid_argument("fractional exponent on X or Y");
                    (c == 'X' ? mono.xe : mono.ye) += halves / 2;
                }
            } else {
                throw std::invalid_argument("unexpected character in polynomial text at " + std::to_string(pos_));
            }
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return LaurentPoly(mono, coef);
    }

    int parse_exponent_halves() {
        if (peek() == '(') {
            ++pos_;
            long n = parse_int();
            long d = 1;
            if (peek() == '/') {
                ++pos_;
                d = parse_int();
            }
            expect(')');
            if (d == 1) return static_cast<int>(2 * n);
            if (d == 2) return static_cast<int>(n);
            throw std::invalid_argument("q exponent denominator must be 1 or 2");
        }
        return static_cast<int>(2 * parse_int());
    }

    long parse_int() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && s_[start] == '-'))
            throw std::invalid_argument("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    Rational parse_rational_until(char close) {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (close != '\0' && peek() != close) throw std::invalid_argument("malformed coefficient");
        Rational r;
        if (r.set_str(tok, 10) != 0 || r.get_den() == 0) throw std::invalid_argument("malformed coefficient: " + tok);
        r.canonicalize();
        return r;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (peek() != c) throw std::invalid_argument(std::string("expected '") + c + "'");
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// Splits p into unit * normalized, where normalized has zero minimal exponents
// and its smallest term has coefficient 1.
std::pair<LaurentPoly, LaurentPoly> normalize_factor(const LaurentPoly& p) {
    Monomial lo = p.min_exponents();
    LaurentPoly shifted = p.shifted({-lo.halfq, -lo.xe, -lo.ye});
    Rational lead = shifted.terms().begin()->second;
    shifted *= Rational(1 / lead);
    return {LaurentPoly(lo, lead), shifted};
}

}  // namespace

std::string rational_text(const Rational& c) { return c.get_str(); }

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) { add_term(Monomial{}, c); }

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) { add_term(m, c); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            out.add_term(ma * mb, prod);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational k = c;
    k.canonicalize();
    for (auto& [m, v] : terms_) v *= k;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = 1;
    LaurentPoly base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Monomial& s) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * s, c);
    return out;
}

LaurentPoly LaurentPoly::swap_xy() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.add_term({m.halfq, m.ye, m.xe}, c);
    return out;
}

LaurentPoly LaurentPoly::drop_xy() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.add_term({m.halfq, 0, 0}, c);
    return out;
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) return {};
    Monomial lo = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        lo.halfq = std::min(lo.halfq, m.halfq);
        lo.xe = std::min(lo.xe, m.xe);
        lo.ye = std::min(lo.ye, m.ye);
    }
    return lo;
}

Rational LaurentPoly::eval(const Rational& q, const Rational& x, const Rational& y) const {
    if (q == 0) throw std::domain_error("q must be nonzero");
    bool half = std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.halfq % 2 != 0; });
    Rational base = q;
    if (half) {
        auto root = rational_sqrt(q);
        if (!root) throw std::domain_error("half-integer q exponents need a rational square root of q");
        base = *root;
    }
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        int qe = half ? m.halfq : m.halfq / 2;
        sum += c * rational_pow(base, qe) * rational_pow(x, m.xe) * rational_pow(y, m.ye);
    }
    return sum;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (m.is_one()) {
            out += coefficient_text(c);
        } else if (c == 1) {
            out += monomial_text(m);
        } else {
            out += coefficient_text(c) + "*" + monomial_text(m);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::from_text(const std::string& text) {
    TermParser parser(text);
    return parser.parse_sum();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        arr.push_back({{"halfq", m.halfq},
                       {"xe", m.xe},
                       {"ye", m.ye},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    LaurentPoly out;
    auto big = [](const nlohmann::json& v) {
        Integer z;
        if (v.is_string()) {
            if (z.set_str(v.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer in polynomial JSON");
        } else {
            z = Integer(v.get<long>());
        }
        return z;
    };
    for (const auto& t : j) {
        Rational c(big(t.at("num")), big(t.at("den")));
        if (c.get_den() == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
        c.canonicalize();
        out.add_term({t.at("halfq").get<int>(), t.at("xe").get<int>(), t.at("ye").get<int>()}, c);
    }
    return out;
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return LaurentPoly();
    Monomial mf = f.min_exponents();
    Monomial mg = g.min_exponents();
    LaurentPoly rem = f.shifted({-mf.halfq, -mf.xe, -mf.ye});
    LaurentPoly div = g.shifted({-mg.halfq, -mg.xe, -mg.ye});
    const auto& [lg, cg] = *div.terms().rbegin();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms().rbegin();
        if (lr.halfq < lg.halfq || lr.xe < lg.xe || lr.ye < lg.ye) return std::nullopt;
        Monomial step{lr.halfq - lg.halfq, lr.xe - lg.xe, lr.ye - lg.ye};
        Rational c = cr / cg;
        quot.add_term(step, c);
        rem -= div.shifted(step) * c;
    }
    return quot.shifted({mf.halfq - mg.halfq, mf.xe - mg.xe, mf.ye - mg.ye});
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    return *this;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(den_, num_); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<LaurentPoly> RationalFunction::expand() const {
    if (den_.is_one()) return num_;
    return exact_quotient(num_, den_);
}

std::string RationalFunction::to_text() const {
    if (den_.is_one()) return num_.to_text();
    return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

nlohmann::json RationalFunction::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

FactoredRatio& FactoredRatio::mul(const LaurentPoly& p) {
    if (p.is_zero()) {
        num_unit_ = LaurentPoly();
        return *this;
    }
    if (p.size() == 1) {
        num_unit_ *= p;
        return *this;
    }
    auto [unit, f] = normalize_factor(p);
    num_unit_ *= unit;
    auto it = std::find(den_.begin(), den_.end(), f);
    if (it != den_.end()) {
        den_.erase(it);
    } else {
        num_.push_back(std::move(f));
    }
    return *this;
}

FactoredRatio& FactoredRatio::div(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("division by zero factor");
    if (p.size() == 1) {
        den_unit_ *= p;
        return *this;
    }
    auto [unit, f] = normalize_factor(p);
    den_unit_ *= unit;
    auto it = std::find(num_.begin(), num_.end(), f);
    if (it != num_.end()) {
        num_.erase(it);
    } else {
        den_.push_back(std::move(f));
    }
    return *this;
}

FactoredRatio& FactoredRatio::mul(const FactoredRatio& other) {
    const FactoredRatio o = other;
    num_unit_ *= o.num_unit_;
    den_unit_ *= o.den_unit_;
    for (const auto& f : o.num_) mul(f);
    for (const auto& f : o.den_) div(f);
    return *this;
}

FactoredRatio& FactoredRatio::div(const FactoredRatio& o) { return mul(o.inverse()); }

FactoredRatio FactoredRatio::inverse() const {
    FactoredRatio out;
    out.num_ = den_;
    out.den_ = num_;
    out.num_unit_ = den_unit_;
    out.den_unit_ = num_unit_;
    return out;
}

RationalFunction FactoredRatio::collapse() const {
    LaurentPoly n = num_unit_;
    LaurentPoly d = den_unit_;
    // den_unit_ is a single term, so it can move to the numerator exactly.
    if (d.size() == 1) {
        const auto& [m, c] = *d.terms().begin();
        n = n.shifted({-m.halfq, -m.xe, -m.ye}) * Rational(1 / c);
        d = 1;
    }
    for (const auto& f : num_) n *= f;
    for (const auto& f : den_) d *= f;
    return RationalFunction(n, d);
}

}  // namespace lozenge
