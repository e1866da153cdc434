#pragma once

#include <vector>

#include "lozenge/exactalg.hpp"

namespace lozenge {

using Dents = std::vector<int>;

// [n]_{q^k} and [n]_{q^k}!
LaurentPoly q_int(int n, int base_exp = 1);
LaurentPoly q_fact(int n, int base_exp = 1);

// Plus-sign Pochhammer (c; base)_n = (1 + c)(1 + c base)...(1 + c base^{n-1}).
// For n < 0 it is the product of (1 + c base^{-j})^{-1}, j = 1..-n.
FactoredRatio q_poch_factored(const LaurentPoly& c, const Monomial& base, int n);
RationalFunction q_poch(const LaurentPoly& c, const Monomial& base, int n);

// MacMahon's box product with q replaced by q^base_exp.
FactoredRatio pp_q_factored(int a, int b, int c, int base_exp = 1);
RationalFunction pp_q(int a, int b, int c, int base_exp = 1);

// Each ratio_* returns M(region at x) / M(region at y).
RationalFunction ratio_S(int x, int y, const Dents& a, const Dents& b);
RationalFunction ratio_Sprime(int x, int y, const Dents& a, const Dents& b);
RationalFunction ratio_Q(int x, int y, const Dents& a);
RationalFunction ratio_Qprime(int x, int y, const Dents& a);
// ratio_Q with x and y given in half units (x = x2 / 2).
RationalFunction ratio_Q_half(int x2, int y2, const Dents& a);
// The symmetric ratio exactly as stated, and the square of ratio_Q on a - 1 without a_m.
RationalFunction ratio_sym(int x, int y, const Dents& a);
RationalFunction ratio_sym_squared_q(int x, int y, const Dents& a);

FactoredRatio ratio_S_factored(int x, int y, const Dents& a, const Dents& b);
FactoredRatio ratio_Q_factored(int x2, int y2, const Dents& a, int arg_shift2);

LaurentPoly tgf_S_base(int a, int b, const Dents& s);
LaurentPoly tgf_Sprime_base(int a, int b, const Dents& s);
RationalFunction tgf_S_base_rational(int a, int b, const Dents& s);
RationalFunction tgf_Sprime_base_rational(int a, int b, const Dents& s);

// Halved hexagon formulas as stated.
LaurentPoly tgf_P(int x, int n);
LaurentPoly tgf_Pprime(int x, int n);
// The variants that agree with enumeration for every n.
LaurentPoly tgf_P_corrected(int x, int n);
LaurentPoly tgf_Pprime_corrected(int x, int n);

LaurentPoly expand_or_throw(const RationalFunction& f, const char* what);

}  // namespace lozenge
