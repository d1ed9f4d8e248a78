#pragma once

#include <map>
#include <vector>

#include "lift/tropical.hpp"

namespace lift {

/// Sparse multivariate polynomial over arbitrary-precision integers.
/// Terms are keyed by exponent vectors and ordered graded-lexicographically,
/// largest first, so begin() is the leading term.
struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, BigInt, GrlexGreater> terms; // no zero coefficients

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    BigInt constant_value() const; // requires is_constant()
    int degree(int var) const;     // 0-based var; -1 for the zero polynomial... see impl

    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
};

Poly poly_zero(int nvars);
Poly poly_const(int nvars, const BigInt& c);
Poly poly_var(int nvars, int var); // 0-based
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int k);

/// Exact quotient; throws Error if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

BigInt poly_content(const Poly& a); // gcd of coefficients, >= 0
Poly poly_gcd(const Poly& a, const Poly& b);

BigRat poly_eval(const Poly& a, const std::vector<BigRat>& t);
std::string poly_to_string(const Poly& a, const std::vector<std::string>& names = {});

/// Reduced fraction of polynomials. Denominator is nonzero, gcd(num, den) is
/// constant, and the denominator's leading coefficient is positive.
struct RatFun {
    Poly num, den;

    static RatFun from_poly(const Poly& p);
    static RatFun constant(int nvars, const BigRat& c);
    static RatFun variable(int nvars, int var);

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

RatFun rf_normalize(Poly num, Poly den); // throws Error on zero denominator
RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_sub(const RatFun& a, const RatFun& b);
RatFun rf_neg(const RatFun& a);
RatFun rf_mul(const RatFun& a, const RatFun& b);
RatFun rf_div(const RatFun& a, const RatFun& b); // throws Error on zero divisor
RatFun rf_inv(const RatFun& a);
RatFun rf_pow(const RatFun& a, int k); // any integer k

BigRat rf_eval(const RatFun& a, const std::vector<BigRat>& t);
std::string rf_to_string(const RatFun& a, const std::vector<std::string>& names = {});

/// Substitutes rational functions for the variables of p.
RatFun poly_compose(const Poly& p, const std::vector<RatFun>& args);
RatFun rf_compose(const RatFun& a, const std::vector<RatFun>& args);

/// Rebuilds a as a subtraction-free expression tree in variables t_1..t_nvars.
/// Succeeds iff every coefficient of the reduced numerator and denominator is
/// positive; otherwise throws NotSubtractionFree.
SFExpr rf_to_sf(const RatFun& a);

} // namespace lift
