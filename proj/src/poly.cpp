#include "lift/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lift {

bool GrlexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

bool Poly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 &&
           std::all_of(terms.begin()->first.begin(), terms.begin()->first.end(),
                       [](int e) { return e == 0; });
}

BigInt Poly::constant_value() const {
    if (terms.empty()) return 0;
    if (!is_constant()) throw Error("not a constant polynomial");
    return terms.begin()->second;
}

int Poly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return d;
}

Poly poly_zero(int nvars) { return Poly{nvars, {}}; }

Poly poly_const(int nvars, const BigInt& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

Poly poly_var(int nvars, int var) {
    Poly p{nvars, {}};
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    p.terms[e] = 1;
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("polynomial variable counts differ");
    Poly r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("polynomial variable counts differ");
    Poly r = poly_zero(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                BigInt c = ca * cb;
                if (c != 0) r.terms[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

Poly poly_pow(const Poly& a, int k) {
    Poly r = poly_const(a.nvars, 1);
    for (int t = 0; t < k; ++t) r = poly_mul(r, a);
    return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    Poly rem = a;
    Poly quot = poly_zero(a.nvars);
    const auto& [eb, cb] = *b.terms.begin();
    while (!rem.is_zero()) {
        const auto& [er, cr] = *rem.terms.begin();
        std::vector<int> e(a.nvars);
        for (int i = 0; i < a.nvars; ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) throw Error("inexact polynomial division");
        }
        if (cr % cb != 0) throw Error("inexact polynomial division");
        Poly t = poly_zero(a.nvars);
        t.terms[e] = cr / cb;
        quot = poly_add(quot, t);
        rem = poly_sub(rem, poly_mul(t, b));
    }
    return quot;
}

BigInt poly_content(const Poly& a) {
    BigInt g = 0;
    for (const auto& [e, c] : a.terms) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? -g : g;
}

namespace {

// Coefficients of a viewed as univariate in `var`, indexed by degree.
std::vector<Poly> coeffs_in(const Poly& a, int var) {
    int d = a.degree(var);
    std::vector<Poly> out(d + 1, poly_zero(a.nvars));
    for (const auto& [e, c] : a.terms) {
        auto e2 = e;
        int k = e2[var];
        e2[var] = 0;
        out[k].terms[e2] = c;
    }
    return out;
}

Poly from_coeffs(const std::vector<Poly>& cs, int var, int nvars) {
    Poly r = poly_zero(nvars);
    for (int k = 0; k < (int)cs.size(); ++k) {
        Poly xk = poly_pow(poly_var(nvars, var), k);
        r = poly_add(r, poly_mul(cs[k], xk));
    }
    return r;
}

Poly poly_content_wrt(const Poly& a, int var) {
    Poly g = poly_zero(a.nvars);
    for (const auto& c : coeffs_in(a, var))
        if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
}

// prem(a, b) in `var`: multiply a by lc(b)^(da-db+1) and reduce.
Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
    auto ca = coeffs_in(a, var);
    auto cb = coeffs_in(b, var);
    int db = (int)cb.size() - 1;
    const Poly& lb = cb.back();
    std::vector<Poly> r = ca;
    while ((int)r.size() - 1 >= db && !(r.size() == 1 && r[0].is_zero())) {
        int dr = (int)r.size() - 1;
        Poly lr = r.back();
        for (auto& c : r) c = poly_mul(c, lb);
        for (int k = 0; k <= db; ++k)
            r[dr - db + k] = poly_sub(r[dr - db + k], poly_mul(lr, cb[k]));
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
        if (r.size() == 1 && r[0].is_zero()) break;
        if ((int)r.size() - 1 == dr) throw Error("pseudo-remainder failed to reduce");
    }
    return from_coeffs(r, var, a.nvars);
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) {
        Poly r = b;
        if (!r.terms.empty() && r.terms.begin()->second < 0) r = poly_neg(r);
        return r;
    }
    if (b.is_zero()) return poly_gcd(b, a);
    int var = -1;
    for (int i = 0; i < a.nvars; ++i)
        if (a.degree(i) > 0 || b.degree(i) > 0) {
            var = i;
            break;
        }
    if (var < 0) {
        BigInt g = boost::multiprecision::gcd(a.constant_value(), b.constant_value());
        return poly_const(a.nvars, g < 0 ? -g : g);
    }
    Poly ca = poly_content_wrt(a, var);
    Poly cb = poly_content_wrt(b, var);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = poly_divexact(a, ca);
    Poly pb = poly_divexact(b, cb);
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    // primitive PRS
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = poly_divexact(r, poly_content_wrt(r, var));
            BigInt ct = poly_content(pb);
            if (ct > 1) pb = poly_divexact(pb, poly_const(pb.nvars, ct));
        }
    }
    Poly g = poly_mul(cg, poly_divexact(pa, poly_content_wrt(pa, var)));
    if (!g.terms.empty() && g.terms.begin()->second < 0) g = poly_neg(g);
    return g;
}

BigRat poly_eval(const Poly& a, const std::vector<BigRat>& t) {
    if ((int)t.size() != a.nvars) throw DimensionMismatch("evaluation arity mismatch");
    BigRat s = 0;
    for (const auto& [e, c] : a.terms) {
        BigRat m = BigRat(c);
        for (int i = 0; i < a.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) m *= t[i];
        s += m;
    }
    return s;
}

std::string poly_to_string(const Poly& a, const std::vector<std::string>& names) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        BigInt coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (coeff != 1 || !any_var) os << coeff;
        bool star = coeff != 1;
        for (int i = 0; i < a.nvars; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            if (i < (int)names.size())
                os << names[i];
            else
                os << "t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

RatFun rf_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw Error("zero denominator");
    if (num.is_zero()) return RatFun{poly_zero(num.nvars), poly_const(num.nvars, 1)};
    Poly g = poly_gcd(num, den);
    if (!g.is_constant() || g.constant_value() != 1) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    if (den.terms.begin()->second < 0) {
        num = poly_neg(num);
        den = poly_neg(den);
    }
    return RatFun{std::move(num), std::move(den)};
}

RatFun RatFun::from_poly(const Poly& p) {
    return RatFun{p, poly_const(p.nvars, 1)};
}

RatFun RatFun::constant(int nvars, const BigRat& c) {
    return rf_normalize(poly_const(nvars, numerator(c)), poly_const(nvars, denominator(c)));
}

RatFun RatFun::variable(int nvars, int var) { return from_poly(poly_var(nvars, var)); }

RatFun rf_add(const RatFun& a, const RatFun& b) {
    return rf_normalize(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                        poly_mul(a.den, b.den));
}

RatFun rf_neg(const RatFun& a) { return RatFun{poly_neg(a.num), a.den}; }

RatFun rf_sub(const RatFun& a, const RatFun& b) { return rf_add(a, rf_neg(b)); }

RatFun rf_mul(const RatFun& a, const RatFun& b) {
    return rf_normalize(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RatFun rf_div(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return rf_normalize(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}

RatFun rf_inv(const RatFun& a) {
    return rf_div(RatFun::constant(a.num.nvars, 1), a);
}

RatFun rf_pow(const RatFun& a, int k) {
    RatFun base = k < 0 ? rf_inv(a) : a;
    int n = k < 0 ? -k : k;
    RatFun r = RatFun::constant(a.num.nvars, 1);
    for (int t = 0; t < n; ++t) r = rf_mul(r, base);
    return r;
}

BigRat rf_eval(const RatFun& a, const std::vector<BigRat>& t) {
    return poly_eval(a.num, t) / poly_eval(a.den, t);
}

std::string rf_to_string(const RatFun& a, const std::vector<std::string>& names) {
    if (a.den.is_constant() && a.den.constant_value() == 1) return poly_to_string(a.num, names);
    return "(" + poly_to_string(a.num, names) + ")/(" + poly_to_string(a.den, names) + ")";
}

RatFun poly_compose(const Poly& p, const std::vector<RatFun>& args) {
    if ((int)args.size() != p.nvars) throw DimensionMismatch("composition arity mismatch");
    int m = args.empty() ? 0 : args[0].num.nvars;
    RatFun s = RatFun::constant(m, 0);
    for (const auto& [e, c] : p.terms) {
        RatFun t = RatFun::constant(m, BigRat(c));
        for (int i = 0; i < p.nvars; ++i)
            if (e[i] > 0) t = rf_mul(t, rf_pow(args[i], e[i]));
        s = rf_add(s, t);
    }
    return s;
}

RatFun rf_compose(const RatFun& a, const std::vector<RatFun>& args) {
    return rf_div(poly_compose(a.num, args), poly_compose(a.den, args));
}

namespace {

SFExpr poly_to_sf(const Poly& p) {
    SFExpr acc;
    for (const auto& [e, c] : p.terms) {
        if (c <= 0) throw NotSubtractionFree("negative coefficient in " + poly_to_string(p));
        SFExpr term;
        if (c != 1) term = sf_const(BigRat(c));
        for (int i = 0; i < p.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) {
                SFExpr v = sf_var(i + 1);
                term = term ? sf_mul(term, v) : v;
            }
        if (!term) term = sf_const(BigRat(1));
        acc = acc ? sf_add(acc, term) : term;
    }
    if (!acc) throw NotSubtractionFree("zero polynomial has no subtraction-free form");
    return acc;
}

} // namespace

SFExpr rf_to_sf(const RatFun& a) {
    SFExpr num = poly_to_sf(a.num);
    if (a.den.is_constant() && a.den.constant_value() == 1) return num;
    return sf_div(num, poly_to_sf(a.den));
}

} // namespace lift
