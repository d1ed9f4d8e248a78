#include "lift/tropical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace lift {

namespace {

SFExpr make_sf(SFOp op, SFExpr l, SFExpr r) {
    auto n = std::make_shared<SFNode>();
    n->op = op;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

} // namespace

SFExpr sf_var(int i) {
    if (i < 1) throw ValidationFailed("variable index must be >= 1");
    auto n = std::make_shared<SFNode>();
    n->op = SFOp::Var;
    n->var = i;
    return n;
}

SFExpr sf_const(const BigRat& v) {
    if (v <= 0) throw ValidationFailed("constants must be positive");
    auto n = std::make_shared<SFNode>();
    n->op = SFOp::Const;
    n->value = v;
    return n;
}

SFExpr sf_add(SFExpr a, SFExpr b) { return make_sf(SFOp::Add, std::move(a), std::move(b)); }
SFExpr sf_mul(SFExpr a, SFExpr b) { return make_sf(SFOp::Mul, std::move(a), std::move(b)); }
SFExpr sf_div(SFExpr a, SFExpr b) { return make_sf(SFOp::Div, std::move(a), std::move(b)); }

SFExpr sf_pow(SFExpr a, int k) {
    if (k < 1) throw ValidationFailed("exponent must be >= 1");
    SFExpr r = a;
    for (int t = 1; t < k; ++t) r = sf_mul(r, a);
    return r;
}

int sf_num_vars(const SFExpr& e) {
    if (!e) return 0;
    int m = e->op == SFOp::Var ? e->var : 0;
    return std::max({m, sf_num_vars(e->left), sf_num_vars(e->right)});
}

BigRat sf_evaluate(const SFExpr& e, const std::vector<BigRat>& t) {
    switch (e->op) {
        case SFOp::Var:
            if (e->var > (int)t.size()) throw DimensionMismatch("too few arguments");
            return t[e->var - 1];
        case SFOp::Const: return e->value;
        case SFOp::Add: return sf_evaluate(e->left, t) + sf_evaluate(e->right, t);
        case SFOp::Mul: return sf_evaluate(e->left, t) * sf_evaluate(e->right, t);
        case SFOp::Div: return sf_evaluate(e->left, t) / sf_evaluate(e->right, t);
    }
    throw Error("bad node");
}

std::string sf_to_string(const SFExpr& e) {
    std::ostringstream os;
    switch (e->op) {
        case SFOp::Var: os << "t" << e->var; break;
        case SFOp::Const: os << e->value; break;
        case SFOp::Add:
            os << "(" << sf_to_string(e->left) << " + " << sf_to_string(e->right) << ")";
            break;
        case SFOp::Mul:
            os << "(" << sf_to_string(e->left) << " * " << sf_to_string(e->right) << ")";
            break;
        case SFOp::Div:
            os << "(" << sf_to_string(e->left) << " / " << sf_to_string(e->right) << ")";
            break;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ValidationFailed("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    SFExpr expr() {
        SFExpr e = term();
        for (;;) {
            if (eat('+'))
                e = sf_add(e, term());
            else
                return e;
        }
    }
    SFExpr term() {
        SFExpr e = factor();
        for (;;) {
            if (eat('*'))
                e = sf_mul(e, factor());
            else if (eat('/'))
                e = sf_div(e, factor());
            else
                return e;
        }
    }
    SFExpr factor() {
        SFExpr base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected exponent");
            base = sf_pow(base, std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }
    SFExpr atom() {
        skip();
        if (eat('(')) {
            SFExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos < s.size() && s[pos] == 't') {
            std::size_t start = ++pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected variable index");
            return sf_var(std::stoi(s.substr(start, pos - start)));
        }
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            return sf_const(BigRat(s.substr(start, pos - start)));
        }
        fail("expected atom");
    }
};

} // namespace

SFExpr sf_parse(const std::string& text) {
    Parser p{text};
    SFExpr e = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

namespace {

PLExpr make_pl(PLOp op, PLExpr l, PLExpr r) {
    auto n = std::make_shared<PLNode>();
    n->op = op;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

} // namespace

PLExpr pl_proj(int i) {
    if (i < 1) throw ValidationFailed("projection index must be >= 1");
    auto n = std::make_shared<PLNode>();
    n->op = PLOp::Proj;
    n->var = i;
    return n;
}

PLExpr pl_zero() {
    auto n = std::make_shared<PLNode>();
    n->op = PLOp::Zero;
    return n;
}

PLExpr pl_min(PLExpr a, PLExpr b) { return make_pl(PLOp::Min, std::move(a), std::move(b)); }
PLExpr pl_plus(PLExpr a, PLExpr b) { return make_pl(PLOp::Plus, std::move(a), std::move(b)); }
PLExpr pl_minus(PLExpr a, PLExpr b) { return make_pl(PLOp::Minus, std::move(a), std::move(b)); }

int pl_num_vars(const PLExpr& f) {
    if (!f) return 0;
    int m = f->op == PLOp::Proj ? f->var : 0;
    return std::max({m, pl_num_vars(f->left), pl_num_vars(f->right)});
}

BigInt pl_evaluate(const PLExpr& f, const IVec& t) {
    switch (f->op) {
        case PLOp::Proj:
            if (f->var > (int)t.size()) throw DimensionMismatch("too few arguments");
            return t[f->var - 1];
        case PLOp::Zero: return 0;
        case PLOp::Min: return std::min(pl_evaluate(f->left, t), pl_evaluate(f->right, t));
        case PLOp::Plus: return pl_evaluate(f->left, t) + pl_evaluate(f->right, t);
        case PLOp::Minus: return pl_evaluate(f->left, t) - pl_evaluate(f->right, t);
    }
    throw Error("bad node");
}

namespace {

nlohmann::json pl_json(const PLExpr& f) {
    switch (f->op) {
        case PLOp::Proj: return {{"op", "proj"}, {"index", f->var}};
        case PLOp::Zero: return {{"op", "zero"}};
        case PLOp::Min: return {{"op", "min"}, {"left", pl_json(f->left)}, {"right", pl_json(f->right)}};
        case PLOp::Plus: return {{"op", "plus"}, {"left", pl_json(f->left)}, {"right", pl_json(f->right)}};
        case PLOp::Minus: return {{"op", "minus"}, {"left", pl_json(f->left)}, {"right", pl_json(f->right)}};
    }
    throw Error("bad node");
}

} // namespace

std::string pl_to_json(const PLExpr& f) { return pl_json(f).dump(); }

PLExpr tropicalize(const SFExpr& e) {
    switch (e->op) {
        case SFOp::Var: return pl_proj(e->var);
        case SFOp::Const: return pl_zero();
        case SFOp::Add: return pl_min(tropicalize(e->left), tropicalize(e->right));
        case SFOp::Mul: return pl_plus(tropicalize(e->left), tropicalize(e->right));
        case SFOp::Div: return pl_minus(tropicalize(e->left), tropicalize(e->right));
    }
    throw Error("bad node");
}

BoxCheck pl_equal_on_box(const PLExpr& f, const PLExpr& g, long long radius) {
    int n = std::max(pl_num_vars(f), pl_num_vars(g));
    IVec t(n, -radius);
    for (;;) {
        if (pl_evaluate(f, t) != pl_evaluate(g, t)) return {false, t};
        int k = 0;
        while (k < n && t[k] == radius) t[k++] = -radius;
        if (k == n) break;
        ++t[k];
    }
    return {true, {}};
}

} // namespace lift
