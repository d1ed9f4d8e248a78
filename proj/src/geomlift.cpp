#include "lift/geomlift.hpp"

#include <algorithm>
#include <climits>

namespace lift {

RMat rmat_identity(int dim, int nvars) {
    RMat m(dim, std::vector<RatFun>(dim, RatFun::constant(nvars, 0)));
    for (int i = 0; i < dim; ++i) m[i][i] = RatFun::constant(nvars, 1);
    return m;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
    int n = (int)a.size(), p = (int)b[0].size(), k = (int)b.size();
    int nvars = a[0][0].num.nvars;
    RMat r(n, std::vector<RatFun>(p, RatFun::constant(nvars, 0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < p; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] = rf_add(r[i][j], rf_mul(a[i][t], b[t][j]));
            }
        }
    return r;
}

RMat rmat_transpose(const RMat& a) {
    int n = (int)a.size();
    RMat r(n, std::vector<RatFun>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = a[j][i];
    return r;
}

RatFun rmat_det(const RMat& a) {
    int n = (int)a.size();
    if (n == 1) return a[0][0];
    int nvars = a[0][0].num.nvars;
    RatFun det = RatFun::constant(nvars, 0);
    for (int j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        RMat sub(n - 1, std::vector<RatFun>(n - 1));
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != j) sub[r - 1][cc++] = a[r][c];
        RatFun term = rf_mul(a[0][j], rmat_det(sub));
        det = (j % 2 == 0) ? rf_add(det, term) : rf_sub(det, term);
    }
    return det;
}

RMat rmat_inverse(const RMat& a) {
    int n = (int)a.size();
    RatFun det = rmat_det(a);
    if (det.is_zero()) throw Error("singular matrix");
    RMat inv(n, std::vector<RatFun>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RMat sub(n - 1, std::vector<RatFun>(n - 1));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c)
                    if (c != j) sub[rr][cc++] = a[r][c];
                ++rr;
            }
            RatFun cof = (n == 1) ? RatFun::constant(a[0][0].num.nvars, 1) : rmat_det(sub);
            if ((i + j) % 2 == 1) cof = rf_neg(cof);
            inv[j][i] = rf_div(cof, det);
        }
    return inv;
}

bool rmat_equal(const RMat& a, const RMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

namespace {

IMat imat_mul_raw(const IMat& a, const IMat& b) { return mat_mul(a, b); }

void check_nilpotent(const IMat& m, const char* what) {
    IMat sq = imat_mul_raw(m, m);
    for (const auto& row : sq)
        for (auto v : row)
            if (v != 0) throw Error(std::string(what) + " does not square to zero");
}

} // namespace

GenSet sl_gens(int n) {
    GenSet g;
    g.cartan = cartan_preset("A" + std::to_string(n));
    g.dim = n + 1;
    for (int i = 0; i < n; ++i) {
        IMat ei(g.dim, IVec(g.dim, 0)), fi(g.dim, IVec(g.dim, 0));
        ei[i][i + 1] = 1;
        fi[i + 1][i] = 1;
        g.e.push_back(ei);
        g.f.push_back(fi);
        IVec hi(g.dim, 0);
        hi[i] = 1;
        hi[i + 1] = -1;
        g.h.push_back(hi);
    }
    return g;
}

GenSet sp4_gens() {
    GenSet g;
    g.cartan = validate_cartan({{2, -2}, {-1, 2}});
    g.dim = 4;
    auto E = [](int r, int c) {
        IMat m(4, IVec(4, 0));
        m[r][c] = 1;
        return m;
    };
    auto add = [](IMat a, const IMat& b, long long s) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a[i][j] += s * b[i][j];
        return a;
    };
    g.e = {add(E(0, 1), E(2, 3), -1), E(1, 2)};
    g.f = {add(E(1, 0), E(3, 2), -1), E(2, 1)};
    g.h = {{1, -1, 1, -1}, {0, 1, -1, 0}};
    for (const auto& m : g.e) check_nilpotent(m, "raising generator");
    for (const auto& m : g.f) check_nilpotent(m, "lowering generator");
    return g;
}

RMat gen_x(const GenSet& g, int i, const RatFun& t) {
    int nvars = t.num.nvars;
    RMat m = rmat_identity(g.dim, nvars);
    const IMat& e = g.e[i - 1];
    for (int r = 0; r < g.dim; ++r)
        for (int c = 0; c < g.dim; ++c)
            if (e[r][c] != 0)
                m[r][c] = rf_add(m[r][c], rf_mul(RatFun::constant(nvars, e[r][c]), t));
    return m;
}

RMat gen_y(const GenSet& g, int i, const RatFun& t) {
    int nvars = t.num.nvars;
    RMat m = rmat_identity(g.dim, nvars);
    const IMat& f = g.f[i - 1];
    for (int r = 0; r < g.dim; ++r)
        for (int c = 0; c < g.dim; ++c)
            if (f[r][c] != 0)
                m[r][c] = rf_add(m[r][c], rf_mul(RatFun::constant(nvars, f[r][c]), t));
    return m;
}

RMat gen_torus(const GenSet& g, int i, const RatFun& t, int power_sign) {
    int nvars = t.num.nvars;
    RMat m = rmat_identity(g.dim, nvars);
    for (int r = 0; r < g.dim; ++r)
        m[r][r] = rf_pow(t, power_sign * (int)g.h[i - 1][r]);
    return m;
}

RMat x_word(const GenSet& g, const std::vector<int>& word, int nvars,
            const std::vector<int>& var_of) {
    RMat m = rmat_identity(g.dim, nvars);
    for (std::size_t k = 0; k < word.size(); ++k)
        m = rmat_mul(m, gen_x(g, word[k], RatFun::variable(nvars, var_of[k])));
    return m;
}

RMat x_neg_word(const GenSet& g, const std::vector<int>& word, int nvars,
                const std::vector<int>& var_of) {
    RMat m = rmat_identity(g.dim, nvars);
    for (std::size_t k = 0; k < word.size(); ++k) {
        RatFun t = RatFun::variable(nvars, var_of[k]);
        m = rmat_mul(m, gen_y(g, word[k], t));
        m = rmat_mul(m, gen_torus(g, word[k], t, -1));
    }
    return m;
}

GroupElementA build_word_matrix(const GenSet& g, const std::vector<int>& word, bool negative) {
    int n = (int)word.size();
    std::vector<int> vars(n);
    for (int k = 0; k < n; ++k) vars[k] = k;
    return GroupElementA{g.dim, negative ? x_neg_word(g, word, n, vars)
                                         : x_word(g, word, n, vars)};
}

GaussTriple gauss_decompose(const GroupElementA& x) {
    int n = x.size;
    int nvars = x.m[0][0].num.nvars;
    RMat a = x.m;
    RMat lower = rmat_identity(n, nvars);
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) throw NotInG0("vanishing leading principal minor");
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            RatFun f = rf_div(a[i][k], a[k][k]);
            lower[i][k] = f;
            for (int j = k; j < n; ++j) a[i][j] = rf_sub(a[i][j], rf_mul(f, a[k][j]));
        }
    }
    RMat torus = rmat_identity(n, nvars);
    RMat upper = rmat_identity(n, nvars);
    for (int k = 0; k < n; ++k) {
        torus[k][k] = a[k][k];
        for (int j = k + 1; j < n; ++j) upper[k][j] = rf_div(a[k][j], a[k][k]);
    }
    // lower here already has unit diagonal and carries no torus part
    return GaussTriple{{n, lower}, {n, torus}, {n, upper}};
}

namespace {

Poly poly_embed(const Poly& p, int nvars) {
    Poly r = poly_zero(nvars);
    for (const auto& [e, c] : p.terms) {
        std::vector<int> e2(nvars, 0);
        std::copy(e.begin(), e.end(), e2.begin());
        r.terms[e2] = c;
    }
    return r;
}

RatFun rf_embed(const RatFun& a, int nvars) {
    return RatFun{poly_embed(a.num, nvars), poly_embed(a.den, nvars)};
}

Poly poly_project(const Poly& p, int nvars) {
    Poly r = poly_zero(nvars);
    for (const auto& [e, c] : p.terms) {
        for (int i = nvars; i < (int)e.size(); ++i)
            if (e[i] != 0) throw Error("projection drops a live variable");
        std::vector<int> e2(e.begin(), e.begin() + nvars);
        r.terms[e2] = c;
    }
    return r;
}

RatFun rf_project(const RatFun& a, int nvars) {
    return RatFun{poly_project(a.num, nvars), poly_project(a.den, nvars)};
}

RMat rmat_embed(const RMat& a, int nvars) {
    RMat r = a;
    for (auto& row : r)
        for (auto& x : row) x = rf_embed(x, nvars);
    return r;
}

} // namespace

RMat w0bar(const GenSet& g) {
    auto [w0, word] = longest_element(g.cartan);
    RMat m = rmat_identity(g.dim, 0);
    for (int i : word.letters) {
        RatFun one = RatFun::constant(0, 1);
        RatFun mone = RatFun::constant(0, -1);
        RMat sbar = rmat_mul(rmat_mul(gen_x(g, i, mone), gen_y(g, i, one)), gen_x(g, i, mone));
        m = rmat_mul(m, sbar);
    }
    return m;
}

namespace {

RMat iota(const RMat& x) {
    int n = (int)x.size();
    RMat inv = rmat_inverse(x);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i + j) % 2 == 1) inv[i][j] = rf_neg(inv[i][j]);
    return inv;
}

int rmat_nvars(const RMat& a) { return a[0][0].num.nvars; }

} // namespace

GroupElementA zeta_map(const GenSet& g, const GroupElementA& x) {
    RMat it = rmat_transpose(iota(x.m));
    return gauss_decompose(GroupElementA{x.size, it}).upper;
}

GroupElementA zeta_inverse(const GenSet& g, const GroupElementA& x) {
    RMat w0m = rmat_embed(w0bar(g), rmat_nvars(x.m));
    RMat wxt = rmat_mul(w0m, rmat_transpose(x.m));
    RMat torus = gauss_decompose(GroupElementA{x.size, wxt}).torus.m;
    return GroupElementA{x.size, rmat_mul(torus, rmat_transpose(iota(x.m)))};
}

GroupElementA eta_w0e(const GenSet& g, const GroupElementA& x) {
    RMat w0m = rmat_embed(w0bar(g), rmat_nvars(x.m));
    RMat m = rmat_inverse(rmat_mul(w0m, rmat_transpose(x.m)));
    return gauss_decompose(GroupElementA{x.size, m}).upper;
}

GroupElementA eta_e_w0(const GenSet& g, const GroupElementA& x) {
    RMat w0inv = rmat_transpose(rmat_embed(w0bar(g), rmat_nvars(x.m)));
    RMat m = rmat_mul(w0inv, rmat_transpose(x.m));
    GaussTriple t = gauss_decompose(GroupElementA{x.size, m});
    // factor order fixed by the inverse property against eta_w0e
    return GroupElementA{x.size, rmat_inverse(rmat_mul(t.lower.m, t.torus.m))};
}

GroupElementA xi_map(const GenSet& g, const GroupElementA& x) {
    RMat w0m = rmat_embed(w0bar(g), rmat_nvars(x.m));
    RMat m = rmat_mul(rmat_mul(w0m, iota(rmat_inverse(x.m))), rmat_transpose(w0m));
    return gauss_decompose(GroupElementA{x.size, m}).upper;
}

std::vector<RatFun> solve_word_params(const GenSet& g, const std::vector<int>& word,
                                      bool negative, const RMat& target, int nvars) {
    int N = (int)word.size();
    int C = nvars + N;
    std::vector<int> uvars(N);
    for (int k = 0; k < N; ++k) uvars[k] = nvars + k;
    RMat P = negative ? x_neg_word(g, word, C, uvars) : x_word(g, word, C, uvars);
    RMat T = rmat_embed(target, C);

    std::vector<std::optional<RatFun>> solved(N);
    auto subs_args = [&] {
        std::vector<RatFun> args;
        for (int i = 0; i < nvars; ++i) args.push_back(RatFun::variable(C, i));
        for (int k = 0; k < N; ++k)
            args.push_back(solved[k] ? *solved[k] : RatFun::variable(C, nvars + k));
        return args;
    };

    int remaining = N;
    while (remaining > 0) {
        auto args = subs_args();
        RMat Ps(g.dim, std::vector<RatFun>(g.dim));
        for (int r = 0; r < g.dim; ++r)
            for (int c = 0; c < g.dim; ++c) Ps[r][c] = rf_compose(P[r][c], args);

        // candidate equations: single entries, then cross-multiplied ratios
        std::vector<RatFun> candidates;
        for (int r = 0; r < g.dim; ++r)
            for (int c = 0; c < g.dim; ++c) candidates.push_back(rf_sub(Ps[r][c], T[r][c]));
        for (int r1 = 0; r1 < g.dim; ++r1)
            for (int c1 = 0; c1 < g.dim; ++c1)
                for (int r2 = 0; r2 < g.dim; ++r2)
                    for (int c2 = 0; c2 < g.dim; ++c2) {
                        if (r1 == r2 && c1 == c2) continue;
                        if (T[r1][c1].is_zero() || T[r2][c2].is_zero()) continue;
                        candidates.push_back(rf_sub(rf_mul(Ps[r1][c1], T[r2][c2]),
                                                    rf_mul(Ps[r2][c2], T[r1][c1])));
                    }

        bool progress = false;
        for (const auto& eq : candidates) {
            if (eq.is_zero()) continue;
            // strip the common monomial factor; only generic solutions matter
            Poly num = eq.num;
            std::vector<int> mono(C, INT_MAX);
            for (const auto& [e, coef] : num.terms)
                for (int i = 0; i < C; ++i) mono[i] = std::min(mono[i], e[i]);
            if (std::any_of(mono.begin(), mono.end(), [](int x) { return x > 0; })) {
                Poly shifted = poly_zero(C);
                for (const auto& [e, coef] : num.terms) {
                    auto e2 = e;
                    for (int i = 0; i < C; ++i) e2[i] -= mono[i];
                    shifted.terms[e2] = coef;
                }
                num = shifted;
            }
            int live = -1;
            bool usable = true;
            for (int k = 0; k < N && usable; ++k) {
                if (solved[k]) continue;
                int d = num.degree(nvars + k);
                if (d == 0) continue;
                if (d > 1 || live >= 0)
                    usable = false;
                else
                    live = k;
            }
            if (!usable || live < 0) continue;
            auto c0 = poly_zero(C), c1 = poly_zero(C);
            for (const auto& [e, coef] : num.terms) {
                auto e2 = e;
                int d = e2[nvars + live];
                e2[nvars + live] = 0;
                (d == 0 ? c0 : c1).terms[e2] = coef;
            }
            solved[live] = rf_normalize(poly_neg(c0), c1);
            --remaining;
            progress = true;
            break;
        }
        if (!progress) throw Error("parameter elimination is stuck");
    }

    // full-matrix verification, then drop the auxiliary variables
    auto args = subs_args();
    for (int r = 0; r < g.dim; ++r)
        for (int c = 0; c < g.dim; ++c)
            if (!(rf_compose(P[r][c], args) == T[r][c]))
                throw ValidationFailed("factorization verification failed");
    std::vector<RatFun> out;
    for (int k = 0; k < N; ++k) out.push_back(rf_project(*solved[k], nvars));
    return out;
}

std::vector<RatFun> transition_components(const GenSet& g, const std::vector<int>& from,
                                          const std::vector<int>& to, bool negative) {
    GroupElementA x = build_word_matrix(g, from, negative);
    return solve_word_params(g, to, negative, x.m, (int)from.size());
}

std::vector<RatFun> zeta_components(const GenSet& g, const std::vector<int>& from,
                                    const std::vector<int>& to) {
    int N = (int)from.size();
    std::vector<int> vars(N);
    for (int k = 0; k < N; ++k) vars[k] = k;
    // (y_i(t) t^{-a^vee})^{iota T} = x_i(t) t^{+a^vee}, applied factor-wise
    RMat m = rmat_identity(g.dim, N);
    for (int k = 0; k < N; ++k) {
        RatFun t = RatFun::variable(N, k);
        m = rmat_mul(m, gen_x(g, from[k], t));
        m = rmat_mul(m, gen_torus(g, from[k], t, +1));
    }
    RMat upper = gauss_decompose(GroupElementA{g.dim, m}).upper.m;
    return solve_word_params(g, to, false, upper, N);
}

std::vector<RatFun> eta_w0e_components(const GenSet& g, const std::vector<int>& from,
                                       const std::vector<int>& to) {
    int N = (int)from.size();
    // (x_{-i}(t)^T)^{-1} = prod_k x_{i_k}(-t_k) t_k^{+a^vee}
    RMat m = rmat_identity(g.dim, N);
    for (int k = 0; k < N; ++k) {
        RatFun t = RatFun::variable(N, k);
        m = rmat_mul(m, gen_x(g, from[k], rf_neg(t)));
        m = rmat_mul(m, gen_torus(g, from[k], t, +1));
    }
    m = rmat_mul(m, rmat_transpose(rmat_embed(w0bar(g), N)));
    RMat upper = gauss_decompose(GroupElementA{g.dim, m}).upper.m;
    return solve_word_params(g, to, false, upper, N);
}

std::vector<RatFun> xi_components(const GenSet& g, const std::vector<int>& from,
                                  const std::vector<int>& to) {
    auto star = star_involution(g.cartan);
    std::vector<int> starred;
    for (int i : from) starred.push_back(star[i - 1]);
    return zeta_components(g, starred, to);
}

BridgeReport tropical_bridge(const std::vector<RatFun>& symbolic,
                             const std::vector<PLExpr>& expected, long long radius) {
    if (symbolic.size() != expected.size())
        throw DimensionMismatch("component count mismatch");
    BridgeReport rep;
    rep.radius = radius;
    for (std::size_t k = 0; k < symbolic.size(); ++k) {
        PLExpr got = tropicalize(rf_to_sf(symbolic[k]));
        BoxCheck chk = pl_equal_on_box(got, expected[k], radius);
        rep.components.push_back({(int)k, chk.equal, chk.witness});
        if (!chk.equal) rep.pass = false;
    }
    return rep;
}

namespace {

std::vector<PLExpr> tropicalize_all(const std::vector<RatFun>& fs) {
    std::vector<PLExpr> out;
    for (const auto& f : fs) out.push_back(tropicalize(rf_to_sf(f)));
    return out;
}

IVec apply_pl_vec(const std::vector<PLExpr>& move, const IVec& t) {
    IVec out;
    for (const auto& f : move) out.push_back((long long)pl_evaluate(f, t));
    return out;
}

void check_involution(const std::vector<PLExpr>& fwd, const std::vector<PLExpr>& bwd,
                      long long radius) {
    int n = (int)fwd.size();
    IVec t(n, 0);
    for (;;) {
        if (apply_pl_vec(bwd, apply_pl_vec(fwd, t)) != t)
            throw ValidationFailed("derived local move is not an involution up to reversal");
        int k = 0;
        while (k < n && t[k] == radius) t[k++] = 0;
        if (k == n) break;
        ++t[k];
    }
}

} // namespace

Rank2MoveTable derive_rank2_moves(Rank2Type t) {
    if (t == Rank2Type::A1xA1 || t == Rank2Type::A2) return builtin_move_table(t);
    if (t == Rank2Type::G2)
        throw UnsupportedLocalType("no dual-group realization wired up for G2");

    GenSet g = sp4_gens();
    std::vector<int> w1 = {1, 2, 1, 2}, w2 = {2, 1, 2, 1};
    Rank2MoveTable table;
    table.local_type = Rank2Type::B2;
    table.provenance = "derived";
    table.lusztig_from_1 = tropicalize_all(transition_components(g, w1, w2, false));
    table.lusztig_from_2 = tropicalize_all(transition_components(g, w2, w1, false));
    table.string_from_1 = tropicalize_all(transition_components(g, w1, w2, true));
    table.string_from_2 = tropicalize_all(transition_components(g, w2, w1, true));

    check_involution(table.lusztig_from_1, table.lusztig_from_2, 4);
    check_involution(table.lusztig_from_2, table.lusztig_from_1, 4);
    check_involution(table.string_from_1, table.string_from_2, 4);
    check_involution(table.string_from_2, table.string_from_1, 4);
    return table;
}

} // namespace lift
