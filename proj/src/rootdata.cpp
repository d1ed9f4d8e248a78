#include "lift/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lift {

IMat identity_mat(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    int n = (int)a.size(), p = (int)b[0].size(), k = (int)b.size();
    IMat r(n, IVec(p, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

IVec mat_apply(const IMat& m, const IVec& v) {
    int n = (int)m.size();
    IVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < (int)v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

long long det_mat(const IMat& m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IMat sub(n - 1, IVec(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub[r - 1][cc++] = m[r][c];
        }
        long long s = (j % 2 == 0) ? 1 : -1;
        det += s * m[0][j] * det_mat(sub);
    }
    return det;
}

IMat adjugate_mat(const IMat& m) {
    int n = (int)m.size();
    IMat adj(n, IVec(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IMat sub(n - 1, IVec(n - 1));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            long long s = ((i + j) % 2 == 0) ? 1 : -1;
            adj[j][i] = s * det_mat(sub);
        }
    return adj;
}

IVec CartanData::alpha_weight(int i) const {
    IVec v(n);
    for (int k = 0; k < n; ++k) v[k] = a[k][i - 1];
    return v;
}

namespace {

// Orbit of the simple roots under the simple reflections, in simple-root
// coordinates; returns the positive half.
std::vector<IVec> enumerate_positive_roots(const IMat& a) {
    int n = (int)a.size();
    std::set<IVec> all;
    std::vector<IVec> queue;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IVec r = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long long p = 0; // <r, alpha_i^vee>
            for (int j = 0; j < n; ++j) p += a[i][j] * r[j];
            IVec s = r;
            s[i] -= p;
            if (all.insert(s).second) queue.push_back(s);
            if (all.size() > 4096)
                throw NotFiniteType("root system does not close up (not finite type)");
        }
    }
    std::vector<IVec> pos;
    for (const auto& r : all) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; });
        if (nonneg) pos.push_back(r);
    }
    return pos;
}

} // namespace

CartanData validate_cartan(const IMat& matrix) {
    int n = (int)matrix.size();
    if (n == 0) throw NotCartan("empty matrix");
    for (const auto& row : matrix)
        if ((int)row.size() != n) throw NotCartan("matrix not square");
    for (int i = 0; i < n; ++i) {
        if (matrix[i][i] != 2) throw NotCartan("diagonal entry != 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0) throw NotCartan("positive off-diagonal entry");
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                throw NotCartan("asymmetric zero pattern");
        }
    }
    // Minimal positive symmetrizers: propagate ratios along the Coxeter graph.
    // d_j / d_i = a_{ij} / a_{ji} on every edge.
    std::vector<std::pair<long long, long long>> dr(n, {0, 1}); // rational d_i
    for (int start = 0; start < n; ++start) {
        if (dr[start].first != 0) continue;
        dr[start] = {1, 1};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || matrix[i][j] == 0) continue;
                // d_i a_{ij} = d_j a_{ji}
                long long num = dr[i].first * matrix[i][j];
                long long den = dr[i].second * matrix[j][i];
                long long g = std::gcd(std::abs(num), std::abs(den));
                if (g) { num /= g; den /= g; }
                if (den < 0) { num = -num; den = -den; }
                if (dr[j].first == 0) {
                    dr[j] = {num, den};
                    stack.push_back(j);
                } else if (dr[j].first * den != num * dr[j].second) {
                    throw NotCartan("no symmetrizer exists");
                }
            }
        }
    }
    long long l = 1;
    for (auto& [num, den] : dr) l = std::lcm(l, den);
    IVec d(n);
    for (int i = 0; i < n; ++i) d[i] = dr[i].first * (l / dr[i].second);
    long long g = 0;
    for (auto x : d) g = std::gcd(g, x);
    for (auto& x : d) x /= g;
    for (auto x : d)
        if (x <= 0) throw NotCartan("nonpositive symmetrizer");
    // Finite type: the symmetrized matrix (d_i a_{ij}) is positive definite.
    IMat sym(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym[i][j] = d[i] * matrix[i][j];
    for (int k = 1; k <= n; ++k) {
        IMat lead(k, IVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = sym[i][j];
        if (det_mat(lead) <= 0)
            throw NotFiniteType("symmetrized Cartan matrix not positive definite");
    }

    CartanData c;
    c.n = n;
    c.a = matrix;
    c.d = d;
    c.adj = adjugate_mat(matrix);
    c.pos_roots = enumerate_positive_roots(matrix);
    c.num_pos_roots = (int)c.pos_roots.size();
    return c;
}

CartanData cartan_preset(const std::string& name) {
    auto make_A = [](int n) {
        IMat a(n, IVec(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9')
        return validate_cartan(make_A(name[1] - '0'));
    if (name == "B2") return validate_cartan({{2, -1}, {-2, 2}});
    if (name == "G2") return validate_cartan({{2, -1}, {-3, 2}});
    throw NotCartan("unknown preset: " + name);
}

WeylElement weyl_identity(const CartanData& c) { return {identity_mat(c.n), 0}; }

WeylElement simple_reflection(const CartanData& c, int i) {
    // s_i(lambda)_k = lambda_k - a_{ki} lambda_i in fundamental coordinates
    IMat m = identity_mat(c.n);
    for (int k = 0; k < c.n; ++k) m[k][i - 1] -= c.a[k][i - 1];
    return {m, 1};
}

bool sends_alpha_positive(const CartanData& c, const WeylElement& w, int i) {
    IVec wt = mat_apply(w.action, c.alpha_weight(i));
    IVec rc = mat_apply(c.adj, wt); // det(a) * root coordinates, det > 0
    for (auto x : rc)
        if (x != 0) return x > 0;
    throw Error("zero image of a simple root");
}

int weyl_length(const CartanData& c, const IMat& action) {
    // count positive roots sent to negative
    int len = 0;
    for (const auto& r : c.pos_roots) {
        // weight coordinates of the root, then image, then sign via adjugate
        IVec wt(c.n, 0);
        for (int k = 0; k < c.n; ++k)
            for (int j = 0; j < c.n; ++j) wt[k] += c.a[k][j] * r[j];
        IVec im = mat_apply(action, wt);
        IVec rc = mat_apply(c.adj, im);
        for (auto x : rc) {
            if (x != 0) {
                if (x < 0) ++len;
                break;
            }
        }
    }
    return len;
}

WeylElement weyl_mul(const CartanData& c, const WeylElement& u, const WeylElement& v) {
    IMat m = mat_mul(u.action, v.action);
    return {m, weyl_length(c, m)};
}

WeylElement weyl_from_word(const CartanData& c, const std::vector<int>& letters) {
    WeylElement w = weyl_identity(c);
    for (int i : letters) w = weyl_mul(c, w, simple_reflection(c, i));
    return w;
}

IVec weyl_apply(const WeylElement& w, const IVec& weight) {
    return mat_apply(w.action, weight);
}

bool is_reduced_word(const CartanData& c, const std::vector<int>& letters) {
    return weyl_from_word(c, letters).length == (int)letters.size();
}

std::pair<WeylElement, ReducedWord> longest_element(const CartanData& c) {
    WeylElement w = weyl_identity(c);
    std::vector<int> letters;
    for (;;) {
        int pick = 0;
        for (int i = 1; i <= c.n; ++i) {
            if (sends_alpha_positive(c, w, i)) {
                pick = i;
                break;
            }
        }
        if (pick == 0) break;
        w = weyl_mul(c, w, simple_reflection(c, pick));
        letters.push_back(pick);
    }
    return {w, ReducedWord{letters, w}};
}

std::vector<int> star_involution(const CartanData& c) {
    auto [w0, word] = longest_element(c);
    std::vector<int> star(c.n, 0);
    for (int i = 1; i <= c.n; ++i) {
        IVec im = mat_apply(w0.action, c.alpha_weight(i));
        for (int j = 1; j <= c.n; ++j) {
            IVec neg = c.alpha_weight(j);
            for (auto& x : neg) x = -x;
            if (im == neg) {
                star[i - 1] = j;
                break;
            }
        }
        if (star[i - 1] == 0) throw Error("star involution: w0(alpha_i) not -alpha_j");
    }
    return star;
}

int braid_order(const CartanData& c, int i, int j) {
    long long p = c.a[i - 1][j - 1] * c.a[j - 1][i - 1];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw NotFiniteType("rank-2 product out of range");
    }
}

Rank2Type rank2_type(const CartanData& c, int i, int j) {
    switch (braid_order(c, i, j)) {
        case 2: return Rank2Type::A1xA1;
        case 3: return Rank2Type::A2;
        case 4: return Rank2Type::B2;
        default: return Rank2Type::G2;
    }
}

int WordGraph::index_of(const std::vector<int>& word) const {
    for (int k = 0; k < (int)words.size(); ++k)
        if (words[k] == word) return k;
    return -1;
}

namespace {

void enumerate_words(const CartanData& c, const WeylElement& w,
                     std::map<IMat, std::vector<std::vector<int>>>& memo,
                     std::size_t guard) {
    if (memo.count(w.action)) return;
    if (w.length == 0) {
        memo[w.action] = {{}};
        return;
    }
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= c.n; ++i) {
        if (sends_alpha_positive(c, w, i)) continue; // need a right descent
        WeylElement shorter = weyl_mul(c, w, simple_reflection(c, i));
        enumerate_words(c, shorter, memo, guard);
        for (auto word : memo[shorter.action]) {
            word.push_back(i);
            out.push_back(std::move(word));
            if (out.size() > guard) throw TooManyWords("reduced word guard exceeded");
        }
    }
    memo[w.action] = std::move(out);
}

} // namespace

WordGraph all_reduced_words(const CartanData& c, const WeylElement& w, std::size_t guard) {
    std::map<IMat, std::vector<std::vector<int>>> memo;
    enumerate_words(c, w, memo, guard);
    WordGraph g;
    g.words = memo[w.action];
    std::sort(g.words.begin(), g.words.end());
    g.edges.resize(g.words.size());
    for (int k = 0; k < (int)g.words.size(); ++k) {
        const auto& word = g.words[k];
        for (int p = 0; p + 1 < (int)word.size(); ++p) {
            int i = word[p];
            int j = word[p + 1];
            if (i == j) continue;
            int m = braid_order(c, i, j);
            if (p + m > (int)word.size()) continue;
            bool alternating = true;
            for (int t = 0; t < m; ++t)
                if (word[p + t] != (t % 2 == 0 ? i : j)) alternating = false;
            if (!alternating) continue;
            auto moved = word;
            for (int t = 0; t < m; ++t) moved[p + t] = (t % 2 == 0 ? j : i);
            int to = g.index_of(moved);
            if (to >= 0) g.edges[k].push_back({to, p, rank2_type(c, i, j)});
        }
    }
    return g;
}

ReducedWord reduced_word_of(const CartanData& c, const WeylElement& w) {
    std::vector<int> letters;
    WeylElement cur = w;
    while (cur.length > 0) {
        for (int i = 1; i <= c.n; ++i) {
            // left descent: l(s_i cur) < l(cur) iff cur^{-1}(alpha_i) < 0;
            // equivalently s_i cur is shorter.
            WeylElement t = weyl_mul(c, simple_reflection(c, i), cur);
            if (t.length < cur.length) {
                letters.push_back(i);
                cur = t;
                break;
            }
        }
    }
    return {letters, w};
}

ReducedWord extend_adapted(const CartanData& c, const WeylElement& w) {
    ReducedWord prefix = reduced_word_of(c, w);
    std::vector<int> letters = prefix.letters;
    WeylElement cur = w;
    for (;;) {
        int pick = 0;
        for (int i = 1; i <= c.n; ++i) {
            if (sends_alpha_positive(c, cur, i)) {
                pick = i;
                break;
            }
        }
        if (pick == 0) break;
        cur = weyl_mul(c, cur, simple_reflection(c, pick));
        letters.push_back(pick);
    }
    return {letters, cur};
}

RootSequence positive_root_sequence(const CartanData& c, const ReducedWord& word) {
    int N = (int)word.letters.size();
    if (!is_reduced_word(c, word.letters) || N != c.num_pos_roots)
        throw PreconditionNotMet("word is not reduced for w0");
    RootSequence rs;
    rs.word = word;
    // running root/coroot coordinate images of s_{i1}...s_{i_{k-1}}
    for (int k = 0; k < N; ++k) {
        IVec beta(c.n, 0), covee(c.n, 0);
        beta[word.letters[k] - 1] = 1;
        covee[word.letters[k] - 1] = 1;
        for (int t = k - 1; t >= 0; --t) {
            int i = word.letters[t] - 1;
            long long pr = 0, pc = 0;
            for (int j = 0; j < c.n; ++j) pr += c.a[i][j] * beta[j];  // <beta, alpha_i^vee>
            for (int j = 0; j < c.n; ++j) pc += c.a[j][i] * covee[j]; // <alpha_i, covee>
            beta[i] -= pr;
            covee[i] -= pc;
        }
        rs.beta.push_back(beta);
        rs.beta_covee.push_back(covee);
    }
    rs.pairing.assign(N, IVec(N, 0));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) {
            long long p = 0;
            for (int r = 0; r < c.n; ++r)
                for (int s = 0; s < c.n; ++s)
                    p += rs.beta[k][r] * rs.beta_covee[j][s] * c.a[s][r];
            rs.pairing[k][j] = p;
        }
    return rs;
}

IVec string_lowest_params(const CartanData& c, const RootSequence& rs, const IVec& lambda) {
    IVec out;
    for (const auto& covee : rs.beta_covee) {
        long long v = 0;
        for (int i = 0; i < c.n; ++i) v += lambda[i] * covee[i];
        out.push_back(v);
    }
    return out;
}

long long weyl_dimension(const CartanData& c, const IVec& lambda) {
    auto [w0, word] = longest_element(c);
    RootSequence rs = positive_root_sequence(c, word);
    IVec rho(c.n, 1);
    long long num = 1, den = 1;
    for (const auto& covee : rs.beta_covee) {
        long long a = 0, b = 0;
        for (int i = 0; i < c.n; ++i) {
            a += (lambda[i] + 1) * covee[i];
            b += rho[i] * covee[i];
        }
        num *= a;
        den *= b;
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

} // namespace lift
