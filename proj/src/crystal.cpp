#include "lift/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lift {

namespace {

/// Shared machinery for moving string coordinates between reduced words of
/// w0: one word graph, one BFS tree rooted at the canonical word.
struct Reparametrizer {
    const CartanData& c;
    WordGraph g;
    int canon = -1;
    std::vector<int> prev;
    std::vector<WordGraphEdge> via;

    Reparametrizer(const CartanData& cartan, const ReducedWord& canonical) : c(cartan) {
        g = all_reduced_words(c, canonical.target);
        canon = g.index_of(canonical.letters);
        if (canon < 0) throw PreconditionNotMet("canonical word is not reduced");
        prev.assign(g.words.size(), -1);
        via.resize(g.words.size());
        std::deque<int> queue{canon};
        std::vector<char> seen(g.words.size(), 0);
        seen[canon] = 1;
        while (!queue.empty()) {
            int k = queue.front();
            queue.pop_front();
            for (const auto& e : g.edges[k])
                if (!seen[e.to]) {
                    seen[e.to] = 1;
                    prev[e.to] = k;
                    via[e.to] = e;
                    queue.push_back(e.to);
                }
        }
        for (char s : seen)
            if (!s) throw PreconditionNotMet("word graph is not connected");
    }

    // edges along the tree path canon -> idx, tagged with their source word
    std::vector<std::pair<int, WordGraphEdge>> path(int idx) const {
        std::vector<std::pair<int, WordGraphEdge>> p;
        for (int k = idx; k != canon; k = prev[k]) p.push_back({prev[k], via[k]});
        std::reverse(p.begin(), p.end());
        return p;
    }

    IVec apply_edge(const IVec& coords, int at, const WordGraphEdge& e, Flavor flavor) const {
        const auto& word = g.words[at];
        int m = braid_order(c, word[e.pos], word[e.pos + 1]);
        IVec block(coords.begin() + e.pos, coords.begin() + e.pos + m);
        IVec moved = local_move(c, move_table(e.type), flavor, word, e.pos, block);
        IVec out = coords;
        std::copy(moved.begin(), moved.end(), out.begin() + e.pos);
        return out;
    }

    IVec to_word(const IVec& coords, int idx, Flavor flavor = Flavor::String) const {
        IVec cur = coords;
        for (const auto& [at, e] : path(idx)) cur = apply_edge(cur, at, e, flavor);
        return cur;
    }

    IVec from_word(const IVec& coords, int idx, Flavor flavor = Flavor::String) const {
        auto p = path(idx);
        IVec cur = coords;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            const auto& [at, e] = *it;
            // mirror edge from e.to back to at
            const WordGraphEdge* mirror = nullptr;
            for (const auto& back : g.edges[e.to])
                if (back.to == at && back.pos == e.pos) mirror = &back;
            if (!mirror) throw Error("braid edge has no mirror");
            cur = apply_edge(cur, e.to, *mirror, flavor);
        }
        return cur;
    }
};

IVec string_weight(const CartanData& c, const std::vector<int>& letters, const IVec& lambda,
                   const IVec& t) {
    IVec w = lambda;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        IVec alpha = c.alpha_weight(letters[k]);
        for (int r = 0; r < c.n; ++r) w[r] -= t[k] * alpha[r];
    }
    return w;
}

} // namespace

int CrystalGraph::index_of(const IVec& coords) const {
    for (const auto& el : elements)
        if (el.string_coords == coords) return el.id;
    return -1;
}

CrystalGraph generate(const CartanData& c, const ReducedWord& word, const IVec& lambda) {
    for (auto l : lambda)
        if (l < 0) throw WeightNotDominant("lambda has a negative coordinate");
    if ((int)lambda.size() != c.n) throw DimensionMismatch("weight has wrong rank");

    Reparametrizer rep(c, word);
    // one reduced word starting with each letter
    std::vector<int> word_with(c.n + 1, -1);
    for (int k = 0; k < (int)rep.g.words.size(); ++k) {
        int first = rep.g.words[k][0];
        if (word_with[first] < 0) word_with[first] = k;
    }
    for (int i = 1; i <= c.n; ++i)
        if (word_with[i] < 0) throw PreconditionNotMet("no reduced word starts with a letter");

    int N = (int)word.letters.size();
    std::map<IVec, int> index;
    std::vector<IVec> strings;
    std::vector<std::vector<int>> f_edges;
    std::deque<int> queue;

    IVec zero(N, 0);
    index[zero] = 0;
    strings.push_back(zero);
    f_edges.push_back(std::vector<int>(c.n, -1));
    queue.push_back(0);

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        IVec t = strings[id];
        IVec wt = string_weight(c, word.letters, lambda, t);
        for (int i = 1; i <= c.n; ++i) {
            IVec moved = rep.to_word(t, word_with[i]);
            long long eps = moved[0];
            long long phi = eps + wt[i - 1];
            if (phi <= 0) continue;
            moved[0] += 1;
            IVec next = rep.from_word(moved, word_with[i]);
            auto [it, fresh] = index.try_emplace(next, (int)strings.size());
            if (fresh) {
                strings.push_back(next);
                f_edges.push_back(std::vector<int>(c.n, -1));
                queue.push_back(it->second);
                if (strings.size() > 2000000) throw DimensionTooLarge("crystal too large");
            }
            f_edges[id][i - 1] = it->second;
        }
    }

    // renumber deterministically by string coordinates
    std::vector<int> order(strings.size());
    for (int k = 0; k < (int)order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return strings[a] < strings[b]; });
    std::vector<int> newid(strings.size());
    for (int k = 0; k < (int)order.size(); ++k) newid[order[k]] = k;

    CrystalGraph g;
    g.cartan = c;
    g.word = word;
    g.lambda = lambda;
    g.elements.resize(strings.size());
    g.f_edges.assign(strings.size(), std::vector<int>(c.n, -1));
    for (int k = 0; k < (int)strings.size(); ++k) {
        CrystalElement el;
        el.id = newid[k];
        el.string_coords = strings[k];
        el.weight = string_weight(c, word.letters, lambda, strings[k]);
        g.elements[newid[k]] = el;
        for (int i = 0; i < c.n; ++i)
            if (f_edges[k][i] >= 0) g.f_edges[newid[k]][i] = newid[f_edges[k][i]];
    }

    auto [w0, w0word] = longest_element(c);
    IVec low_wt = weyl_apply(w0, lambda);
    int highest = -1, lowest = -1;
    for (const auto& el : g.elements) {
        if (el.string_coords == zero) {
            if (highest >= 0) throw Error("duplicate highest weight element");
            highest = el.id;
        }
        if (el.weight == low_wt) {
            if (lowest >= 0) throw Error("duplicate lowest weight element");
            lowest = el.id;
        }
    }
    if (highest < 0 || lowest < 0) throw Error("missing extremal element");
    g.highest = highest;
    g.lowest = lowest;
    return g;
}

IVec string_in_word(const CrystalGraph& g, int id, const std::vector<int>& target_word) {
    Reparametrizer rep(g.cartan, g.word);
    int idx = rep.g.index_of(target_word);
    if (idx < 0) throw PreconditionNotMet("target word is not reduced for w0");
    return rep.to_word(g.elements[id].string_coords, idx);
}

std::vector<int> eta_involution(CrystalGraph& g) {
    int n = g.cartan.n;
    int sz = (int)g.elements.size();
    auto star = star_involution(g.cartan);

    // e-edge lookup: parent[x][i] = y with f_edges[y][i] == x
    std::vector<std::vector<int>> parent(sz, std::vector<int>(n, -1));
    for (int y = 0; y < sz; ++y)
        for (int i = 0; i < n; ++i)
            if (g.f_edges[y][i] >= 0) parent[g.f_edges[y][i]][i] = y;

    std::vector<int> eta(sz, -1);
    eta[g.highest] = g.lowest;
    std::deque<int> queue{g.highest};
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int bp = g.f_edges[b][i];
            if (bp < 0) continue;
            int img = parent[eta[b]][star[i] - 1];
            if (img < 0) throw PropagationConflict("eta image has no raising partner");
            if (eta[bp] < 0) {
                eta[bp] = img;
                queue.push_back(bp);
            } else if (eta[bp] != img) {
                throw PropagationConflict("two paths disagree on the eta image");
            }
        }
    }
    for (int b = 0; b < sz; ++b) {
        if (eta[b] < 0) throw PropagationConflict("eta propagation did not reach an element");
        if (eta[eta[b]] != b) throw PropagationConflict("eta is not an involution");
    }
    g.eta_pairing = eta;
    return eta;
}

ParamVector lusztig_params(const CrystalGraph& g, int id, const ReducedWord& word) {
    if (g.eta_pairing.empty()) throw PreconditionNotMet("eta pairing not computed");
    auto star = star_involution(g.cartan);
    std::vector<int> starred;
    for (int i : word.letters) starred.push_back(star[i - 1]);
    IVec coords = string_in_word(g, g.eta_pairing[id], starred);
    ReducedWord starred_word{starred, weyl_from_word(g.cartan, starred)};
    return omega(g.cartan, starred_word, g.lambda, coords);
}

std::vector<int> demazure_subset(const CrystalGraph& g, const WeylElement& w) {
    ReducedWord adapted = extend_adapted(g.cartan, w);
    int p = w.length;
    Reparametrizer rep(g.cartan, g.word);
    int idx = rep.g.index_of(adapted.letters);
    if (idx < 0) throw PreconditionNotMet("adapted word is not in the word graph");
    std::vector<int> out;
    for (const auto& el : g.elements) {
        IVec t = rep.to_word(el.string_coords, idx);
        bool keep = true;
        for (int k = p; k < (int)t.size(); ++k)
            if (t[k] != 0) keep = false;
        if (keep) out.push_back(el.id);
    }
    return out;
}

std::vector<int> richardson_subset(const CrystalGraph& g, const WeylElement& w,
                                   const WeylElement& tau) {
    if (g.eta_pairing.empty()) throw PreconditionNotMet("eta pairing not computed");
    // eta carries the Demazure set of w0.tau.w0, not of tau itself; the star
    // twist makes the A2 curve decompositions and the B2 golden faces line up
    auto [w0, w0word] = longest_element(g.cartan);
    WeylElement tau_star = weyl_mul(g.cartan, weyl_mul(g.cartan, w0, tau), w0);
    std::vector<int> a = demazure_subset(g, w);
    std::vector<int> b = demazure_subset(g, tau_star);
    std::vector<char> in_eta_b(g.elements.size(), 0);
    for (int id : b) in_eta_b[g.eta_pairing[id]] = 1;
    std::vector<int> out;
    for (int id : a)
        if (in_eta_b[id]) out.push_back(id);
    return out;
}

std::vector<int> standard_word_a(int n) {
    std::vector<int> w;
    for (int k = 1; k <= n; ++k)
        for (int i = k; i >= 1; --i) w.push_back(i);
    return w;
}

namespace {

bool is_type_a(const CartanData& c) {
    CartanData ref = cartan_preset("A" + std::to_string(c.n));
    return c.a == ref.a;
}

void check_semistandard(const TableauA& t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1]) throw InconsistentCounts("row not weakly increasing");
        if (r > 0) {
            const auto& above = t.rows[r - 1];
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j >= above.size() || above[j] >= row[j])
                    throw InconsistentCounts("column not strictly increasing");
            }
        }
    }
}

} // namespace

TableauA tableau_of(const CrystalGraph& g, int id) {
    int n = g.cartan.n;
    if (!is_type_a(g.cartan)) throw NotTypeA("tableaux require type A");
    if (g.word.letters != standard_word_a(n))
        throw NotStandardWord("tableaux require the standard reduced word");

    // string parameters are (c_11, c_22, c_12, c_33, c_23, c_13, ...)
    const IVec& t = g.elements[id].string_coords;
    std::vector<std::vector<long long>> cts(n + 1, std::vector<long long>(n + 1, 0));
    int pos = 0;
    for (int j = 1; j <= n; ++j)
        for (int i = j; i >= 1; --i) cts[i][j] = t[pos++];

    TableauA out;
    out.shape = g.lambda;
    for (int i = 1; i <= n; ++i) {
        long long len = 0;
        for (int r = i; r <= n; ++r) len += g.lambda[r - 1];
        if (len == 0) continue;
        std::vector<int> row;
        long long filled = 0;
        for (int j = i; j <= n; ++j) {
            long long cnt = cts[i][j] - (i > 1 ? cts[i - 1][j] : 0);
            if (cnt < 0) throw InconsistentCounts("negative entry count");
            filled += cnt;
        }
        long long lead = len - filled;
        if (lead < 0) throw InconsistentCounts("row overfilled");
        for (long long k = 0; k < lead; ++k) row.push_back(i);
        for (int j = i; j <= n; ++j) {
            long long cnt = cts[i][j] - (i > 1 ? cts[i - 1][j] : 0);
            for (long long k = 0; k < cnt; ++k) row.push_back(j + 1);
        }
        out.rows.push_back(row);
    }
    check_semistandard(out);
    return out;
}

namespace {

void fill_row(int n, const std::vector<long long>& lens, std::vector<std::vector<int>>& rows,
              std::size_t r, std::size_t j, std::vector<TableauA>& out, const IVec& shape) {
    if (r == rows.size()) {
        TableauA t;
        t.shape = shape;
        t.rows = rows;
        out.push_back(t);
        return;
    }
    if (j == (std::size_t)lens[r]) {
        fill_row(n, lens, rows, r + 1, 0, out, shape);
        return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[r][j - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][j] + 1);
    for (int v = lo; v <= n + 1; ++v) {
        rows[r][j] = v;
        fill_row(n, lens, rows, r, j + 1, out, shape);
    }
}

} // namespace

std::vector<TableauA> ssyt_enumerate(int n, const IVec& shape) {
    std::vector<long long> lens;
    for (int i = 1; i <= n; ++i) {
        long long len = 0;
        for (int r = i; r <= n; ++r) len += shape[r - 1];
        if (len > 0) lens.push_back(len);
    }
    std::vector<std::vector<int>> rows;
    for (auto l : lens) rows.push_back(std::vector<int>((std::size_t)l, 0));
    std::vector<TableauA> out;
    fill_row(n, lens, rows, 0, 0, out, shape);
    std::sort(out.begin(), out.end());
    return out;
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& el : g.elements) {
        os << "  n" << el.id << " [label=\"(";
        for (std::size_t k = 0; k < el.string_coords.size(); ++k)
            os << (k ? "," : "") << el.string_coords[k];
        os << ")\"];\n";
    }
    for (int b = 0; b < (int)g.elements.size(); ++b)
        for (int i = 0; i < g.cartan.n; ++i)
            if (g.f_edges[b][i] >= 0)
                os << "  n" << b << " -> n" << g.f_edges[b][i] << " [label=\"f" << (i + 1)
                   << "\"];\n";
    if (!g.eta_pairing.empty())
        for (int b = 0; b < (int)g.elements.size(); ++b)
            if (g.eta_pairing[b] > b)
                os << "  n" << b << " -> n" << g.eta_pairing[b]
                   << " [style=dashed, dir=both];\n";
    os << "}\n";
    return os.str();
}

std::string crystal_to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["lambda"] = g.lambda;
    j["word"] = g.word.letters;
    j["elements"] = nlohmann::json::array();
    bool with_lusztig = !g.eta_pairing.empty();
    for (const auto& el : g.elements) {
        nlohmann::json e;
        e["id"] = el.id;
        e["string"] = el.string_coords;
        e["weight"] = el.weight;
        if (with_lusztig) e["lusztig"] = lusztig_params(g, el.id, g.word).coords;
        j["elements"].push_back(e);
    }
    if (with_lusztig) j["eta"] = g.eta_pairing;
    return j.dump(2);
}

} // namespace lift
