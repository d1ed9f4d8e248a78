#include "lift/reparam.hpp"

#include <deque>
#include <map>

namespace lift {

namespace {

std::vector<PLExpr> a2_lusztig_move() {
    // (a,b,c) -> (b+c-min(a,c), min(a,c), a+b-min(a,c))
    PLExpr a = pl_proj(1), b = pl_proj(2), c = pl_proj(3);
    PLExpr m = pl_min(a, c);
    return {pl_minus(pl_plus(b, c), m), m, pl_minus(pl_plus(a, b), m)};
}

std::vector<PLExpr> a2_string_move() {
    // (t1,t2,t3) -> (t2+t3-min(t2,t1+t3), t1+t3, min(t2,t1+t3)-t3)
    PLExpr t1 = pl_proj(1), t2 = pl_proj(2), t3 = pl_proj(3);
    PLExpr m = pl_min(t2, pl_plus(t1, t3));
    return {pl_minus(pl_plus(t2, t3), m), pl_plus(t1, t3), pl_minus(m, t3)};
}

std::map<Rank2Type, Rank2MoveTable>& registry() {
    static std::map<Rank2Type, Rank2MoveTable> reg = [] {
        std::map<Rank2Type, Rank2MoveTable> r;
        r[Rank2Type::A1xA1] = builtin_move_table(Rank2Type::A1xA1);
        r[Rank2Type::A2] = builtin_move_table(Rank2Type::A2);
        return r;
    }();
    return reg;
}

} // namespace

Rank2MoveTable builtin_move_table(Rank2Type t) {
    Rank2MoveTable table;
    table.local_type = t;
    table.provenance = "paper";
    switch (t) {
        case Rank2Type::A1xA1: {
            std::vector<PLExpr> swap = {pl_proj(2), pl_proj(1)};
            table.string_from_1 = table.string_from_2 = swap;
            table.lusztig_from_1 = table.lusztig_from_2 = swap;
            return table;
        }
        case Rank2Type::A2:
            table.string_from_1 = table.string_from_2 = a2_string_move();
            table.lusztig_from_1 = table.lusztig_from_2 = a2_lusztig_move();
            return table;
        default:
            throw UnsupportedLocalType("no closed-form local move for this rank-2 type");
    }
}

void register_move_table(const Rank2MoveTable& table) {
    registry()[table.local_type] = table;
}

bool has_move_table(Rank2Type t) { return registry().count(t) > 0; }

const Rank2MoveTable& move_table(Rank2Type t) {
    auto it = registry().find(t);
    if (it == registry().end())
        throw UnsupportedLocalType("local move table not registered for this rank-2 type");
    return it->second;
}

IVec local_move(const CartanData& c, const Rank2MoveTable& table, Flavor flavor,
                const std::vector<int>& word, int pos, const IVec& block_coords) {
    int i = word[pos], j = word[pos + 1];
    int m = braid_order(c, i, j);
    if ((int)block_coords.size() != m)
        throw DimensionMismatch("block coordinate count does not match braid order");
    // local letter 1 carries the -1 Cartan entry against its partner
    bool from_1 = c.a[i - 1][j - 1] >= c.a[j - 1][i - 1];
    const std::vector<PLExpr>& move =
        flavor == Flavor::String ? (from_1 ? table.string_from_1 : table.string_from_2)
                                 : (from_1 ? table.lusztig_from_1 : table.lusztig_from_2);
    if ((int)move.size() != m) throw UnsupportedLocalType("move table has wrong arity");
    IVec out;
    for (const auto& f : move) out.push_back((long long)pl_evaluate(f, block_coords));
    return out;
}

ParamVector transition(const CartanData& c, const ParamVector& p,
                       const ReducedWord& target_word) {
    if (!(p.word.target == target_word.target))
        throw NotSameGroup("words represent different Weyl group elements");
    WordGraph g = all_reduced_words(c, p.word.target);
    int from = g.index_of(p.word.letters);
    int to = g.index_of(target_word.letters);
    if (from < 0 || to < 0) throw PreconditionNotMet("word is not reduced for the target");

    // breadth-first chain of braid moves
    std::vector<int> prev(g.words.size(), -1);
    std::vector<WordGraphEdge> via(g.words.size());
    std::deque<int> queue{from};
    std::vector<char> seen(g.words.size(), 0);
    seen[from] = 1;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        if (k == to) break;
        for (const auto& e : g.edges[k])
            if (!seen[e.to]) {
                seen[e.to] = 1;
                prev[e.to] = k;
                via[e.to] = e;
                queue.push_back(e.to);
            }
    }
    if (!seen[to]) throw PreconditionNotMet("word graph is not connected");

    std::vector<std::pair<int, WordGraphEdge>> chain;
    for (int k = to; k != from; k = prev[k]) chain.push_back({prev[k], via[k]});
    std::reverse(chain.begin(), chain.end());

    ParamVector cur = p;
    int at = from;
    for (const auto& [src, e] : chain) {
        const auto& word = g.words[at];
        int m = braid_order(c, word[e.pos], word[e.pos + 1]);
        IVec block(cur.coords.begin() + e.pos, cur.coords.begin() + e.pos + m);
        IVec moved = local_move(c, move_table(e.type), cur.flavor, word, e.pos, block);
        std::copy(moved.begin(), moved.end(), cur.coords.begin() + e.pos);
        at = e.to;
        cur.word = ReducedWord{g.words[at], p.word.target};
    }
    return cur;
}

namespace {

IVec eta_affine(const CartanData& c, const std::vector<int>& letters, const IVec& lambda,
                const IVec& t) {
    int N = (int)letters.size();
    IVec out(N);
    for (int k = 0; k < N; ++k) {
        long long v = lambda[letters[k] - 1] - t[k];
        for (int j = k + 1; j < N; ++j) v -= c.a[letters[k] - 1][letters[j] - 1] * t[j];
        out[k] = v;
    }
    return out;
}

} // namespace

ParamVector omega(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                  const IVec& t) {
    auto star = star_involution(c);
    std::vector<int> starred;
    for (int i : word.letters) starred.push_back(star[i - 1]);
    ParamVector out;
    out.flavor = Flavor::Lusztig;
    out.word = ReducedWord{starred, weyl_from_word(c, starred)};
    out.coords = eta_affine(c, word.letters, lambda, t);
    return out;
}

ParamVector phi_forward(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                        const IVec& t) {
    ParamVector out;
    out.flavor = Flavor::Lusztig;
    out.word = word;
    out.coords = eta_affine(c, word.letters, lambda, t);
    return out;
}

ParamVector phi_inverse(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                        const IVec& t_prime) {
    RootSequence rs = positive_root_sequence(c, word);
    IVec lp = string_lowest_params(c, rs, lambda);
    int N = (int)word.letters.size();
    ParamVector out;
    out.flavor = Flavor::String;
    out.word = word;
    out.coords.resize(N);
    for (int k = 0; k < N; ++k) {
        long long v = lp[k] - t_prime[k];
        // <beta_j, beta_k^vee>, not its transpose; the two only differ away
        // from the simply-laced types
        for (int j = k + 1; j < N; ++j) v -= rs.pairing[j][k] * t_prime[j];
        out.coords[k] = v;
    }
    return out;
}

IVec zeta_tropical(const CartanData& c, const ReducedWord& word, const IVec& t, bool dual) {
    int N = (int)word.letters.size();
    IVec out(N);
    for (int k = 0; k < N; ++k) {
        long long v = -t[k];
        for (int j = k + 1; j < N; ++j) {
            int ik = word.letters[k] - 1, ij = word.letters[j] - 1;
            v -= (dual ? c.a[ik][ij] : c.a[ij][ik]) * t[j];
        }
        out[k] = v;
    }
    return out;
}

} // namespace lift
