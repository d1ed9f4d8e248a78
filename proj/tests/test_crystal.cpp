#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "lift/crystal.hpp"
#include "lift/geomlift.hpp"

using namespace lift;

namespace {

ReducedWord rw(const CartanData& c, std::vector<int> letters) {
    return ReducedWord{letters, weyl_from_word(c, letters)};
}

std::set<IVec> string_set(const CrystalGraph& g) {
    std::set<IVec> out;
    for (const auto& el : g.elements) out.insert(el.string_coords);
    return out;
}

std::vector<IVec> dominant_weights(int n, long long cap) {
    std::vector<IVec> out;
    IVec lam(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) { out.push_back(lam); return; }
        for (lam[k] = 0; lam[k] <= cap; ++lam[k]) rec(k + 1);
        lam[k] = 0;
    };
    rec(0);
    return out;
}

struct B2Registrar {
    B2Registrar() { register_move_table(derive_rank2_moves(Rank2Type::B2)); }
};

const B2Registrar b2_registrar;

} // namespace

TEST_CASE("adjoint A2 crystal strings") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    CHECK(g.elements.size() == 8);
    std::set<IVec> expected = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                               {2, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
    CHECK(string_set(g) == expected);
    CHECK(g.elements[g.highest].string_coords == IVec{0, 0, 0});
    CHECK(g.elements[g.lowest].string_coords == IVec{1, 2, 1});
}

TEST_CASE("sl2 string") {
    CartanData c = cartan_preset("A1");
    for (long long m : {0, 1, 5}) {
        CrystalGraph g = generate(c, rw(c, {1}), {m});
        CHECK((long long)g.elements.size() == m + 1);
        for (long long t = 0; t <= m; ++t) CHECK(g.index_of({t}) >= 0);
    }
}

TEST_CASE("crystal sizes match the dimension formula") {
    struct Case { const char* type; IVec lambda; };
    for (const auto& [type, lambda] :
         {Case{"A2", {1, 1}}, Case{"A2", {2, 1}}, Case{"A3", {1, 1, 1}},
          Case{"A3", {2, 0, 1}}, Case{"B2", {1, 1}}, Case{"B2", {2, 1}}}) {
        CartanData c = cartan_preset(type);
        auto [w0, word] = longest_element(c);
        CrystalGraph g = generate(c, word, lambda);
        CHECK((long long)g.elements.size() == weyl_dimension(c, lambda));
    }
    CartanData b2 = cartan_preset("B2");
    CHECK(generate(b2, rw(b2, {1, 2, 1, 2}), {1, 1}).elements.size() == 16);
}

TEST_CASE("kashiwara operator laws") {
    for (const char* type : {"A2", "B2"}) {
        CartanData c = cartan_preset(type);
        auto [w0, word] = longest_element(c);
        CrystalGraph g = generate(c, word, {2, 1});
        // f-edges are injective per index (e_i f_i = id), and weights drop by alpha_i
        for (int i = 0; i < c.n; ++i) {
            std::set<int> targets;
            for (int b = 0; b < (int)g.elements.size(); ++b) {
                int t = g.f_edges[b][i];
                if (t < 0) continue;
                CHECK(targets.insert(t).second);
                IVec alpha = c.alpha_weight(i + 1);
                for (int r = 0; r < c.n; ++r)
                    CHECK(g.elements[t].weight[r] == g.elements[b].weight[r] - alpha[r]);
            }
        }
        IVec low = weyl_apply(w0, {2, 1});
        CHECK(g.elements[g.lowest].weight == low);
    }
}

TEST_CASE("generation rejects bad weights") {
    CartanData c = cartan_preset("A2");
    CHECK_THROWS_AS(generate(c, rw(c, {1, 2, 1}), {-1, 0}), WeightNotDominant);
    CHECK_THROWS_AS(generate(c, rw(c, {1, 2, 1}), {1}), DimensionMismatch);
}

TEST_CASE("eta pairing on the adjoint A2 crystal") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    eta_involution(g);
    auto pair_of = [&](IVec a) { return g.elements[g.eta_pairing[g.index_of(a)]].string_coords; };
    CHECK(pair_of({0, 0, 0}) == IVec{1, 2, 1});
    CHECK(pair_of({1, 0, 0}) == IVec{2, 1, 0});
    CHECK(pair_of({0, 1, 0}) == IVec{0, 2, 1});
    CHECK(pair_of({0, 1, 1}) == IVec{1, 1, 0});
}

TEST_CASE("eta reverses the sl2 string") {
    CartanData c = cartan_preset("A1");
    CrystalGraph g = generate(c, rw(c, {1}), {4});
    eta_involution(g);
    for (long long t = 0; t <= 4; ++t)
        CHECK(g.elements[g.eta_pairing[g.index_of({t})]].string_coords == IVec{4 - t});
}

TEST_CASE("eta swaps f_i with e_{i*} globally") {
    for (const char* type : {"A3", "B2"}) {
        CartanData c = cartan_preset(type);
        auto [w0, word] = longest_element(c);
        CrystalGraph g = generate(c, word, IVec(c.n, 1));
        eta_involution(g);
        auto star = star_involution(c);
        for (int b = 0; b < (int)g.elements.size(); ++b)
            for (int i = 1; i <= c.n; ++i) {
                int fb = g.f_edges[b][i - 1];
                if (fb < 0) continue;
                // eta(f_i b) must be the e_{i*}-parent of eta(b)
                CHECK(g.f_edges[g.eta_pairing[fb]][star[i - 1] - 1] == g.eta_pairing[b]);
            }
        for (int b = 0; b < (int)g.elements.size(); ++b)
            CHECK(g.eta_pairing[g.eta_pairing[b]] == b);
    }
}

TEST_CASE("lusztig parameters from the involution") {
    CartanData c = cartan_preset("A2");
    ReducedWord word = rw(c, {1, 2, 1});
    CrystalGraph g = generate(c, word, {1, 1});
    eta_involution(g);
    auto lp = [&](IVec s) { return lusztig_params(g, g.index_of(s), word).coords; };
    CHECK(lp({1, 2, 1}) == IVec{1, 1, 1});
    CHECK(lp({2, 1, 0}) == IVec{2, 0, 1});
    CHECK(lp({0, 0, 0}) == IVec{0, 0, 0});

    // lowest element carries the starred weight coordinates
    for (const char* type : {"A2", "A3", "B2"}) {
        CartanData cc = cartan_preset(type);
        auto [w0, w] = longest_element(cc);
        IVec lam(cc.n);
        for (int i = 0; i < cc.n; ++i) lam[i] = i + 1;
        CrystalGraph gg = generate(cc, w, lam);
        eta_involution(gg);
        auto star = star_involution(cc);
        IVec low = lusztig_params(gg, gg.lowest, w).coords;
        for (std::size_t k = 0; k < w.letters.size(); ++k)
            CHECK(low[k] == lam[star[w.letters[k] - 1] - 1]);
        CHECK(lusztig_params(gg, gg.highest, w).coords == IVec(w.letters.size(), 0));
    }
}

TEST_CASE("demazure subsets") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    CHECK(demazure_subset(g, weyl_identity(c)) == std::vector<int>{g.highest});
    CHECK(demazure_subset(g, longest_element(c).first).size() == 8);

    auto d1 = demazure_subset(g, simple_reflection(c, 1));
    std::set<IVec> d1s;
    for (int id : d1) d1s.insert(g.elements[id].string_coords);
    CHECK(d1s == std::set<IVec>{{0, 0, 0}, {1, 0, 0}});

    // monotonicity along a reduced word of w0
    WeylElement w = weyl_identity(c);
    std::vector<int> prev;
    for (int letter : {1, 2, 1}) {
        w = weyl_mul(c, w, simple_reflection(c, letter));
        auto cur = demazure_subset(g, w);
        for (int id : prev) CHECK(std::count(cur.begin(), cur.end(), id) == 1);
        prev = cur;
    }
}

TEST_CASE("richardson subsets") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    eta_involution(g);
    WeylElement s1 = simple_reflection(c, 1), s2 = simple_reflection(c, 2);
    WeylElement w0 = longest_element(c).first;

    CHECK(richardson_subset(g, w0, w0).size() == 8);
    CHECK(richardson_subset(g, s1, s1).empty());

    WeylElement s2s1 = weyl_mul(c, s2, s1);
    auto r = richardson_subset(g, s2s1, s2s1);
    std::set<IVec> rs;
    for (int id : r) rs.insert(g.elements[id].string_coords);
    CHECK(rs == std::set<IVec>{{1, 0, 0}, {0, 1, 1}, {0, 2, 1}});
}

TEST_CASE("tableaux of the adjoint A2 crystal") {
    CartanData c = cartan_preset("A2");
    CHECK(standard_word_a(2) == std::vector<int>{1, 2, 1});
    CHECK(standard_word_a(3) == std::vector<int>{1, 2, 1, 3, 2, 1});
    CrystalGraph g = generate(c, rw(c, standard_word_a(2)), {1, 1});
    auto tab = [&](IVec s) { return tableau_of(g, g.index_of(s)).rows; };
    CHECK(tab({0, 0, 0}) == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(tab({1, 2, 1}) == std::vector<std::vector<int>>{{2, 3}, {3}});
    CHECK(ssyt_enumerate(2, {1, 1}).size() == 8);

    CrystalGraph bad = generate(c, rw(c, {2, 1, 2}), {1, 1});
    CHECK_THROWS_AS(tableau_of(bad, 0), NotStandardWord);
    CartanData b2 = cartan_preset("B2");
    CrystalGraph gb = generate(b2, rw(b2, {1, 2, 1, 2}), {1, 0});
    CHECK_THROWS_AS(tableau_of(gb, 0), NotTypeA);
}

TEST_CASE("tableau bijection for small shapes") {
    for (const char* type : {"A2", "A3"}) {
        CartanData c = cartan_preset(type);
        ReducedWord word = rw(c, standard_word_a(c.n));
        for (const IVec& lam : dominant_weights(c.n, 2)) {
            CrystalGraph g = generate(c, word, lam);
            std::set<TableauA> seen;
            for (const auto& el : g.elements) {
                auto [it, fresh] = seen.insert(tableau_of(g, el.id));
                CHECK(fresh);
            }
            auto all = ssyt_enumerate(c.n, lam);
            CHECK(all.size() == seen.size());
            for (const auto& t : all) CHECK(seen.count(t) == 1);
        }
    }
}

TEST_CASE("string coordinates in other words") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    CHECK(string_in_word(g, g.index_of({1, 0, 0}), {2, 1, 2}) == IVec{0, 1, 0});
    CHECK(string_in_word(g, g.highest, {2, 1, 2}) == IVec{0, 0, 0});
}

TEST_CASE("exports") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 0});
    eta_involution(g);
    std::string dot = crystal_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("f1") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    std::string js = crystal_to_json(g);
    CHECK(js.find("\"lusztig\"") != std::string::npos);
    CHECK(js.find("\"eta\"") != std::string::npos);
}
