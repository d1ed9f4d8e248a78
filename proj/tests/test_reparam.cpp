#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "lift/crystal.hpp"

using namespace lift;

namespace {

ReducedWord rw(const CartanData& c, std::vector<int> letters) {
    return ReducedWord{letters, weyl_from_word(c, letters)};
}

ParamVector pv(const CartanData& c, Flavor f, std::vector<int> letters, IVec coords) {
    return ParamVector{f, rw(c, letters), coords};
}

} // namespace

TEST_CASE("local moves") {
    CartanData c = cartan_preset("A2");
    Rank2MoveTable a2 = builtin_move_table(Rank2Type::A2);
    CHECK(local_move(c, a2, Flavor::Lusztig, {1, 2, 1}, 0, {1, 0, 0}) == IVec{0, 0, 1});
    CHECK(local_move(c, a2, Flavor::String, {1, 2, 1}, 0, {1, 2, 1}) == IVec{1, 2, 1});
    CHECK(local_move(c, a2, Flavor::String, {1, 2, 1}, 0, {0, 0, 0}) == IVec{0, 0, 0});

    CartanData c2 = validate_cartan({{2, 0}, {0, 2}});
    Rank2MoveTable swp = builtin_move_table(Rank2Type::A1xA1);
    CHECK(local_move(c2, swp, Flavor::String, {1, 2}, 0, {3, 5}) == IVec{5, 3});

    CHECK_THROWS_AS(builtin_move_table(Rank2Type::G2), UnsupportedLocalType);
    CHECK_THROWS_AS(local_move(c, a2, Flavor::String, {1, 2, 1}, 0, {1, 2}),
                    DimensionMismatch);
}

TEST_CASE("transition between the two A2 words") {
    CartanData c = cartan_preset("A2");
    auto t1 = transition(c, pv(c, Flavor::String, {1, 2, 1}, {0, 0, 0}), rw(c, {2, 1, 2}));
    CHECK(t1.coords == IVec{0, 0, 0});
    CHECK(t1.word.letters == std::vector<int>{2, 1, 2});
    CHECK(t1.flavor == Flavor::String);

    auto t2 = transition(c, pv(c, Flavor::Lusztig, {1, 2, 1}, {1, 1, 1}), rw(c, {2, 1, 2}));
    CHECK(t2.coords == IVec{1, 1, 1});

    auto t3 = transition(c, pv(c, Flavor::String, {1, 2, 1}, {1, 0, 0}), rw(c, {2, 1, 2}));
    CHECK(t3.coords == IVec{0, 1, 0});
}

TEST_CASE("omega") {
    CartanData c = cartan_preset("A2");
    auto o1 = omega(c, rw(c, {1, 2, 1}), {1, 1}, {0, 0, 0});
    CHECK(o1.coords == IVec{1, 1, 1});
    CHECK(o1.flavor == Flavor::Lusztig);
    CHECK(o1.word.letters == std::vector<int>{2, 1, 2});

    CHECK(omega(c, rw(c, {1, 2, 1}), {1, 1}, {1, 2, 1}).coords == IVec{0, 0, 0});

    CartanData b2 = cartan_preset("B2");
    for (long long l1 : {1, 2, 3})
        for (long long l2 : {1, 2, 3}) {
            auto o = omega(b2, rw(b2, {1, 2, 1, 2}), {l1, l2}, {0, 0, 0, 0});
            CHECK(o.coords == IVec{l1, l2, l1, l2});
        }
}

TEST_CASE("phi formulas and the inverse pairing convention") {
    CartanData c = cartan_preset("A2");
    ReducedWord w = rw(c, {1, 2, 1});
    CHECK(phi_forward(c, w, {1, 1}, {0, 0, 0}).coords == IVec{1, 1, 1});
    CHECK(phi_forward(c, w, {1, 1}, {1, 2, 1}).coords == IVec{0, 0, 0});
    CHECK(phi_forward(c, w, {0, 0}, {0, 0, 0}).coords == IVec{0, 0, 0});

    CHECK(phi_inverse(c, w, {1, 1}, {1, 1, 1}).coords == IVec{0, 0, 0});
    CHECK(phi_inverse(c, w, {1, 1}, {0, 0, 0}).coords == IVec{1, 2, 1});
    CHECK(phi_inverse(c, w, {0, 0}, {0, 0, 0}).coords == IVec{0, 0, 0});
}

TEST_CASE("phi round trip on crystals, asymmetric weights included") {
    for (const char* name : {"A2", "A3"}) {
        CartanData c = cartan_preset(name);
        auto [w0, word] = longest_element(c);
        IVec lam(c.n, 0);
        // enumerate all dominant weights with coordinates <= 2
        std::vector<IVec> lams;
        std::function<void(int)> rec = [&](int k) {
            if (k == c.n) { lams.push_back(lam); return; }
            for (lam[k] = 0; lam[k] <= 2; ++lam[k]) rec(k + 1);
            lam[k] = 0;
        };
        rec(0);
        for (const IVec& l : lams) {
            IVec l_star = weyl_apply(w0, l);
            for (auto& v : l_star) v = -v;
            CrystalGraph g = generate(c, word, l);
            for (const auto& el : g.elements) {
                auto fwd = phi_forward(c, word, l, el.string_coords);
                CHECK(phi_inverse(c, word, l_star, fwd.coords).coords == el.string_coords);
            }
        }
    }
}

TEST_CASE("zeta tropical") {
    CartanData c = cartan_preset("A2");
    ReducedWord w = rw(c, {1, 2, 1});
    CHECK(zeta_tropical(c, w, {1, 1, 1}, true) == IVec{-2, 0, -1});
    CHECK(zeta_tropical(c, w, {0, 0, 0}, true) == IVec{0, 0, 0});
    CHECK(zeta_tropical(c, w, {0, 0, 0}, false) == IVec{0, 0, 0});

    // dual=true is exactly the linear part of phi_forward
    for (const char* name : {"A2", "A3", "B2"}) {
        CartanData cc = cartan_preset(name);
        auto [w0, word] = longest_element(cc);
        IVec lambda(cc.n, 1);
        int N = (int)word.letters.size();
        for (int trial = 0; trial < 50; ++trial) {
            IVec t(N);
            for (int k = 0; k < N; ++k) t[k] = (trial * 7 + k * 13) % 11 - 5;
            IVec z = zeta_tropical(cc, word, t, true);
            IVec f = phi_forward(cc, word, lambda, t).coords;
            for (int k = 0; k < N; ++k)
                CHECK(z[k] + lambda[word.letters[k] - 1] == f[k]);
        }
    }
}

TEST_CASE("chain independence and round trips on A3") {
    CartanData c = cartan_preset("A3");
    auto [w0, word] = longest_element(c);
    WordGraph g = all_reduced_words(c, w0);
    CrystalGraph cg = generate(c, word, {1, 1, 1});
    for (const auto& el : cg.elements) {
        ParamVector p = pv(c, Flavor::String, word.letters, el.string_coords);
        for (const auto& target : g.words) {
            ParamVector q = transition(c, p, rw(c, target));
            // independence of chain: moving back must restore the input,
            // and a second route via an intermediate word must agree
            CHECK(transition(c, q, word).coords == el.string_coords);
            ParamVector mid = transition(c, p, rw(c, g.words[g.words.size() / 2]));
            CHECK(transition(c, mid, rw(c, target)).coords == q.coords);
        }
    }
}

TEST_CASE("omega equals phi_forward up to the word tag") {
    CartanData c = cartan_preset("A2");
    auto [w0, word] = longest_element(c);
    CrystalGraph g = generate(c, word, {2, 1});
    for (const auto& el : g.elements) {
        auto o = omega(c, word, {2, 1}, el.string_coords);
        auto f = phi_forward(c, word, {2, 1}, el.string_coords);
        CHECK(o.coords == f.coords);
        CHECK(o.word.letters == std::vector<int>{2, 1, 2});
        CHECK(f.word.letters == word.letters);
    }
}

TEST_CASE("transition rejects mismatched targets") {
    CartanData c = cartan_preset("A3");
    ParamVector p = pv(c, Flavor::String, {1, 2, 1, 3, 2, 1}, {0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(transition(c, p, rw(c, {1, 2, 1})), NotSameGroup);
}
