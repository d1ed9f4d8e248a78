#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lift/tropical.hpp"

using namespace lift;

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(sf_const(BigRat(0)), ValidationFailed);
    CHECK_THROWS_AS(sf_const(BigRat(-3)), ValidationFailed);
    CHECK_NOTHROW(sf_const(BigRat(5)));
}

TEST_CASE("parser and evaluation") {
    auto e = sf_parse("(t1^3 + t2^3) / (t1 + t2)");
    CHECK(sf_num_vars(e) == 2);
    CHECK(sf_evaluate(e, {BigRat(2), BigRat(1)}) == BigRat(3));
    auto q = sf_parse("3 / 4");
    CHECK(sf_evaluate(q, {}) == BigRat(3, 4));
    CHECK_THROWS_AS(sf_parse("t1 - t2"), ValidationFailed);
    CHECK_THROWS_AS(sf_parse("t1 +"), ValidationFailed);
}

TEST_CASE("tropicalization basics") {
    CHECK(tropicalize(sf_var(1))->op == PLOp::Proj);
    CHECK(tropicalize(sf_const(BigRat(5)))->op == PLOp::Zero);

    auto f = tropicalize(sf_parse("(t1^3 + t2^3) / (t1 + t2)"));
    CHECK(pl_evaluate(f, {3, 1}) == 2);
    auto g = pl_min(pl_plus(pl_proj(1), pl_proj(1)), pl_plus(pl_proj(2), pl_proj(2)));
    CHECK(pl_equal_on_box(f, g, 10).equal);

    auto prod = tropicalize(sf_mul(sf_var(1), sf_var(2)));
    CHECK(pl_evaluate(prod, {2, 5}) == 7);
}

TEST_CASE("box equality oracle") {
    auto f = pl_min(pl_proj(1), pl_proj(2));
    auto g = pl_proj(1);
    auto r = pl_equal_on_box(f, g, 1);
    CHECK_FALSE(r.equal);
    CHECK(pl_evaluate(f, r.witness) != pl_evaluate(g, r.witness));
    CHECK(pl_equal_on_box(f, f, 2).equal);
}

TEST_CASE("rewriting-invariant tropicalization") {
    auto f = tropicalize(sf_parse("(t1^3 + t2^3) / (t1 + t2)"));
    auto g = tropicalize(sf_parse("t1^2 + t2^2"));
    CHECK(pl_equal_on_box(f, g, 10).equal);
}

namespace {

SFExpr random_sf(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> leaf(0, 2), op(0, 2);
    if (depth == 0 || leaf(rng) == 0) {
        if (leaf(rng) == 0) return sf_const(BigRat(1 + leaf(rng)));
        return sf_var(1 + op(rng) % 2);
    }
    auto a = random_sf(rng, depth - 1);
    auto b = random_sf(rng, depth - 1);
    switch (op(rng)) {
        case 0: return sf_add(a, b);
        case 1: return sf_mul(a, b);
        default: return sf_div(a, b);
    }
}

} // namespace

TEST_CASE("homomorphism law on random expressions") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_sf(rng, 3);
        auto b = random_sf(rng, 3);
        CHECK(pl_equal_on_box(tropicalize(sf_mul(a, b)),
                              pl_plus(tropicalize(a), tropicalize(b)), 4)
                  .equal);
        CHECK(pl_equal_on_box(tropicalize(sf_add(a, b)),
                              pl_min(tropicalize(a), tropicalize(b)), 4)
                  .equal);
    }
}

TEST_CASE("homogeneity of constant-free images") {
    auto e = sf_parse("(t1^3 + t2^3) / (t1 + t2)");
    auto f = tropicalize(e);
    for (long long m : {1, 2, 3}) {
        for (long long x = -5; x <= 5; ++x)
            for (long long y = -5; y <= 5; ++y)
                CHECK(pl_evaluate(f, {m * x, m * y}) == m * pl_evaluate(f, {x, y}));
    }
    CHECK(pl_evaluate(f, {0, 0}) == 0);
}

TEST_CASE("json serialization") {
    auto f = pl_min(pl_proj(1), pl_zero());
    auto s = pl_to_json(f);
    CHECK(s.find("\"min\"") != std::string::npos);
    CHECK(s.find("\"proj\"") != std::string::npos);
}
