#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "lift/geomlift.hpp"
#include "lift/polyhedra.hpp"

using namespace lift;

namespace {

ReducedWord rw(const CartanData& c, std::vector<int> letters) {
    return ReducedWord{letters, weyl_from_word(c, letters)};
}

WeylElement from_word(const CartanData& c, std::vector<int> letters) {
    return weyl_from_word(c, letters);
}

std::set<IVec> vset(const std::vector<IVec>& v) { return std::set<IVec>(v.begin(), v.end()); }

// normal/offset up to positive scaling
bool has_facet(const Polytope& p, IVec normal, long long offset) {
    for (const auto& h : p.h_rep) {
        for (long long s = 1; s <= 4; ++s) {
            bool same = h.offset == s * offset;
            for (int k = 0; k < (int)normal.size() && same; ++k)
                same = h.normal[k] == s * normal[k];
            if (same) return true;
        }
    }
    return false;
}

struct B2Registrar {
    B2Registrar() { register_move_table(derive_rank2_moves(Rank2Type::B2)); }
};

const B2Registrar b2_registrar;

} // namespace

TEST_CASE("segment hull") {
    CartanData c = cartan_preset("A1");
    CrystalGraph g = generate(c, rw(c, {1}), {2});
    Polytope p = string_polytope(g);
    CHECK(p.lattice_points.size() == 3);
    CHECK(vset(p.v_rep) == std::set<IVec>{{0}, {2}});
    CHECK(has_facet(p, {1}, 0));
    CHECK(has_facet(p, {-1}, -2));
    CHECK(p.equations.empty());
}

TEST_CASE("hull guards") {
    CHECK_THROWS_AS(hull_of_points({}), ValidationFailed);
    CHECK_THROWS_AS(hull_of_points({{0, 0}, {0}}), DimensionMismatch);
    CHECK_THROWS_AS(hull_of_points({IVec(9, 0)}), DimensionTooLarge);
    // a lower-dimensional hull carries equations
    Polytope flat = hull_of_points({{0, 0}, {1, 1}, {2, 2}});
    CHECK(flat.equations.size() == 1);
    CHECK(vset(flat.v_rep) == std::set<IVec>{{0, 0}, {2, 2}});
}

TEST_CASE("adjoint A2 string polytope") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    Polytope p = string_polytope(g);
    CHECK(p.v_rep.size() == 7);
    CHECK(p.h_rep.size() == 6);
    CHECK(p.point_index({1, 1, 0}) >= 0);
    CHECK(std::find(p.v_rep.begin(), p.v_rep.end(), IVec{1, 1, 0}) == p.v_rep.end());
    // midpoint witness
    for (int k = 0; k < 3; ++k)
        CHECK(IVec{0, 1, 0}[k] + IVec{2, 1, 0}[k] == 2 * IVec{1, 1, 0}[k]);
}

TEST_CASE("B2 facets match the printed inequalities") {
    CartanData b2 = cartan_preset("B2");
    CrystalGraph g = generate(b2, rw(b2, {1, 2, 1, 2}), {1, 1});
    Polytope p = string_polytope(g);
    CHECK(p.h_rep.size() == 8);
    CHECK(has_facet(p, {1, 0, 0, 0}, 0));
    CHECK(has_facet(p, {0, 1, -1, 0}, 0));
    CHECK(has_facet(p, {0, 0, 1, -1}, 0));
    CHECK(has_facet(p, {0, 0, 0, 1}, 0));
    CHECK(has_facet(p, {-1, 1, -2, 1}, -1));
    CHECK(has_facet(p, {0, -1, 2, -2}, -1));
    CHECK(has_facet(p, {0, 0, -1, 1}, -1));
    CHECK(has_facet(p, {0, 0, 0, -1}, -1));
}

TEST_CASE("cone saturation under scaling") {
    for (const char* type : {"A2", "B2"}) {
        CartanData c = cartan_preset(type);
        auto [w0, word] = longest_element(c);
        CrystalGraph base = generate(c, word, {1, 1});
        Polytope p = string_polytope(base);
        for (long long m = 2; m <= 3; ++m) {
            CrystalGraph g = generate(c, word, {m, m});
            for (const auto& el : g.elements)
                for (const auto& h : p.h_rep) {
                    long long v = 0;
                    for (int k = 0; k < p.dim; ++k) v += h.normal[k] * el.string_coords[k];
                    CHECK(v >= m * h.offset);
                }
        }
    }
}

TEST_CASE("face union basics") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    Polytope p = string_polytope(g);

    auto all = p.lattice_points;
    auto fu = face_union_test(p, all);
    CHECK(fu.pass);
    CHECK(fu.faces.masks.size() == 1);
    CHECK(fu.faces.points[0].size() == 8);

    // a non-vertex lattice point drags in its whole minimal face
    auto bad = face_union_test(p, {{1, 1, 0}});
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness_subset_point == IVec{1, 1, 0});
    std::set<IVec> edge = {{0, 1, 0}, {2, 1, 0}};
    CHECK(edge.count(bad.witness_missing) == 1);

    CHECK_THROWS_AS(face_union_test(p, {{9, 9, 9}}), PreconditionNotMet);
}

TEST_CASE("B2 t4 = 0 subset is one face") {
    CartanData b2 = cartan_preset("B2");
    CrystalGraph g = generate(b2, rw(b2, {1, 2, 1, 2}), {1, 1});
    Polytope p = string_polytope(g);
    std::vector<IVec> sub;
    for (const auto& q : p.lattice_points)
        if (q[3] == 0) sub.push_back(q);
    auto fu = face_union_test(p, sub);
    CHECK(fu.pass);
    CHECK(fu.faces.masks.size() == 1);
    CHECK(fu.faces.points[0].size() == sub.size());
}

TEST_CASE("demazure subsets are single faces") {
    CartanData c = cartan_preset("A2");
    ReducedWord word = rw(c, {1, 2, 1});
    CrystalGraph g = generate(c, word, {1, 1});
    Polytope p = string_polytope(g);
    // the canonical word is adapted to prefixes
    for (std::vector<int> prefix : {std::vector<int>{1}, {1, 2}, {1, 2, 1}}) {
        auto sub_ids = demazure_subset(g, from_word(c, prefix));
        std::vector<IVec> sub;
        for (int id : sub_ids) sub.push_back(g.elements[id].string_coords);
        auto fu = face_union_test(p, sub);
        CHECK(fu.pass);
        CHECK(fu.faces.masks.size() == 1);
    }
}

TEST_CASE("A2 richardson curve decomposes into two edges") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    eta_involution(g);
    WeylElement s2s1 = from_word(c, {2, 1});
    DegenerationReport rep = degeneration_report(g, s2s1, s2s1);
    CHECK(rep.subset_size == 3);
    CHECK(rep.is_face_union);
    REQUIRE(rep.components.size() == 2);
    CHECK(rep.components[0].dimension == 1);
    CHECK(rep.components[1].dimension == 1);
    std::set<IVec> shared;
    std::set<IVec> v0 = vset(rep.components[0].vertices);
    for (const auto& v : rep.components[1].vertices)
        if (v0.count(v)) shared.insert(v);
    CHECK(shared.size() == 1);
    CHECK(*shared.begin() == IVec{0, 1, 1});
}

TEST_CASE("B2 golden degeneration reports") {
    CartanData b2 = cartan_preset("B2");
    CrystalGraph g = generate(b2, rw(b2, {1, 2, 1, 2}), {1, 1});
    eta_involution(g);
    WeylElement w0 = longest_element(b2).first;
    WeylElement s1s2s1 = from_word(b2, {1, 2, 1});
    WeylElement s1s2 = from_word(b2, {1, 2});

    DegenerationReport plane = degeneration_report(g, s1s2s1, s1s2s1);
    CHECK(plane.is_face_union);
    REQUIRE(plane.components.size() == 1);
    CHECK(plane.components[0].dimension == 2);
    CHECK(vset(plane.components[0].vertices) ==
          std::set<IVec>{{0, 1, 0, 0}, {2, 1, 0, 0}, {2, 3, 1, 0}, {0, 3, 1, 0}});

    DegenerationReport schubert = degeneration_report(g, s1s2, w0);
    CHECK(schubert.is_face_union);
    REQUIRE(schubert.components.size() == 1);
    CHECK(vset(schubert.components[0].vertices) ==
          std::set<IVec>{{0, 0, 0, 0}, {0, 1, 0, 0}, {2, 1, 0, 0}, {1, 0, 0, 0}});

    DegenerationReport opposite = degeneration_report(g, w0, s1s2);
    CHECK(opposite.is_face_union);
    REQUIRE(opposite.components.size() == 1);
    CHECK(vset(opposite.components[0].vertices) ==
          std::set<IVec>{{1, 3, 2, 1}, {2, 3, 1, 0}, {0, 3, 1, 0}, {0, 3, 2, 1}});

    DegenerationReport empty = degeneration_report(g, from_word(b2, {1}), from_word(b2, {1}));
    CHECK(empty.subset_size == 0);
    CHECK(empty.components.empty());
}

TEST_CASE("all richardson subsets are face unions") {
    for (const char* type : {"A2", "B2"}) {
        CartanData c = cartan_preset(type);
        auto [w0, word] = longest_element(c);
        CrystalGraph g = generate(c, word, {1, 1});
        eta_involution(g);
        WordGraph wg = all_reduced_words(c, w0);
        // every Weyl element via reduced_word of prefixes: enumerate all elements
        std::vector<WeylElement> els;
        std::function<void(WeylElement)> rec = [&](WeylElement w) {
            for (const auto& e : els)
                if (e == w) return;
            els.push_back(w);
            for (int i = 1; i <= c.n; ++i) {
                WeylElement nxt = weyl_mul(c, w, simple_reflection(c, i));
                if (nxt.length > w.length) rec(nxt);
            }
        };
        rec(weyl_identity(c));
        for (const auto& w : els)
            for (const auto& tau : els) {
                DegenerationReport rep = degeneration_report(g, w, tau);
                if (w.length + tau.length < (int)word.letters.size())
                    CHECK(rep.subset_size == 0);
                if (rep.subset_size == 0) continue;
                CHECK(rep.is_face_union);
                long long covered = 0;
                std::set<IVec> uni;
                for (const auto& comp : rep.components) covered += comp.lattice_count;
                (void)covered;
                for (const auto& comp : rep.components) {
                    Polytope dummy = hull_of_points(comp.vertices);
                    for (const auto& v : comp.vertices) uni.insert(v);
                }
                for (const auto& v : uni) CHECK(g.index_of(v) >= 0);
            }
    }
}

TEST_CASE("adapted single face check on A3") {
    CartanData c = cartan_preset("A3");
    ReducedWord word = rw(c, standard_word_a(3));
    CrystalGraph g = generate(c, word, {1, 1, 1});
    eta_involution(g);
    auto star = star_involution(c);
    std::vector<int> starred;
    for (int l : word.letters) starred.push_back(star[l - 1]);

    int checked = 0;
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q) {
            std::vector<int> wp(word.letters.begin(), word.letters.begin() + p);
            // tau with starred word adapted to its conjugate: the star of a
            // starred-word prefix is the matching prefix of the plain word
            std::vector<int> tq(starred.begin(), starred.begin() + q);
            std::vector<int> tq_star;
            for (int l : tq) tq_star.push_back(star[l - 1]);
            CHECK(adapted_single_face_check(g, from_word(c, wp), from_word(c, tq_star)));
            ++checked;
        }
    CHECK(checked == 49);

    CHECK_THROWS_AS(adapted_single_face_check(g, from_word(c, {2}), from_word(c, {1})),
                    PreconditionNotMet);
}

TEST_CASE("report json") {
    CartanData c = cartan_preset("A2");
    CrystalGraph g = generate(c, rw(c, {1, 2, 1}), {1, 1});
    eta_involution(g);
    WeylElement s2s1 = from_word(c, {2, 1});
    std::string js = report_to_json(g, degeneration_report(g, s2s1, s2s1));
    CHECK(js.find("\"is_face_union\": true") != std::string::npos);
    CHECK(js.find("\"components\"") != std::string::npos);
}
