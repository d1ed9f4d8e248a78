#include "lift/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lift/tropical.hpp"

namespace lift {

namespace {

using BVec = std::vector<BigInt>;
using BMat = std::vector<BVec>;

BigInt dot(const BVec& a, const BVec& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void make_primitive(BVec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// rank by fraction-free elimination
int bmat_rank(BMat m) {
    int rows = (int)m.size();
    if (rows == 0) return 0;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            BigInt f = m[r][c], p = m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] = m[r][k] * p - m[rank][k] * f;
        }
        ++rank;
    }
    return rank;
}

struct DDState {
    std::vector<BVec> lineality;
    std::vector<BVec> rays;
    std::vector<std::set<int>> tight; // processed constraint indices saturated per ray
};

// intersect the cone with {x : a.x >= 0}, constraint index idx
void dd_step(DDState& s, const BVec& a, int idx) {
    // reduce lineality first
    int pivot = -1;
    for (int i = 0; i < (int)s.lineality.size(); ++i)
        if (dot(a, s.lineality[i]) != 0) { pivot = i; break; }
    if (pivot >= 0) {
        BVec l0 = s.lineality[pivot];
        BigInt al0 = dot(a, l0);
        if (al0 < 0)
            for (auto& x : l0) x = -x;
        al0 = dot(a, l0);
        s.lineality.erase(s.lineality.begin() + pivot);
        for (auto& l : s.lineality) {
            BigInt al = dot(a, l);
            if (al != 0) {
                for (std::size_t k = 0; k < l.size(); ++k) l[k] = al0 * l[k] - al * l0[k];
                make_primitive(l);
            }
        }
        for (std::size_t r = 0; r < s.rays.size(); ++r) {
            BigInt ar = dot(a, s.rays[r]);
            if (ar != 0) {
                for (std::size_t k = 0; k < s.rays[r].size(); ++k)
                    s.rays[r][k] = al0 * s.rays[r][k] - ar * l0[k];
                make_primitive(s.rays[r]);
            }
            s.tight[r].insert(idx);
        }
        s.rays.push_back(l0);
        s.tight.push_back({idx});
        // the new ray saturates no previously processed constraint in general;
        // recompute its tight set exactly below via the caller's bookkeeping
        return;
    }

    std::vector<int> pos, zero, neg;
    std::vector<BigInt> val(s.rays.size());
    for (int r = 0; r < (int)s.rays.size(); ++r) {
        val[r] = dot(a, s.rays[r]);
        if (val[r] > 0) pos.push_back(r);
        else if (val[r] < 0) neg.push_back(r);
        else zero.push_back(r);
    }
    if (neg.empty()) {
        for (int r : zero) s.tight[r].insert(idx);
        return;
    }

    int ambient = (int)a.size();
    int lin = (int)s.lineality.size();
    std::vector<BVec> new_rays;
    std::vector<std::set<int>> new_tight;
    for (int r : pos) { new_rays.push_back(s.rays[r]); new_tight.push_back(s.tight[r]); }
    for (int r : zero) {
        new_rays.push_back(s.rays[r]);
        auto t = s.tight[r];
        t.insert(idx);
        new_tight.push_back(t);
    }
    // adjacent (p, n) pairs combine into rays on the hyperplane
    for (int p : pos)
        for (int n : neg) {
            std::set<int> common;
            std::set_intersection(s.tight[p].begin(), s.tight[p].end(), s.tight[n].begin(),
                                  s.tight[n].end(), std::inserter(common, common.begin()));
            // algebraic adjacency: the common tight constraints plus the
            // lineality complement must cut a 2-dimensional cell
            bool adjacent = true;
            if ((int)common.size() < ambient - lin - 2) adjacent = false;
            if (adjacent) {
                // no third ray may saturate every common constraint
                for (int r = 0; r < (int)s.rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (std::includes(s.tight[r].begin(), s.tight[r].end(), common.begin(),
                                      common.end()))
                        adjacent = false;
                }
            }
            if (!adjacent) continue;
            BVec nr(ambient);
            for (int k = 0; k < ambient; ++k)
                nr[k] = val[p] * s.rays[n][k] - val[n] * s.rays[p][k];
            make_primitive(nr);
            std::set<int> t = common;
            t.insert(idx);
            new_rays.push_back(nr);
            new_tight.push_back(t);
        }
    s.rays = new_rays;
    s.tight = new_tight;
}

long long to_ll(const BigInt& v) { return (long long)v; }

} // namespace

int Polytope::point_index(const IVec& p) const {
    auto it = std::lower_bound(lattice_points.begin(), lattice_points.end(), p);
    if (it == lattice_points.end() || *it != p) return -1;
    return (int)(it - lattice_points.begin());
}

Polytope hull_of_points(const std::vector<IVec>& points, int max_dim) {
    if (points.empty()) throw ValidationFailed("hull of an empty point set");
    int d = (int)points[0].size();
    if (d > max_dim) throw DimensionTooLarge("ambient dimension exceeds the hull guard");
    for (const auto& p : points)
        if ((int)p.size() != d) throw DimensionMismatch("mixed point dimensions");

    std::vector<IVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // dual cone of the homogenized points (1, p): rays = facets, lineality =
    // affine-hull equations
    DDState s;
    for (int k = 0; k <= d; ++k) {
        BVec e(d + 1, 0);
        e[k] = 1;
        s.lineality.push_back(e);
    }
    std::vector<BVec> constraints;
    for (const auto& p : pts) {
        BVec g(d + 1);
        g[0] = 1;
        for (int k = 0; k < d; ++k) g[k + 1] = p[k];
        constraints.push_back(g);
    }
    for (int i = 0; i < (int)constraints.size(); ++i) {
        dd_step(s, constraints[i], i);
        // keep tight sets exact (the lineality branch cannot infer them)
        for (int r = 0; r < (int)s.rays.size(); ++r)
            for (int j = 0; j <= i; ++j) {
                if (dot(s.rays[r], constraints[j]) == 0) s.tight[r].insert(j);
                else s.tight[r].erase(j);
            }
    }

    Polytope out;
    out.dim = d;
    out.lattice_points = pts;
    for (const auto& l : s.lineality) {
        Inequality eq;
        eq.offset = -to_ll(l[0]);
        for (int k = 0; k < d; ++k) eq.normal.push_back(to_ll(l[k + 1]));
        out.equations.push_back(eq);
    }
    for (const auto& r : s.rays) {
        Inequality in;
        in.offset = -to_ll(r[0]);
        for (int k = 0; k < d; ++k) in.normal.push_back(to_ll(r[k + 1]));
        // drop the trivial homogenization facet (no dependence on x)
        bool zero_normal = std::all_of(in.normal.begin(), in.normal.end(),
                                       [](long long v) { return v == 0; });
        if (!zero_normal) out.h_rep.push_back(in);
    }
    std::sort(out.h_rep.begin(), out.h_rep.end(), [](const Inequality& a, const Inequality& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });

    // verify and record tight sets
    out.tight.resize(pts.size());
    for (int i = 0; i < (int)pts.size(); ++i) {
        for (const auto& eq : out.equations) {
            long long v = std::inner_product(eq.normal.begin(), eq.normal.end(),
                                             pts[i].begin(), 0LL);
            if (v != eq.offset) throw ValidationFailed("affine hull equation violated");
        }
        for (int h = 0; h < (int)out.h_rep.size(); ++h) {
            long long v = std::inner_product(out.h_rep[h].normal.begin(),
                                             out.h_rep[h].normal.end(), pts[i].begin(), 0LL);
            if (v < out.h_rep[h].offset) throw ValidationFailed("hull inequality violated");
            if (v == out.h_rep[h].offset) out.tight[i].push_back(h);
        }
    }

    // vertices: points whose tight normals plus the equations have full rank
    for (int i = 0; i < (int)pts.size(); ++i) {
        BMat m;
        for (const auto& eq : out.equations) {
            BVec row;
            for (long long v : eq.normal) row.push_back(v);
            m.push_back(row);
        }
        for (int h : out.tight[i]) {
            BVec row;
            for (long long v : out.h_rep[h].normal) row.push_back(v);
            m.push_back(row);
        }
        if (bmat_rank(m) == d) out.v_rep.push_back(pts[i]);
    }
    return out;
}

Polytope string_polytope(const CrystalGraph& g, int max_dim) {
    std::vector<IVec> pts;
    for (const auto& el : g.elements) pts.push_back(el.string_coords);
    return hull_of_points(pts, max_dim);
}

namespace {

// lattice points whose tight set contains the mask
std::vector<int> face_point_ids(const Polytope& p, const std::vector<int>& mask) {
    std::vector<int> out;
    for (int i = 0; i < (int)p.lattice_points.size(); ++i)
        if (std::includes(p.tight[i].begin(), p.tight[i].end(), mask.begin(), mask.end()))
            out.push_back(i);
    return out;
}

} // namespace

FaceUnionResult face_union_test(const Polytope& p, const std::vector<IVec>& subset) {
    FaceUnionResult res;
    std::set<int> subset_ids;
    for (const auto& q : subset) {
        int id = p.point_index(q);
        if (id < 0) throw PreconditionNotMet("subset point is not a lattice point of the hull");
        subset_ids.insert(id);
    }

    // minimal faces of the subset points must stay inside the subset
    std::vector<std::vector<int>> face_masks;
    std::vector<std::vector<int>> face_ids;
    for (int gamma : subset_ids) {
        const std::vector<int>& mask = p.tight[gamma];
        std::vector<int> ids = face_point_ids(p, mask);
        for (int id : ids)
            if (!subset_ids.count(id)) {
                res.pass = false;
                res.witness_subset_point = p.lattice_points[gamma];
                res.witness_missing = p.lattice_points[id];
                return res;
            }
        if (std::find(face_masks.begin(), face_masks.end(), mask) == face_masks.end()) {
            face_masks.push_back(mask);
            face_ids.push_back(ids);
        }
    }
    res.pass = true;

    // close under joins: the face generated by two admissible faces is kept
    // whenever its lattice points stay inside the subset
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t a = 0; a < face_masks.size(); ++a)
            for (std::size_t b = a + 1; b < face_masks.size(); ++b) {
                std::vector<int> m;
                std::set_intersection(face_masks[a].begin(), face_masks[a].end(),
                                      face_masks[b].begin(), face_masks[b].end(),
                                      std::back_inserter(m));
                if (std::find(face_masks.begin(), face_masks.end(), m) != face_masks.end())
                    continue;
                std::vector<int> ids = face_point_ids(p, m);
                bool inside = std::all_of(ids.begin(), ids.end(),
                                          [&](int id) { return subset_ids.count(id) > 0; });
                if (inside) {
                    face_masks.push_back(m);
                    face_ids.push_back(ids);
                    grew = true;
                }
            }
    }

    // keep maximal faces only, compared by their point sets
    std::vector<char> dominated(face_ids.size(), 0);
    for (std::size_t a = 0; a < face_ids.size(); ++a)
        for (std::size_t b = 0; b < face_ids.size(); ++b) {
            if (a == b || dominated[a]) continue;
            if (face_ids[a] == face_ids[b]) {
                if (b < a) dominated[a] = 1;
            } else if (std::includes(face_ids[b].begin(), face_ids[b].end(),
                                     face_ids[a].begin(), face_ids[a].end())) {
                dominated[a] = 1;
            }
        }
    for (std::size_t a = 0; a < face_ids.size(); ++a) {
        if (dominated[a]) continue;
        res.faces.masks.push_back(face_masks[a]);
        std::vector<IVec> pts;
        for (int id : face_ids[a]) pts.push_back(p.lattice_points[id]);
        res.faces.points.push_back(pts);
    }
    return res;
}

DegenerationReport degeneration_report(const CrystalGraph& g, const WeylElement& w,
                                       const WeylElement& tau) {
    DegenerationReport rep;
    rep.w_word = reduced_word_of(g.cartan, w).letters;
    rep.tau_word = reduced_word_of(g.cartan, tau).letters;
    std::vector<int> subset = richardson_subset(g, w, tau);
    rep.subset_size = (long long)subset.size();
    if (subset.empty()) {
        rep.is_face_union = true;
        return rep;
    }
    Polytope p = string_polytope(g);
    std::vector<IVec> pts;
    for (int id : subset) pts.push_back(g.elements[id].string_coords);
    FaceUnionResult fu = face_union_test(p, pts);
    rep.is_face_union = fu.pass;
    if (!fu.pass) return rep;
    for (std::size_t k = 0; k < fu.faces.masks.size(); ++k) {
        DegenComponent comp;
        comp.tight_mask = fu.faces.masks[k];
        comp.lattice_count = (long long)fu.faces.points[k].size();
        Polytope face_hull = hull_of_points(fu.faces.points[k]);
        comp.vertices = face_hull.v_rep;
        comp.dimension = g.word.letters.empty() ? 0
                                                : (int)g.word.letters.size() -
                                                      (int)face_hull.equations.size();
        rep.components.push_back(comp);
    }
    return rep;
}

bool adapted_single_face_check(const CrystalGraph& g, const WeylElement& w,
                               const WeylElement& tau) {
    const CartanData& c = g.cartan;
    if (g.word.letters != standard_word_a(c.n))
        throw PreconditionNotMet("check requires the standard word");
    auto star = star_involution(c);
    std::vector<int> prefix(g.word.letters.begin(), g.word.letters.begin() + w.length);
    if (weyl_from_word(c, prefix) != w || !is_reduced_word(c, prefix))
        throw PreconditionNotMet("word is not adapted to w");
    // the Richardson computation consults the Demazure set of w0.tau.w0, so
    // the adaptedness hypothesis applies to that element
    auto [w0, w0word] = longest_element(c);
    WeylElement tau_star = weyl_mul(c, weyl_mul(c, w0, tau), w0);
    std::vector<int> starred;
    for (int l : g.word.letters) starred.push_back(star[l - 1]);
    std::vector<int> sprefix(starred.begin(), starred.begin() + tau_star.length);
    if (weyl_from_word(c, sprefix) != tau_star || !is_reduced_word(c, sprefix))
        throw PreconditionNotMet("starred word is not adapted to the tau conjugate");

    DegenerationReport rep = degeneration_report(g, w, tau);
    if (rep.subset_size == 0) return true;
    return rep.is_face_union && rep.components.size() == 1;
}

std::string report_to_json(const CrystalGraph& g, const DegenerationReport& r) {
    nlohmann::json j;
    j["lambda"] = g.lambda;
    j["word"] = g.word.letters;
    j["w"] = r.w_word;
    j["tau"] = r.tau_word;
    j["subset_size"] = r.subset_size;
    j["is_face_union"] = r.is_face_union;
    j["components"] = nlohmann::json::array();
    for (const auto& comp : r.components) {
        nlohmann::json c;
        c["dimension"] = comp.dimension;
        c["tight_mask"] = comp.tight_mask;
        c["vertices"] = comp.vertices;
        c["lattice_count"] = comp.lattice_count;
        j["components"].push_back(c);
    }
    return j.dump(2);
}

} // namespace lift
