#pragma once

#include "lift/crystal.hpp"

namespace lift {

/// normal . x >= offset
struct Inequality {
    IVec normal;
    long long offset = 0;
    bool operator==(const Inequality& o) const {
        return normal == o.normal && offset == o.offset;
    }
};

/// Convex hull of a finite set of lattice points, with exact facet data and
/// per-point tight sets. Not necessarily full-dimensional; the affine hull is
/// carried as a list of equations.
struct Polytope {
    int dim = 0;
    std::vector<Inequality> h_rep;
    std::vector<Inequality> equations; // normal . x == offset on the whole polytope
    std::vector<IVec> v_rep;           // vertices, always lattice points here
    std::vector<IVec> lattice_points;  // sorted
    std::vector<std::vector<int>> tight; // per lattice point, sorted h_rep indices

    int point_index(const IVec& p) const; // -1 if absent
};

/// Exact hull via double description of the dual cone. Ambient dimension
/// capped at 8 by default.
Polytope hull_of_points(const std::vector<IVec>& points, int max_dim = 8);

/// Hull of the string coordinates of all crystal elements.
Polytope string_polytope(const CrystalGraph& g, int max_dim = 8);

struct FaceSet {
    // maximal faces as sorted tight-index masks, with their lattice points
    std::vector<std::vector<int>> masks;
    std::vector<std::vector<IVec>> points;
};

struct FaceUnionResult {
    bool pass = false;
    FaceSet faces;
    IVec witness_subset_point; // gamma whose minimal face leaks, when !pass
    IVec witness_missing;      // a point of that face outside the subset
};

/// True iff the subset is exactly a union of faces: the minimal face of each
/// subset point must stay inside the subset.
FaceUnionResult face_union_test(const Polytope& p, const std::vector<IVec>& subset);

struct DegenComponent {
    std::vector<int> tight_mask;
    int dimension = 0;
    std::vector<IVec> vertices;
    long long lattice_count = 0;
};

struct DegenerationReport {
    std::vector<int> w_word, tau_word;
    long long subset_size = 0;
    bool is_face_union = false;
    std::vector<DegenComponent> components;
};

/// Richardson subset of the crystal, then the face-union decomposition of its
/// string coordinates inside the string polytope.
DegenerationReport degeneration_report(const CrystalGraph& g, const WeylElement& w,
                                       const WeylElement& tau);

/// Checks the one-face property for a type-A crystal on the standard word,
/// with the word adapted to w and its star adapted to tau.
bool adapted_single_face_check(const CrystalGraph& g, const WeylElement& w,
                               const WeylElement& tau);

std::string report_to_json(const CrystalGraph& g, const DegenerationReport& r);

} // namespace lift
