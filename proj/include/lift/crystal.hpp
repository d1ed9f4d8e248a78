#pragma once

#include "lift/reparam.hpp"

namespace lift {

struct CrystalElement {
    int id = 0;
    IVec string_coords; // in the graph's canonical word
    IVec weight;        // fundamental coordinates
};

struct CrystalGraph {
    CartanData cartan;
    ReducedWord word; // canonical word for w0
    IVec lambda;
    std::vector<CrystalElement> elements; // sorted by string coordinates
    std::vector<std::vector<int>> f_edges; // f_edges[id][i-1] = target id or -1
    std::vector<int> eta_pairing;          // empty until eta_involution() runs
    int highest = 0, lowest = 0;

    int index_of(const IVec& coords) const; // -1 if absent
};

/// Breadth-first closure from the highest-weight string 0 under the f_i.
CrystalGraph generate(const CartanData& c, const ReducedWord& word, const IVec& lambda);

/// String coordinates of an element in another reduced word for w0.
IVec string_in_word(const CrystalGraph& g, int id, const std::vector<int>& target_word);

/// The unique pairing with eta(highest) = lowest and eta(f_i b) = e_{i*}(eta b);
/// stored on the graph and returned.
std::vector<int> eta_involution(CrystalGraph& g);

/// Lusztig parameters of an element in the requested word, via the affine
/// Schuetzenberger formula applied to the starred string coordinates.
ParamVector lusztig_params(const CrystalGraph& g, int id, const ReducedWord& word);

/// Ids whose string coordinates in a word adapted to w vanish beyond the
/// first length(w) positions.
std::vector<int> demazure_subset(const CrystalGraph& g, const WeylElement& w);

/// demazure_subset(w) intersected with the eta image of demazure_subset(tau).
std::vector<int> richardson_subset(const CrystalGraph& g, const WeylElement& w,
                                   const WeylElement& tau);

struct TableauA {
    IVec shape;                         // fundamental coordinates
    std::vector<std::vector<int>> rows; // weakly increasing; columns strict
    bool operator==(const TableauA& o) const { return shape == o.shape && rows == o.rows; }
    bool operator<(const TableauA& o) const { return rows < o.rows; }
};

/// The standard reduced word (1, 2,1, 3,2,1, ..., n,...,1) for type A_n.
std::vector<int> standard_word_a(int n);

/// Reconstructs the semistandard tableau from string coordinates; requires
/// type A and the standard word.
TableauA tableau_of(const CrystalGraph& g, int id);

/// Independent brute-force enumeration of semistandard tableaux of the shape,
/// entries bounded by n+1.
std::vector<TableauA> ssyt_enumerate(int n, const IVec& shape);

std::string crystal_to_dot(const CrystalGraph& g);
std::string crystal_to_json(const CrystalGraph& g);

} // namespace lift
