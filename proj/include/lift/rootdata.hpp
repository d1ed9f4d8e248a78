#pragma once

#include <string>
#include <vector>

#include "lift/errors.hpp"

namespace lift {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

IMat identity_mat(int n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_apply(const IMat& m, const IVec& v);
long long det_mat(const IMat& m);
IMat adjugate_mat(const IMat& m);

/// Validated finite-type Cartan data. Rank n, entries a[i][j] = a_{ij}
/// (0-based storage, 1-based indices in the public word/weight APIs),
/// minimal positive symmetrizers d, and N = number of positive roots.
struct CartanData {
    int n = 0;
    IMat a;
    IVec d;
    int num_pos_roots = 0;

    // cached helpers
    IMat adj;                   // adjugate of a; det(a) > 0 in finite type
    std::vector<IVec> pos_roots; // simple-root coordinates

    // alpha_i as a weight-lattice vector (fundamental coordinates), i 1-based
    IVec alpha_weight(int i) const;
    // alpha_i^vee pairing with a weight vector: <lambda, alpha_i^vee> = lambda_i
    long long pair_simple_coroot(const IVec& lambda_fund, int i) const {
        return lambda_fund.at(i - 1);
    }
};

CartanData validate_cartan(const IMat& matrix);
// Named presets: "A1".."A9", "B2", "G2".
CartanData cartan_preset(const std::string& name);

struct WeylElement {
    IMat action; // on the weight lattice, fundamental-weight coordinates
    int length = 0;
    bool operator==(const WeylElement& o) const { return action == o.action; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

struct ReducedWord {
    std::vector<int> letters; // 1-based simple-reflection indices
    WeylElement target;
};

WeylElement weyl_identity(const CartanData& c);
WeylElement simple_reflection(const CartanData& c, int i);
WeylElement weyl_mul(const CartanData& c, const WeylElement& u, const WeylElement& v);
WeylElement weyl_from_word(const CartanData& c, const std::vector<int>& letters);
IVec weyl_apply(const WeylElement& w, const IVec& weight);

// true iff w(alpha_i) is a positive root
bool sends_alpha_positive(const CartanData& c, const WeylElement& w, int i);
int weyl_length(const CartanData& c, const IMat& action);
bool is_reduced_word(const CartanData& c, const std::vector<int>& letters);

std::pair<WeylElement, ReducedWord> longest_element(const CartanData& c);
std::vector<int> star_involution(const CartanData& c); // star[i-1] = i^*

enum class Rank2Type { A1xA1, A2, B2, G2 };
Rank2Type rank2_type(const CartanData& c, int i, int j);
int braid_order(const CartanData& c, int i, int j); // order of s_i s_j: 2,3,4,6

struct WordGraphEdge {
    int to = 0;   // index of the adjacent word
    int pos = 0;  // 0-based start position of the braid subword
    Rank2Type type = Rank2Type::A2;
};

struct WordGraph {
    std::vector<std::vector<int>> words;
    std::vector<std::vector<WordGraphEdge>> edges;
    int index_of(const std::vector<int>& word) const; // -1 if absent
};

WordGraph all_reduced_words(const CartanData& c, const WeylElement& w,
                            std::size_t guard = 100000);

// One reduced word for w, deterministic (smallest left descent first).
ReducedWord reduced_word_of(const CartanData& c, const WeylElement& w);
// A reduced word for w0 whose length(w)-prefix is reduced for w.
ReducedWord extend_adapted(const CartanData& c, const WeylElement& w);

struct RootSequence {
    ReducedWord word;
    std::vector<IVec> beta;      // simple-root coordinates
    std::vector<IVec> beta_covee; // simple-coroot coordinates
    IMat pairing;                // pairing[k][j] = <beta_k, beta_j^vee>
};

RootSequence positive_root_sequence(const CartanData& c, const ReducedWord& word);
// l'(lambda)_k = <lambda, beta_k^vee> for dominant lambda in fundamental coords
IVec string_lowest_params(const CartanData& c, const RootSequence& rs, const IVec& lambda);

// Weyl dimension formula, exact. Independent size oracle for crystals.
long long weyl_dimension(const CartanData& c, const IVec& lambda);

} // namespace lift
