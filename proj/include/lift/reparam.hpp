#pragma once

#include "lift/tropical.hpp"

namespace lift {

enum class Flavor { String, Lusztig };

struct ParamVector {
    Flavor flavor = Flavor::String;
    ReducedWord word;
    IVec coords;
};

/// Piecewise-linear local reparametrization for one rank-2 braid move.
/// A block (i, j, i, ...) of the word is rewritten to (j, i, j, ...); the
/// moves are stored per source block, keyed by which local letter starts it.
/// "Local letter 1" is the one with Cartan entries a_{12} = -1, a_{21} = -2
/// in the B2 case (both letters are equivalent for A1xA1 and A2).
struct Rank2MoveTable {
    Rank2Type local_type = Rank2Type::A2;
    std::string provenance; // "paper" or "derived"
    std::vector<PLExpr> string_from_1, string_from_2;
    std::vector<PLExpr> lusztig_from_1, lusztig_from_2;
};

/// Moves known from closed formulas: A1xA1 (swap) and A2.
Rank2MoveTable builtin_move_table(Rank2Type t); // UnsupportedLocalType for B2/G2

/// Registry consulted by transition(); starts with the builtin tables.
void register_move_table(const Rank2MoveTable& table);
const Rank2MoveTable& move_table(Rank2Type t); // UnsupportedLocalType if absent
bool has_move_table(Rank2Type t);

/// Applies the local move for the block of `word` starting at `pos` (0-based).
IVec local_move(const CartanData& c, const Rank2MoveTable& table, Flavor flavor,
                const std::vector<int>& word, int pos, const IVec& block_coords);

/// Reparametrizes p to the target word along a chain of braid moves.
ParamVector transition(const CartanData& c, const ParamVector& p,
                       const ReducedWord& target_word);

/// t'_k = lambda_{i_k} - t_k - sum_{j>k} a_{i_k i_j} t_j, retagged to word i*.
ParamVector omega(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                  const IVec& t);

/// Same affine formula as omega but the result keeps the word tag i.
ParamVector phi_forward(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                        const IVec& t);

/// t_k = <lambda, beta_k^vee> - t'_k - sum_{j>k} <beta_j, beta_k^vee> t'_j.
ParamVector phi_inverse(const CartanData& c, const ReducedWord& word, const IVec& lambda,
                        const IVec& t_prime);

/// Linear part of the string-to-Lusztig change: t'_k = -t_k - sum_{j>k} a_{i_j i_k} t_j;
/// with dual=true the transposed entries a_{i_k i_j} are used.
IVec zeta_tropical(const CartanData& c, const ReducedWord& word, const IVec& t, bool dual);

} // namespace lift
