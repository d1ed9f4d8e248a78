#pragma once

#include "lift/poly.hpp"
#include "lift/reparam.hpp"

namespace lift {

using RMat = std::vector<std::vector<RatFun>>;

RMat rmat_identity(int dim, int nvars);
RMat rmat_mul(const RMat& a, const RMat& b);
RMat rmat_transpose(const RMat& a);
RMat rmat_inverse(const RMat& a); // adjugate route; throws Error if det = 0
RatFun rmat_det(const RMat& a);
bool rmat_equal(const RMat& a, const RMat& b);

/// One-parameter subgroup data for a matrix realization of a semisimple
/// group: nilpotent raising/lowering matrices (squaring to zero in the
/// chosen representation) and coroot exponents for the torus.
struct GenSet {
    CartanData cartan;
    int dim = 0;
    std::vector<IMat> e, f; // e[i], f[i] for the (i+1)-th simple root
    std::vector<IVec> h;    // t^{alpha_i^vee} = diag(t^{h[i][r]})
};

GenSet sl_gens(int n); // SL_{n+1}, Cartan type A_n

/// Sp_4 in its defining representation; Cartan matrix [[2,-2],[-1,2]],
/// the Langlands dual of the B2 preset. Matrices are the standard Chevalley
/// generators for the antidiagonal symplectic form (external textbook data).
GenSet sp4_gens();

RMat gen_x(const GenSet& g, int i, const RatFun& t); // i 1-based
RMat gen_y(const GenSet& g, int i, const RatFun& t);
RMat gen_torus(const GenSet& g, int i, const RatFun& t, int power_sign);

/// x_word: product x_{i_1}(t_{v_1}) ... x_{i_m}(t_{v_m}) over nvars variables,
/// with variable indices var_of[k] (0-based); x_neg_word uses the
/// y_i(t) t^{-alpha_i^vee} factors instead.
RMat x_word(const GenSet& g, const std::vector<int>& word, int nvars,
            const std::vector<int>& var_of);
RMat x_neg_word(const GenSet& g, const std::vector<int>& word, int nvars,
                const std::vector<int>& var_of);

struct GroupElementA {
    int size = 0;
    RMat m;
};

GroupElementA build_word_matrix(const GenSet& g, const std::vector<int>& word, bool negative);

struct GaussTriple {
    GroupElementA lower, torus, upper;
};

GaussTriple gauss_decompose(const GroupElementA& x); // NotInG0 on vanishing pivot

RMat w0bar(const GenSet& g);

/// The maps of the double Bruhat cell story, at matrix level (type A only;
/// they use the inversion antiautomorphism x^iota = D x^{-1} D^{-1} with
/// D = diag(1,-1,1,...)).
GroupElementA zeta_map(const GenSet& g, const GroupElementA& x);
GroupElementA zeta_inverse(const GenSet& g, const GroupElementA& x);
GroupElementA eta_w0e(const GenSet& g, const GroupElementA& x);
GroupElementA eta_e_w0(const GenSet& g, const GroupElementA& x);
GroupElementA xi_map(const GenSet& g, const GroupElementA& x);

/// Solves prod_k x_{word_k}(u_k) = target (or the y t^{-alpha^vee} product
/// when negative) for the u_k as rational functions of the target's
/// variables. Elimination uses single entries and cross-multiplied entry
/// ratios, never generic inversion, and verifies the full matrix at the end.
std::vector<RatFun> solve_word_params(const GenSet& g, const std::vector<int>& word,
                                      bool negative, const RMat& target, int nvars);

/// Components of x_{to}^{-1} o x_{from} (negative=false) or
/// x_{-to}^{-1} o x_{-from} (negative=true) in variables t_1..t_N.
std::vector<RatFun> transition_components(const GenSet& g, const std::vector<int>& from,
                                          const std::vector<int>& to, bool negative);

/// Components of x_{to}^{-1} o zeta o x_{-from}.
std::vector<RatFun> zeta_components(const GenSet& g, const std::vector<int>& from,
                                    const std::vector<int>& to);

/// Components of x_{to}^{-1} o eta^{w0,e} o x_{-from}.
std::vector<RatFun> eta_w0e_components(const GenSet& g, const std::vector<int>& from,
                                       const std::vector<int>& to);

/// Components of x_{to}^{-1} o xi o x_{-from} (equals zeta on the starred word).
std::vector<RatFun> xi_components(const GenSet& g, const std::vector<int>& from,
                                  const std::vector<int>& to);

struct BridgeComponent {
    int component = 0;
    bool pass = false;
    IVec witness;
};

struct BridgeReport {
    bool pass = true;
    long long radius = 0;
    std::vector<BridgeComponent> components;
};

/// Tropicalizes each symbolic component and compares with the expected
/// piecewise-linear map on a box.
BridgeReport tropical_bridge(const std::vector<RatFun>& symbolic,
                             const std::vector<PLExpr>& expected, long long radius);

/// Derives the string and Lusztig local moves for a non-simply-laced rank-2
/// type by symbolic computation in the Langlands dual group, then
/// tropicalization. Supported: B2 (via Sp4). G2 raises UnsupportedLocalType.
/// A1xA1/A2 return the builtin tables.
Rank2MoveTable derive_rank2_moves(Rank2Type t);

} // namespace lift
