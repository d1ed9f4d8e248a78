#pragma once

#include <memory>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lift/rootdata.hpp"

namespace lift {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Subtraction-free expression: a tree over {add, mul, div} with leaves that
/// are variables t_1..t_N or positive rational constants. Immutable, shared.
struct SFNode;
using SFExpr = std::shared_ptr<const SFNode>;

enum class SFOp { Add, Mul, Div, Var, Const };

struct SFNode {
    SFOp op;
    SFExpr left, right; // unused for leaves
    int var = 0;        // 1-based, for Var
    BigRat value;       // for Const, > 0
};

SFExpr sf_var(int i);
SFExpr sf_const(const BigRat& v); // throws ValidationFailed unless v > 0
SFExpr sf_add(SFExpr a, SFExpr b);
SFExpr sf_mul(SFExpr a, SFExpr b);
SFExpr sf_div(SFExpr a, SFExpr b);
SFExpr sf_pow(SFExpr a, int k); // k >= 1, repeated multiplication

int sf_num_vars(const SFExpr& e);
BigRat sf_evaluate(const SFExpr& e, const std::vector<BigRat>& t);
std::string sf_to_string(const SFExpr& e);

/// Grammar: identifiers t1..tN, positive integer literals, + * / ^ and
/// parentheses. Juxtaposition is not supported; '*' is required.
SFExpr sf_parse(const std::string& text);

/// Min-plus expression: a tree over {min, plus, minus} with leaves that are
/// projections p_1..p_N or the constant 0. Total on integer vectors.
struct PLNode;
using PLExpr = std::shared_ptr<const PLNode>;

enum class PLOp { Min, Plus, Minus, Proj, Zero };

struct PLNode {
    PLOp op;
    PLExpr left, right;
    int var = 0; // 1-based, for Proj
};

PLExpr pl_proj(int i);
PLExpr pl_zero();
PLExpr pl_min(PLExpr a, PLExpr b);
PLExpr pl_plus(PLExpr a, PLExpr b);
PLExpr pl_minus(PLExpr a, PLExpr b);

int pl_num_vars(const PLExpr& f);
BigInt pl_evaluate(const PLExpr& f, const IVec& t);
std::string pl_to_json(const PLExpr& f);

/// Node-wise semifield homomorphism: add -> min, mul -> plus, div -> minus,
/// t_i -> p_i, positive constant -> 0.
PLExpr tropicalize(const SFExpr& e);

struct BoxCheck {
    bool equal = true;
    IVec witness; // first counterexample when equal is false
};

/// Compares f and g pointwise on the integer box [-radius, radius]^N where
/// N = max of the two variable counts.
BoxCheck pl_equal_on_box(const PLExpr& f, const PLExpr& g, long long radius);

} // namespace lift
