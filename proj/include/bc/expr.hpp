#pragma once

#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bc/functions.hpp"
#include "bc/rational.hpp"

namespace bc {

enum class ExprKind { Const, Var, Param, Add, Mul, Pow, Apply };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

// Immutable expression tree over one complex variable plus named real
// parameters. Pow exponents are exact rationals; non-integer exponents are
// radicals. No simplification happens on construction: branch-cut structure
// must survive exactly as written.
struct ExprNode {
    ExprKind kind;
    GaussRat value;               // Const
    std::string name;             // Var / Param
    std::vector<Expr> children;   // Add / Mul
    Expr base;                    // Pow / Apply argument
    Rat exponent;                 // Pow
    FunctionSymbol fn;            // Apply
    std::vector<Expr> fn_params;  // Apply parameter slots (e.g. Bessel order)
};

Expr make_const(GaussRat v);
Expr make_const(Rat v);
Expr make_int(long long v);
Expr make_var(std::string name);
Expr make_param(std::string name);
Expr make_add(std::vector<Expr> terms);
Expr make_mul(std::vector<Expr> factors);
Expr make_pow(Expr base, Rat exponent);
Expr make_apply(FunctionSymbol fn, Expr arg, std::vector<Expr> params = {});

Expr make_neg(Expr e);
Expr make_sub(Expr a, Expr b);
Expr make_div(Expr a, Expr b);
Expr make_sqrt(Expr e);

// Canonical infix form; parse(unparse(e)) reproduces the tree.
std::string unparse(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

// Recursively evaluates constant subexpressions (exact Gaussian-rational
// arithmetic) and drops additive zeros / multiplicative ones. Used to tidy
// machine-built formulas; parsed input is kept verbatim.
Expr fold_constants(const Expr& e);

bool contains_var(const Expr& e);
std::vector<std::string> free_params(const Expr& e);

// True when e is a polynomial/rational function of the variable with
// Gaussian-rational coefficients (integer powers, no function applications
// except none at all).
bool is_rational_in_var(const Expr& e);

// True when e is built from rationals, +,-,*,/ and rational powers of
// rational subexpressions (the radical fragment).
bool is_radical_in_var(const Expr& e);

struct CutBearingSubterm {
    Expr subterm;       // the Apply or non-integer Pow node
    std::string path;   // root-to-node path like "0.1.arg"
};

// Every Apply node whose symbol has (possibly conditional) defining cuts plus
// every Pow node with non-integer exponent, in deterministic left-to-right
// order.
std::vector<CutBearingSubterm> cut_bearing_subterms(const Expr& e);

}  // namespace bc
