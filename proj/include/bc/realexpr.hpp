#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bc/poly.hpp"
#include "bc/rational.hpp"

namespace bc {

// Closed-form real expression in one free real coordinate, built from
// rationals, surd constants, +,-,*,/ and square roots. This is the language
// radical solutions are written in (nesting depth <= 2 in practice).
struct RealExprNode;
using RealExpr = std::shared_ptr<const RealExprNode>;

struct RealExprNode {
    enum Kind { Const, SurdConst, Var, Add, Mul, Div, Sqrt } kind;
    Rat value;                       // Const; SurdConst holds sqrt(value)
    std::vector<RealExpr> children;  // Add / Mul
    RealExpr a, b;                   // Div: a/b; Sqrt: a
};

RealExpr re_const(Rat v);
RealExpr re_surd(Rat k);  // sqrt(k), k > 0
RealExpr re_var();
RealExpr re_add(std::vector<RealExpr> terms);
RealExpr re_mul(std::vector<RealExpr> factors);
RealExpr re_div(RealExpr a, RealExpr b);
RealExpr re_sqrt(RealExpr a);
RealExpr re_neg(RealExpr a);
RealExpr re_from_poly(const UnivariatePoly& p);

// NaN when a radicand is negative or a denominator vanishes.
double re_eval(const RealExpr& e, double t);

std::string re_str(const RealExpr& e, const std::string& var);

bool re_equal(const RealExpr& a, const RealExpr& b);

// Depth of sqrt nesting (surd constants do not count).
int re_sqrt_depth(const RealExpr& e);

}  // namespace bc
