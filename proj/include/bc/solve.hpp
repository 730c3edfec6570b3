#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bc/expr.hpp"
#include "bc/interval.hpp"
#include "bc/poly.hpp"
#include "bc/realexpr.hpp"

namespace bc {

// One solution branch of a bivariate equation: the dependent coordinate as a
// closed-form radical expression of the free one, real-valued on the
// interior of its validity interval.
struct RadicalSolution {
    bool dependent_is_x = false;  // false: y = f(x); true: x = f(y)
    RealExpr expr;
    ExtendedInterval validity;
    BivariatePoly factor;  // defining polynomial relation (canonical)
    int branch_index = 0;

    char dependent() const { return dependent_is_x ? 'x' : 'y'; }
    char free_var() const { return dependent_is_x ? 'y' : 'x'; }
    // Point on the curve at free coordinate t: (x, y).
    std::pair<double, double> point(double t) const {
        double d = re_eval(expr, t);
        return dependent_is_x ? std::pair<double, double>{d, t}
                              : std::pair<double, double>{t, d};
    }
    std::string str() const;
};

struct Unsolved {
    std::string reason;
    BivariatePoly factor;
};

struct SolveOutcome {
    std::vector<RadicalSolution> solutions;
    std::vector<Unsolved> unsolved;
    bool complete() const { return unsolved.empty(); }
};

// Solve p(x, y) = 0 for one coordinate in terms of the other. Factors out
// monomials and content, then applies the linear/quadratic formula per
// factor (biquadratic factors via the substitution d^2 = t, nesting one more
// square root). Factors of degree >= 3 in both coordinates are reported
// Unsolved. `prefer_x` is the tie-break orientation when both coordinates
// are solvable with full-line validity.
SolveOutcome solve_for_variable(const BivariatePoly& p, bool prefer_x = true);

// Polynomial inequality h REL 0 over (x, y).
struct PolyInequality {
    BivariatePoly h;
    bool strict = true;  // true: h < 0, false: h <= 0
};

// Sub-intervals of the solution's validity interval on which every
// inequality holds. Breakpoints are located exactly via resultants with the
// solution's defining factor; adjacent kept intervals separated only by an
// even-contact touch point are merged.
std::vector<ExtendedInterval> restrict_by_inequalities(
    const RadicalSolution& sol, const std::vector<PolyInequality>& ineqs);

// Closed-form roots z(a) of sum_k coeff[k] * z^k = 0 where each coefficient
// is an expression in the real parameter a (degree <= 4; linear, quadratic,
// Cardano, Ferrari). Each root is an Expr whose variable is the parameter.
struct ParamSolveOutcome {
    std::vector<Expr> roots;
    std::optional<std::string> warning;  // set when completeness is not guaranteed
};
ParamSolveOutcome solve_in_z_with_parameter(const std::vector<Expr>& coeffs,
                                            const std::string& param_var);

}  // namespace bc
