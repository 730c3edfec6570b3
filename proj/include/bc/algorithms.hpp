#pragma once

#include <map>
#include <string>

#include "bc/cuts.hpp"
#include "bc/expr.hpp"

namespace bc {

enum class Method { Auto, Real, Parametric };

struct AnalyzeOptions {
    Method method = Method::Auto;
    // Emit unsolved semi-algebraic systems instead of solving.
    bool semialgebraic = false;
    // Discard squared-system branches on which the argument provably misses
    // the defining cut.
    bool remove_denested_branches = true;
    // Bound values for named parameters (e.g. a Bessel order).
    std::map<std::string, double> param_values;
    // Name of the sweep parameter introduced by the parametric method.
    std::string sweep_param = "t";
};

struct NotSupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cuts of a single function application with an argument rational in the
// variable, by solving the real/imaginary constraint system at z = x + i y.
CutSet bc_f_rv1(const Expr& apply_node, const AnalyzeOptions& opts = {});

// Cuts of a function application whose argument is a radical: square the
// argument, transfer the range constraint through the squaring, solve, then
// discard branches failing the sign certificate; unions in the cuts of the
// argument's own subterms.
CutSet bc_f_rv2(const Expr& apply_node, const AnalyzeOptions& opts = {});

// Cuts of a function application as parametric curves z(t): substitute
// argument = t (or i t) over the defining range and solve for z in closed
// form; unions in the argument subterm cuts.
CutSet bc_f_cv(const Expr& apply_node, const AnalyzeOptions& opts = {});

// Exact unsolved semi-algebraic systems for every defining cut of the node.
CutSet bc_f_sa(const Expr& apply_node, const AnalyzeOptions& opts = {});

// Union of the cuts of every cut-bearing subterm of the expression,
// dispatching per subterm on the options' method.
CutSet bc_c(const Expr& expr, const AnalyzeOptions& opts = {});

}  // namespace bc
