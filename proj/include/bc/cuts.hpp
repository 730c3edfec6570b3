#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bc/defining_cuts.hpp"
#include "bc/expr.hpp"
#include "bc/poly.hpp"
#include "bc/solve.hpp"

namespace bc {

enum class CutMethod { RealVariables, RealVariablesSquared, Parametric, SemiAlgebraic };

std::string cut_method_name(CutMethod m);

// Where a cut came from: which subterm, which of its defining cuts, and
// whether it passed through a squaring step.
struct Provenance {
    std::string subterm_path;
    std::string subterm_text;   // unparsed subterm
    int defining_cut_index = 0;
    bool denested = false;      // produced by squaring a radical argument
    CutMethod method = CutMethod::RealVariables;
};

enum class SpuriousKind { DeNesting, Formulation, Both };

std::string spurious_kind_name(SpuriousKind k);

// One classified stretch along a cut's parameter, for mixed verdicts.
struct CutSegment {
    double t0 = 0.0, t1 = 0.0;
    bool is_true = false;
    bool known = true;  // false: probe evidence was indeterminate here
};

struct CutClass {
    enum Verdict { Unclassified, True, Spurious, Mixed } verdict = Unclassified;
    std::optional<SpuriousKind> spurious_kind;
    std::vector<CutSegment> segments;  // Mixed only
    std::string note;
    std::string verdict_name() const;
};

// Curve branch with the dependent coordinate in closed form. The validity
// interval of `branch` is the final restricted interval of the cut.
using RealVariableCut = RadicalSolution;

// Curve z(t) traced as t sweeps `range`; `point` is an expression in the
// real parameter `param`.
struct ParametricCut {
    Expr point;
    std::string param = "t";
    ExtendedInterval range;
    Axis axis = Axis::Real;  // axis of the originating defining cut
};

// Inequality `poly REL bound` over (x, y).
struct SAInequality {
    BivariatePoly poly;
    bool strict = true;  // true: <, false: <=
    Rat bound;
    std::string str() const;
};

// Unsolved exact description: equation = 0 together with inequalities.
struct SemiAlgSystem {
    BivariatePoly equation;
    std::vector<SAInequality> conditions;
    std::string str() const;
};

struct BranchCut {
    enum Form { RealCurve, ParamCurve, SemiAlg } form = RealCurve;
    std::optional<RealVariableCut> curve;
    std::optional<ParametricCut> parametric;
    std::optional<SemiAlgSystem> system;
    Provenance provenance;
    CutClass classification;

    std::string describe() const;
};

struct CutSet {
    std::vector<BranchCut> cuts;
    std::vector<std::string> warnings;
    // Candidate branches discarded by the sign certificate after squaring;
    // kept for reporting.
    std::vector<BranchCut> removed;
};

}  // namespace bc
