#pragma once

#include <map>
#include <string>
#include <vector>

#include "bc/cuts.hpp"
#include "bc/eval.hpp"

namespace bc {

struct ClassifyOptions {
    double eps = 1e-6;                  // offset along the normal
    int samples = 33;                   // Chebyshev-spaced probe count
    double jump_threshold = 1e-3;       // above: discontinuous
    double continuity_threshold = 1e-7; // below: continuous
    double segment_width = 1e-3;        // bisection resolution for Mixed
};

struct ProbeSample {
    enum Verdict { Jump, Continuous, Indeterminate };
    double t = 0.0;        // cut parameter
    double px = 0.0, py = 0.0;
    double nx = 0.0, ny = 0.0;  // unit normal at the sample
    Complex left{}, right{};    // values at point -/+ eps*normal
    double jump = 0.0;
    Verdict verdict = Indeterminate;
};

struct ProbeReport {
    std::vector<ProbeSample> samples;
    // Finite parameter window actually probed (infinite ranges are clipped).
    double t_lo = 0.0, t_hi = 0.0;

    bool empty() const { return samples.empty(); }
    bool all(ProbeSample::Verdict v) const;
    bool any(ProbeSample::Verdict v) const;
};

// Numerically probes a cut: n Chebyshev-spaced interior parameter values,
// expression evaluated at point +- eps * unit normal, jump = |left - right|.
// The dead zone [continuity_threshold, jump_threshold] and evaluation
// failures map to Indeterminate. Degenerate or non-sampleable cuts yield an
// empty report.
ProbeReport probe_cut(const Expr& e, const BranchCut& cut,
                      const std::map<std::string, double>& params = {},
                      const ClassifyOptions& opt = {});

// Fills in each cut's classification from probe evidence plus provenance:
// all-jump -> True; all-continuous -> Spurious (denested provenance ->
// DeNesting, coincidence with a distinct subterm's cut -> Formulation, both
// -> Both); mixed verdicts -> Mixed with boundaries bisected to
// segment_width. Unbound parameters leave every cut Unclassified and add a
// warning. The verdict is numeric evidence, not proof.
CutSet classify_cutset(const Expr& e, CutSet cs,
                       const std::map<std::string, double>& params = {},
                       const ClassifyOptions& opt = {});

}  // namespace bc
