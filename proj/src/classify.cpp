#include "bc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bc/realexpr.hpp"

namespace bc {

bool ProbeReport::all(ProbeSample::Verdict v) const {
    return !samples.empty() &&
           std::all_of(samples.begin(), samples.end(),
                       [&](const ProbeSample& s) { return s.verdict == v; });
}

bool ProbeReport::any(ProbeSample::Verdict v) const {
    return std::any_of(samples.begin(), samples.end(),
                       [&](const ProbeSample& s) { return s.verdict == v; });
}

namespace {

constexpr double kWindow = 4.0;  // probe depth along unbounded ranges

// Finite probe window inside the cut's parameter range.
bool probe_window(const ExtendedInterval& range, double& lo, double& hi) {
    bool lo_fin = range.lo.is_finite(), hi_fin = range.hi.is_finite();
    if (lo_fin && hi_fin) {
        lo = range.lo.value();
        hi = range.hi.value();
    } else if (lo_fin) {
        lo = range.lo.value();
        hi = lo + kWindow;
    } else if (hi_fin) {
        hi = range.hi.value();
        lo = hi - kWindow;
    } else {
        lo = -kWindow;
        hi = kWindow;
    }
    return hi - lo > 1e-9;
}

struct Geometry {
    bool ok = false;
    double px = 0.0, py = 0.0;
    double nx = 0.0, ny = 0.0;  // unit normal
};

bool finite2(double a, double b) { return std::isfinite(a) && std::isfinite(b); }

Geometry geometry_at(const BranchCut& cut, double t,
                     const std::map<std::string, double>& params) {
    Geometry g;
    double tx = 0.0, ty = 0.0;
    if (cut.form == BranchCut::RealCurve) {
        const auto& c = *cut.curve;
        double d = re_eval(c.expr, t);
        if (!std::isfinite(d)) return g;
        auto [x, y] = c.point(t);
        g.px = x;
        g.py = y;
        double h = 1e-5 * (1.0 + std::abs(t));
        double dp = re_eval(c.expr, t + h), dm = re_eval(c.expr, t - h);
        double slope;
        if (finite2(dp, dm))
            slope = (dp - dm) / (2 * h);
        else if (std::isfinite(dp))
            slope = (dp - d) / h;
        else if (std::isfinite(dm))
            slope = (d - dm) / h;
        else
            return g;
        if (c.dependent() == 'y') {
            tx = 1.0;
            ty = slope;
        } else {
            tx = slope;
            ty = 1.0;
        }
    } else if (cut.form == BranchCut::ParamCurve) {
        const auto& c = *cut.parametric;
        try {
            auto bound = params;
            auto at = [&](double tv) {
                bound[c.param] = tv;
                return eval_numeric(c.point, {0.0, 0.0}, bound);
            };
            Complex z = at(t);
            if (!finite2(z.real(), z.imag())) return g;
            g.px = z.real();
            g.py = z.imag();
            double h = 1e-5 * (1.0 + std::abs(t));
            Complex d = (at(t + h) - at(t - h)) / (2 * h);
            tx = d.real();
            ty = d.imag();
        } catch (const EvalError&) {
            return g;
        }
    } else {
        return g;  // semi-algebraic systems are not sampleable here
    }
    double norm = std::hypot(tx, ty);
    if (!(norm > 1e-12) || !std::isfinite(norm)) return g;
    g.nx = -ty / norm;
    g.ny = tx / norm;
    g.ok = true;
    return g;
}

ProbeSample sample_at(const Expr& e, const BranchCut& cut, double t,
                      const std::map<std::string, double>& params,
                      const ClassifyOptions& opt) {
    ProbeSample s;
    s.t = t;
    Geometry g = geometry_at(cut, t, params);
    if (!g.ok) return s;  // Indeterminate
    s.px = g.px;
    s.py = g.py;
    s.nx = g.nx;
    s.ny = g.ny;
    Complex half_left, half_right;
    try {
        auto off = [&](double c) {
            return eval_numeric(e, {g.px + c * g.nx, g.py + c * g.ny}, params);
        };
        s.left = off(-opt.eps);
        s.right = off(opt.eps);
        half_left = off(-opt.eps / 2);
        half_right = off(opt.eps / 2);
    } catch (const EvalError&) {
        return s;
    }
    if (!finite2(s.left.real(), s.left.imag()) ||
        !finite2(s.right.real(), s.right.imag()) ||
        !finite2(half_left.real(), half_left.imag()) ||
        !finite2(half_right.real(), half_right.imag()))
        return s;
    // Richardson: a smooth crossing has right - left ~ 2*eps*f', which the
    // extrapolation cancels; a genuine jump survives it unchanged.
    s.jump = std::abs(2.0 * (half_right - half_left) - (s.right - s.left));
    if (s.jump > opt.jump_threshold)
        s.verdict = ProbeSample::Jump;
    else if (s.jump < opt.continuity_threshold)
        s.verdict = ProbeSample::Continuous;
    return s;
}

const ExtendedInterval* cut_range(const BranchCut& cut) {
    if (cut.form == BranchCut::RealCurve) return &cut.curve->validity;
    if (cut.form == BranchCut::ParamCurve) return &cut.parametric->range;
    return nullptr;
}

// Does (x, y) lie on a cut produced by a different subterm? Used to tell
// formulation cuts (coinciding cuts that cancel) from other spurious cuts.
bool on_distinct_cut(const CutSet& cs, size_t self, double x, double y) {
    constexpr double kTol = 1e-6;
    for (size_t j = 0; j < cs.cuts.size(); ++j) {
        const BranchCut& o = cs.cuts[j];
        if (j == self) continue;
        if (o.provenance.subterm_path == cs.cuts[self].provenance.subterm_path)
            continue;
        if (o.form != BranchCut::RealCurve) continue;
        const auto& c = *o.curve;
        double free = c.dependent_is_x ? y : x;
        double dep = c.dependent_is_x ? x : y;
        double lo = c.validity.lo.value(), hi = c.validity.hi.value();
        if (free < lo - kTol || free > hi + kTol) continue;
        double v = re_eval(c.expr, free);
        if (std::isfinite(v) && std::abs(v - dep) < kTol) return true;
    }
    return false;
}

CutClass spurious_class(const CutSet& cs, size_t self,
                        const std::vector<const ProbeSample*>& continuous) {
    CutClass cl;
    cl.verdict = CutClass::Spurious;
    bool denested = cs.cuts[self].provenance.denested;
    bool formulation = false;
    for (const ProbeSample* s : continuous)
        if (on_distinct_cut(cs, self, s->px, s->py)) {
            formulation = true;
            break;
        }
    if (denested && formulation)
        cl.spurious_kind = SpuriousKind::Both;
    else if (denested)
        cl.spurious_kind = SpuriousKind::DeNesting;
    else if (formulation)
        cl.spurious_kind = SpuriousKind::Formulation;
    else
        cl.note = "continuous across the cut; no provenance explains it";
    return cl;
}

// Bisect the True/not-True boundary between two probe parameters.
double refine_boundary(const Expr& e, const BranchCut& cut, double a, bool a_jump,
                       double b, const std::map<std::string, double>& params,
                       const ClassifyOptions& opt) {
    while (std::abs(b - a) > opt.segment_width) {
        double m = 0.5 * (a + b);
        ProbeSample s = sample_at(e, cut, m, params, opt);
        if ((s.verdict == ProbeSample::Jump) == a_jump)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

}  // namespace

ProbeReport probe_cut(const Expr& e, const BranchCut& cut,
                      const std::map<std::string, double>& params,
                      const ClassifyOptions& opt) {
    ProbeReport rep;
    const ExtendedInterval* range = cut_range(cut);
    if (!range) return rep;
    double lo, hi;
    if (!probe_window(*range, lo, hi)) return rep;
    rep.t_lo = lo;
    rep.t_hi = hi;
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    int n = std::max(1, opt.samples);
    for (int j = n - 1; j >= 0; --j) {
        double t = mid + half * std::cos((2 * j + 1) * std::numbers::pi / (2 * n));
        rep.samples.push_back(sample_at(e, cut, t, params, opt));
    }
    return rep;
}

CutSet classify_cutset(const Expr& e, CutSet cs,
                       const std::map<std::string, double>& params,
                       const ClassifyOptions& opt) {
    for (const std::string& p : free_params(e)) {
        if (params.count(p)) continue;
        for (BranchCut& cut : cs.cuts) {
            cut.classification = {};
            cut.classification.note = "unbound parameter " + p;
        }
        cs.warnings.push_back(
            "classification skipped, parameter " + p + " is not bound");
        return cs;
    }

    for (size_t i = 0; i < cs.cuts.size(); ++i) {
        BranchCut& cut = cs.cuts[i];
        ProbeReport rep = probe_cut(e, cut, params, opt);
        CutClass cl;
        if (rep.empty()) {
            cl.note = cut.form == BranchCut::SemiAlg
                          ? "semi-algebraic system: not numerically probed"
                          : "cut could not be sampled";
            cut.classification = cl;
            continue;
        }
        if (rep.all(ProbeSample::Jump)) {
            cl.verdict = CutClass::True;
        } else if (rep.all(ProbeSample::Continuous)) {
            std::vector<const ProbeSample*> cont;
            for (const auto& s : rep.samples) cont.push_back(&s);
            cl = spurious_class(cs, i, cont);
        } else if (rep.all(ProbeSample::Indeterminate)) {
            cl.note = "all probe samples indeterminate";
        } else {
            cl.verdict = CutClass::Mixed;
            const ExtendedInterval* range = cut_range(cut);
            double range_lo = range->lo.value(), range_hi = range->hi.value();
            std::vector<const ProbeSample*> cont;
            // Runs of equal verdicts become segments; boundaries between a
            // determinate pair are sharpened by bisection.
            size_t k = 0;
            double seg_start = range_lo;
            while (k < rep.samples.size()) {
                size_t k2 = k;
                while (k2 + 1 < rep.samples.size() &&
                       rep.samples[k2 + 1].verdict == rep.samples[k].verdict)
                    ++k2;
                auto v = rep.samples[k].verdict;
                double seg_end;
                if (k2 + 1 == rep.samples.size()) {
                    seg_end = range_hi;
                } else {
                    const auto& a = rep.samples[k2];
                    const auto& b = rep.samples[k2 + 1];
                    if (a.verdict != ProbeSample::Indeterminate &&
                        b.verdict != ProbeSample::Indeterminate)
                        seg_end = refine_boundary(e, cut, a.t,
                                                  a.verdict == ProbeSample::Jump,
                                                  b.t, params, opt);
                    else
                        seg_end = 0.5 * (a.t + b.t);
                }
                CutSegment seg;
                seg.t0 = seg_start;
                seg.t1 = seg_end;
                seg.is_true = v == ProbeSample::Jump;
                seg.known = v != ProbeSample::Indeterminate;
                cl.segments.push_back(seg);
                if (v == ProbeSample::Continuous)
                    for (size_t m = k; m <= k2; ++m) cont.push_back(&rep.samples[m]);
                seg_start = seg_end;
                k = k2 + 1;
            }
            CutClass sp = spurious_class(cs, i, cont);
            cl.spurious_kind = sp.spurious_kind;
            if (!sp.spurious_kind) cl.note = sp.note;
        }
        cut.classification = cl;
    }
    return cs;
}

}  // namespace bc
