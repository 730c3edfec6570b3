#include "bc/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bc/defining_cuts.hpp"
#include "bc/eval.hpp"
#include "bc/reim.hpp"

namespace bc {

namespace {

// ---- endpoint / interval images under squaring ---------------------------

Endpoint ep_square(const Endpoint& e) {
    if (e.kind != Endpoint::Finite) return Endpoint::pos_inf();
    if (e.approx) return Endpoint::approximate(e.approx_value * e.approx_value);
    if (e.q == 0) return Endpoint::exact(e.p * e.p);
    return Endpoint::surd(e.p * e.p + e.q * e.q * e.k, 2 * e.p * e.q, e.k);
}

Endpoint ep_negate(const Endpoint& e) {
    switch (e.kind) {
        case Endpoint::NegInf: return Endpoint::pos_inf();
        case Endpoint::PosInf: return Endpoint::neg_inf();
        default:
            if (e.approx) return Endpoint::approximate(-e.approx_value);
            return Endpoint::surd(-e.p, -e.q, e.k);
    }
}

// Image of an interval under t -> t^2.
ExtendedInterval interval_square(const ExtendedInterval& r) {
    double lo = r.lo.value(), hi = r.hi.value();
    if (lo >= 0) return {ep_square(r.lo), ep_square(r.hi), r.lo_open, r.hi_open};
    if (hi <= 0) return {ep_square(r.hi), ep_square(r.lo), r.hi_open, r.lo_open};
    double a = lo * lo, b = hi * hi;
    Endpoint top;
    bool top_open;
    if (a > b) {
        top = ep_square(r.lo);
        top_open = r.lo_open;
    } else if (b > a) {
        top = ep_square(r.hi);
        top_open = r.hi_open;
    } else {
        top = ep_square(r.lo);
        top_open = r.lo_open && r.hi_open;
    }
    return {Endpoint::exact(Rat(0)), std::move(top), false, top_open};
}

// Image of an interval under t -> -t^2.
ExtendedInterval interval_negated_square(const ExtendedInterval& r) {
    ExtendedInterval s = interval_square(r);
    return {ep_negate(s.hi), ep_negate(s.lo), s.hi_open, s.lo_open};
}

// ---- constraint system for one defining cut ------------------------------

struct CutSystem {
    BivariatePoly equation;
    std::vector<PolyInequality> ineqs;
    std::vector<SAInequality> presentation;
    int cut_index = 0;
    bool denested = false;
};

// Range constraint lo REL P/Q REL hi with Q > 0, as sign conditions and as
// the normalized display form h REL c (h = P' - c Q + c).
void add_range_constraints(CutSystem& sys, const BivariatePoly& P,
                           const BivariatePoly& Q, const ExtendedInterval& range) {
    auto one = BivariatePoly::constant(Rat(1));
    if (range.lo.is_finite()) {
        if (!range.lo.is_exact_rational())
            throw NotSupported("defining-cut endpoint is not rational");
        Rat c = -range.lo.p;
        BivariatePoly Pn = -P;
        // Sign matters here: no canonicalization of inequality sides.
        sys.ineqs.push_back({Pn - Q.scaled(c), range.lo_open});
        sys.presentation.push_back(
            {Pn - Q.scaled(c) + one.scaled(c), range.lo_open, c});
    }
    if (range.hi.is_finite()) {
        if (!range.hi.is_exact_rational())
            throw NotSupported("defining-cut endpoint is not rational");
        Rat c = range.hi.p;
        sys.ineqs.push_back({P - Q.scaled(c), range.hi_open});
        sys.presentation.push_back(
            {P - Q.scaled(c) + one.scaled(c), range.hi_open, c});
    }
}

// System for a rational argument directly on one defining cut.
CutSystem system_rational(const ReImParts& parts, const DefiningCut& cut, int index) {
    CutSystem sys;
    sys.cut_index = index;
    if (cut.axis == Axis::Real) {
        sys.equation = parts.im_num.canonicalized();
        add_range_constraints(sys, parts.re_num, parts.den, cut.range);
    } else {
        sys.equation = parts.re_num.canonicalized();
        add_range_constraints(sys, parts.im_num, parts.den, cut.range);
    }
    return sys;
}

// System for the squared argument p = q^2; the range constraint is the
// image of the cut range under squaring (negated squaring for cuts on the
// imaginary axis), and the equation is Im p = 0 in both cases.
CutSystem system_squared(const ReImParts& parts, const DefiningCut& cut, int index) {
    CutSystem sys;
    sys.cut_index = index;
    sys.denested = true;
    sys.equation = parts.im_num.canonicalized();
    ExtendedInterval image = cut.axis == Axis::Real
                                 ? interval_square(cut.range)
                                 : interval_negated_square(cut.range);
    add_range_constraints(sys, parts.re_num, parts.den, image);
    return sys;
}

bool same_system(const CutSystem& a, const CutSystem& b) {
    if (!(a.equation == b.equation) || a.ineqs.size() != b.ineqs.size()) return false;
    for (size_t i = 0; i < a.ineqs.size(); ++i)
        if (!(a.ineqs[i].h == b.ineqs[i].h) || a.ineqs[i].strict != b.ineqs[i].strict)
            return false;
    return true;
}

// ---- argument handling ---------------------------------------------------

// p = q^2 with the radicals of q cancelled structurally; q must be a product
// of rational factors and powers with half-integer exponents of rational
// bases. Deeper nesting is NotSupported.
Expr square_radical(const Expr& q) {
    if (is_rational_in_var(q)) return make_pow(q, Rat(2));
    std::vector<Expr> factors;
    if (q->kind == ExprKind::Mul)
        factors = q->children;
    else
        factors.push_back(q);
    std::vector<Expr> squared;
    for (const auto& f : factors) {
        if (is_rational_in_var(f)) {
            squared.push_back(make_pow(f, Rat(2)));
            continue;
        }
        if (f->kind == ExprKind::Pow && is_rational_in_var(f->base)) {
            Rat e2 = f->exponent * 2;
            if (is_integer(e2)) {
                squared.push_back(make_pow(f->base, e2));
                continue;
            }
        }
        throw NotSupported(
            "argument is not a product of rational factors and square roots "
            "of rational expressions: " + unparse(q));
    }
    return make_mul(std::move(squared));
}

bool is_squarable_radical(const Expr& q) {
    try {
        square_radical(q);
        return true;
    } catch (const NotSupported&) {
        return false;
    }
}

// Parameter bindings for a function application's parameter slots, keyed by
// slot letter (first slot "a").
std::map<std::string, double> bind_fn_params(const Expr& node,
                                             const AnalyzeOptions& opts) {
    std::map<std::string, double> bound;
    for (size_t i = 0; i < node->fn_params.size(); ++i) {
        std::string key(1, static_cast<char>('a' + i));
        const Expr& p = node->fn_params[i];
        if (p->kind == ExprKind::Const && p->value.is_real())
            bound[key] = to_double(p->value.re);
        else if (p->kind == ExprKind::Param) {
            auto it = opts.param_values.find(p->name);
            if (it != opts.param_values.end()) bound[key] = it->second;
        }
    }
    return bound;
}

// Defining cuts of a cut-bearing node (Apply or fractional power).
LookupResult node_cuts(const Expr& node, const AnalyzeOptions& opts) {
    if (node->kind == ExprKind::Apply)
        return DefiningCutTable::instance().lookup(node->fn, bind_fn_params(node, opts));
    if (node->kind == ExprKind::Pow && !is_integer(node->exponent))
        return {radical_power_cuts(), std::nullopt};
    throw NotSupported("node has no defining cuts: " + unparse(node));
}

std::string node_label(const Expr& node) { return unparse(node); }

// Univariate polynomials over the Gaussian rationals, as fraction pairs.
struct GPoly {
    std::vector<GaussRat> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    static GPoly constant(GaussRat v) {
        GPoly p{{std::move(v)}};
        p.trim();
        return p;
    }
    GPoly operator+(const GPoly& o) const {
        GPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < c.size()) r.c[i] = r.c[i] + c[i];
            if (i < o.c.size()) r.c[i] = r.c[i] + o.c[i];
        }
        r.trim();
        return r;
    }
    GPoly operator*(const GPoly& o) const {
        GPoly r;
        if (c.empty() || o.c.empty()) return r;
        r.c.resize(c.size() + o.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        r.trim();
        return r;
    }
};

struct GFrac {
    GPoly num, den;
};

GFrac gfrac(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const:
            return {GPoly::constant(e->value), GPoly::constant(GaussRat(Rat(1)))};
        case ExprKind::Var:
            return {GPoly{{GaussRat(Rat(0)), GaussRat(Rat(1))}},
                    GPoly::constant(GaussRat(Rat(1)))};
        case ExprKind::Add: {
            GFrac acc{GPoly{}, GPoly::constant(GaussRat(Rat(1)))};
            for (const auto& ch : e->children) {
                GFrac f = gfrac(ch);
                acc = {acc.num * f.den + f.num * acc.den, acc.den * f.den};
            }
            return acc;
        }
        case ExprKind::Mul: {
            GFrac acc{GPoly::constant(GaussRat(Rat(1))),
                      GPoly::constant(GaussRat(Rat(1)))};
            for (const auto& ch : e->children) {
                GFrac f = gfrac(ch);
                acc = {acc.num * f.num, acc.den * f.den};
            }
            return acc;
        }
        case ExprKind::Pow: {
            if (!is_integer(e->exponent))
                throw NotRational("fractional power in rational conversion");
            GFrac b = gfrac(e->base);
            long long n = e->exponent.convert_to<long long>();
            bool inv = n < 0;
            if (inv) {
                std::swap(b.num, b.den);
                n = -n;
            }
            GFrac acc{GPoly::constant(GaussRat(Rat(1))),
                      GPoly::constant(GaussRat(Rat(1)))};
            for (long long i = 0; i < n; ++i)
                acc = {acc.num * b.num, acc.den * b.den};
            return acc;
        }
        default:
            throw NotRational("not rational in the variable: " + unparse(e));
    }
}

// Sign of a rational-in-z factor along the real segment `xiv`, when provably
// constant there (real coefficients, no root or pole strictly inside).
std::optional<int> rational_sign_on_segment(const Expr& f, const ExtendedInterval& xiv);

// Sign certificate for branches introduced by squaring. Deliberately
// limited, mirroring the reference package: it only fires when the
// candidate is a segment of the real axis and every radical factor of the
// argument is a half-integer power of the variable itself, so that on
// x > 0 the radical is a positive real and the argument's sign is the sign
// of its rational cofactor. Returns true when the argument's value then
// provably misses every defining cut.
bool certificate_rejects(const RadicalSolution& curve, const Expr& arg,
                         const std::vector<DefiningCut>& cuts) {
    // Candidate must be y = 0 over an x-interval.
    if (curve.dependent_is_x) return false;
    if (!(curve.expr->kind == RealExprNode::Const && curve.expr->value == 0))
        return false;
    const ExtendedInterval& xiv = curve.validity;
    std::vector<Expr> factors;
    if (arg->kind == ExprKind::Mul)
        factors = arg->children;
    else
        factors.push_back(arg);
    int sign = 1;
    bool saw_radical = false;
    for (const auto& f : factors) {
        if (is_rational_in_var(f)) {
            auto s = rational_sign_on_segment(f, xiv);
            if (!s || *s == 0) return false;
            sign *= *s;
            continue;
        }
        if (f->kind == ExprKind::Pow && !is_integer(f->exponent) &&
            f->base->kind == ExprKind::Var) {
            // z^(p/q) on the segment: positive real iff the segment lies in
            // x > 0. Anything else is left unproven.
            if (xiv.lo.value() < 0.0) return false;
            saw_radical = true;
            continue;
        }
        return false;
    }
    if (!saw_radical) return false;
    // The argument is real with constant sign on the candidate; it misses
    // every cut iff no real-axis cut range meets that open ray.
    for (const auto& c : cuts) {
        if (c.axis == Axis::Imag) continue;  // meets the reals at 0 only
        double lo = c.range.lo.value(), hi = c.range.hi.value();
        if (sign > 0 ? hi > 0.0 : lo < 0.0) return false;
    }
    return true;
}

std::optional<int> rational_sign_on_segment(const Expr& f, const ExtendedInterval& xiv) {
    GFrac fr;
    try {
        fr = gfrac(f);
    } catch (const NotRational&) {
        return std::nullopt;
    }
    auto real_poly = [](const GPoly& g) -> std::optional<UnivariatePoly> {
        std::vector<Rat> c;
        for (const auto& v : g.c) {
            if (!v.is_real()) return std::nullopt;
            c.push_back(v.re);
        }
        return UnivariatePoly(std::move(c));
    };
    auto N = real_poly(fr.num), D = real_poly(fr.den);
    if (!N || !D || N->is_zero()) return std::nullopt;
    double lo = xiv.lo.value(), hi = xiv.hi.value();
    for (const auto& p : {*N, *D}) {
        if (p.degree() < 1) continue;
        for (const auto& r : isolate_real_roots(p))
            if (r.approx > lo + 1e-12 && r.approx < hi - 1e-12) return std::nullopt;
    }
    double mid;
    if (std::isinf(lo) && std::isinf(hi)) mid = 0.0;
    else if (std::isinf(lo)) mid = hi - 1.0;
    else if (std::isinf(hi)) mid = lo + 1.0;
    else mid = (lo + hi) / 2.0;
    double v = N->eval(mid) / D->eval(mid);
    if (!std::isfinite(v) || std::abs(v) < 1e-12) return std::nullopt;
    return v > 0 ? 1 : -1;
}

// ---- core real-variables analysis of one node ----------------------------

void emit_semialg(const CutSystem& sys, const Provenance& base, CutSet& out) {
    BranchCut cut;
    cut.form = BranchCut::SemiAlg;
    cut.system = SemiAlgSystem{sys.equation, sys.presentation};
    cut.provenance = base;
    cut.provenance.defining_cut_index = sys.cut_index;
    cut.provenance.denested = sys.denested;
    out.cuts.push_back(std::move(cut));
}

void solve_system_into(const CutSystem& sys, const Provenance& base, const Expr& arg,
                       const std::vector<DefiningCut>& cuts,
                       const AnalyzeOptions& opts, CutSet& out) {
    Provenance prov = base;
    prov.defining_cut_index = sys.cut_index;
    prov.denested = sys.denested;
    if (sys.equation.is_zero()) {
        // Constraint surface fills the plane; report it unsolved.
        out.warnings.push_back("degenerate cut system (identically satisfied) for " +
                               base.subterm_text);
        return;
    }
    SolveOutcome so = solve_for_variable(sys.equation);
    for (const auto& u : so.unsolved) {
        CutSystem rem = sys;
        rem.equation = u.factor;
        emit_semialg(rem, prov, out);
        out.warnings.push_back("cut left in semi-algebraic form (" + u.reason + ")");
    }
    for (const auto& sol : so.solutions) {
        for (const auto& iv : restrict_by_inequalities(sol, sys.ineqs)) {
            RadicalSolution piece = sol;
            piece.validity = iv;
            BranchCut cut;
            cut.form = BranchCut::RealCurve;
            cut.curve = std::move(piece);
            cut.provenance = prov;
            if (sys.denested && opts.remove_denested_branches &&
                certificate_rejects(*cut.curve, arg, cuts)) {
                cut.classification.verdict = CutClass::Spurious;
                cut.classification.spurious_kind = SpuriousKind::DeNesting;
                cut.classification.note =
                    "argument stays off every defining cut along this branch";
                out.removed.push_back(std::move(cut));
            } else {
                if (sys.denested)
                    out.warnings.push_back(
                        "de-nesting residue not removed: the squared system for " +
                        base.subterm_text + " covers both branches of the square root");
                out.cuts.push_back(std::move(cut));
            }
        }
    }
}

// Cuts contributed by one cut-bearing node itself (no recursion into its
// argument's subterms), via the real-variables route.
void core_real(const Expr& node, const std::string& path, const AnalyzeOptions& opts,
               CutSet& out) {
    LookupResult lr = node_cuts(node, opts);
    if (lr.warning) out.warnings.push_back(*lr.warning);
    if (lr.cuts.empty()) return;
    const Expr& arg = node->base;
    Provenance base;
    base.subterm_path = path;
    base.subterm_text = node_label(node);

    std::vector<CutSystem> systems;
    if (is_rational_in_var(arg)) {
        base.method = CutMethod::RealVariables;
        ReImParts parts = re_im_parts(arg);
        for (size_t i = 0; i < lr.cuts.size(); ++i)
            systems.push_back(system_rational(parts, lr.cuts[i], static_cast<int>(i)));
    } else {
        base.method = CutMethod::RealVariablesSquared;
        Expr squared = square_radical(arg);  // throws NotSupported when too nested
        ReImParts parts = re_im_parts(squared);
        for (size_t i = 0; i < lr.cuts.size(); ++i)
            systems.push_back(system_squared(parts, lr.cuts[i], static_cast<int>(i)));
    }
    // Distinct defining cuts can square to one system (e.g. symmetric pairs).
    std::vector<CutSystem> uniq;
    for (auto& s : systems) {
        bool dup = false;
        for (const auto& u : uniq) dup = dup || same_system(u, s);
        if (!dup) uniq.push_back(std::move(s));
    }
    for (const auto& s : uniq) {
        if (opts.semialgebraic)
            emit_semialg(s, base, out);
        else
            solve_system_into(s, base, arg, lr.cuts, opts, out);
    }
}

// ---- parametric core -----------------------------------------------------

// Cuts of one node as parametric curves z(t).
void core_parametric(const Expr& node, const std::string& path,
                     const AnalyzeOptions& opts, CutSet& out) {
    LookupResult lr = node_cuts(node, opts);
    if (lr.warning) out.warnings.push_back(*lr.warning);
    if (lr.cuts.empty()) return;
    const Expr& arg = node->base;
    Provenance base;
    base.subterm_path = path;
    base.subterm_text = node_label(node);
    base.method = CutMethod::Parametric;

    bool squared = false;
    Expr rational_arg = arg;
    if (!is_rational_in_var(arg)) {
        rational_arg = square_radical(arg);
        squared = true;
    }
    GFrac f = gfrac(rational_arg);
    Expr tvar = make_param(opts.sweep_param);
    for (size_t ci = 0; ci < lr.cuts.size(); ++ci) {
        const DefiningCut& cut = lr.cuts[ci];
        // Substituted value of the argument (or its square): t, i t, t^2, -t^2.
        Expr s;
        if (!squared)
            s = cut.axis == Axis::Real
                    ? tvar
                    : make_mul({make_const(GaussRat(Rat(0), Rat(1))), tvar});
        else
            s = cut.axis == Axis::Real
                    ? make_pow(tvar, Rat(2))
                    : make_neg(make_pow(tvar, Rat(2)));
        size_t deg = std::max(f.num.c.size(), f.den.c.size());
        std::vector<Expr> coeffs;
        for (size_t k = 0; k < deg; ++k) {
            GaussRat nk = k < f.num.c.size() ? f.num.c[k] : GaussRat();
            GaussRat dk = k < f.den.c.size() ? f.den.c[k] : GaussRat();
            Expr term;
            if (dk.is_zero())
                term = make_const(nk);
            else if (nk.is_zero())
                term = make_neg(make_mul({s, make_const(dk)}));
            else
                term = make_sub(make_const(nk), make_mul({s, make_const(dk)}));
            coeffs.push_back(term);
        }
        ParamSolveOutcome ps = solve_in_z_with_parameter(coeffs, opts.sweep_param);
        if (ps.warning) out.warnings.push_back(*ps.warning);
        if (ps.roots.empty() && !coeffs.empty()) {
            out.warnings.push_back("no closed-form parametric solution for " +
                                   base.subterm_text);
            continue;
        }
        for (const auto& root : ps.roots) {
            BranchCut bcut;
            bcut.form = BranchCut::ParamCurve;
            bcut.parametric = ParametricCut{root, opts.sweep_param, cut.range, cut.axis};
            bcut.provenance = base;
            bcut.provenance.defining_cut_index = static_cast<int>(ci);
            bcut.provenance.denested = squared;
            out.cuts.push_back(std::move(bcut));
        }
    }
}

void core_dispatch(const Expr& node, const std::string& path,
                   const AnalyzeOptions& opts, CutSet& out) {
    if (opts.method == Method::Parametric) {
        core_parametric(node, path, opts, out);
        return;
    }
    try {
        core_real(node, path, opts, out);
    } catch (const NotSupported& e) {
        if (opts.method == Method::Auto) {
            try {
                core_parametric(node, path, opts, out);
                return;
            } catch (const NotSupported&) {
            } catch (const NotRational&) {
            }
        }
        out.warnings.push_back(std::string("cannot analyze ") + node_label(node) +
                               ": " + e.what());
    }
}

void merge(CutSet& into, CutSet&& from) {
    for (auto& c : from.cuts) into.cuts.push_back(std::move(c));
    for (auto& c : from.removed) into.removed.push_back(std::move(c));
    for (auto& w : from.warnings) {
        if (std::find(into.warnings.begin(), into.warnings.end(), w) ==
            into.warnings.end())
            into.warnings.push_back(std::move(w));
    }
}

void require_cut_bearing(const Expr& node) {
    bool ok = node->kind == ExprKind::Apply ||
              (node->kind == ExprKind::Pow && !is_integer(node->exponent));
    if (!ok)
        throw NotSupported("not a function application or fractional power: " +
                           unparse(node));
}

}  // namespace

CutSet bc_f_rv1(const Expr& apply_node, const AnalyzeOptions& opts) {
    require_cut_bearing(apply_node);
    if (!is_rational_in_var(apply_node->base))
        throw NotSupported("argument is not rational in the variable: " +
                           unparse(apply_node->base));
    CutSet out;
    core_real(apply_node, "e", opts, out);
    return out;
}

CutSet bc_f_rv2(const Expr& apply_node, const AnalyzeOptions& opts) {
    require_cut_bearing(apply_node);
    if (is_rational_in_var(apply_node->base))
        return bc_f_rv1(apply_node, opts);
    CutSet out;
    core_real(apply_node, "e", opts, out);
    // Cuts of the argument's own cut-bearing subterms.
    AnalyzeOptions sub = opts;
    sub.method = Method::Real;
    for (const auto& st : cut_bearing_subterms(apply_node->base)) {
        CutSet inner;
        core_dispatch(st.subterm, "e.arg." + st.path, sub, inner);
        merge(out, std::move(inner));
    }
    return out;
}

CutSet bc_f_cv(const Expr& apply_node, const AnalyzeOptions& opts) {
    require_cut_bearing(apply_node);
    CutSet out;
    AnalyzeOptions par = opts;
    par.method = Method::Parametric;
    try {
        core_parametric(apply_node, "e", par, out);
    } catch (const NotRational& e) {
        throw NotSupported(e.what());
    }
    for (const auto& st : cut_bearing_subterms(apply_node->base)) {
        CutSet inner;
        core_dispatch(st.subterm, "e.arg." + st.path, par, inner);
        merge(out, std::move(inner));
    }
    return out;
}

CutSet bc_f_sa(const Expr& apply_node, const AnalyzeOptions& opts) {
    AnalyzeOptions sa = opts;
    sa.semialgebraic = true;
    sa.method = Method::Real;
    require_cut_bearing(apply_node);
    CutSet out;
    core_real(apply_node, "e", sa, out);
    return out;
}

CutSet bc_c(const Expr& expr, const AnalyzeOptions& opts) {
    CutSet out;
    AnalyzeOptions eff = opts;
    if (eff.semialgebraic && eff.method == Method::Parametric)
        throw NotSupported("semi-algebraic output is a real-variables form");
    auto subterms = cut_bearing_subterms(expr);
    for (const auto& st : subterms) {
        CutSet piece;
        if (eff.semialgebraic) {
            try {
                core_real(st.subterm, st.path, eff, piece);
            } catch (const NotSupported& e) {
                piece.warnings.push_back(std::string("cannot analyze ") +
                                         node_label(st.subterm) + ": " + e.what());
            }
        } else {
            core_dispatch(st.subterm, st.path, eff, piece);
        }
        merge(out, std::move(piece));
    }
    return out;
}

}  // namespace bc
