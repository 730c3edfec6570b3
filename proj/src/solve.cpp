#include "bc/solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bc {

namespace {

const double kOnBranchTol = 1e-6;

struct Breakpoint {
    double approx;
    std::optional<Endpoint> exact;
    bool from_inequality;  // false: validity boundary / pole
    bool pole;             // solution undefined at the point
};

Endpoint breakpoint_endpoint(const Breakpoint& b) {
    if (b.exact) return *b.exact;
    return Endpoint::approximate(b.approx);
}

// Intervals (with exact endpoints where recognized) on which `keep`
// holds, sampling between consecutive breakpoints.
std::vector<ExtendedInterval> sign_intervals(
    const ExtendedInterval& domain, std::vector<Breakpoint> bps,
    const std::function<bool(double)>& keep,
    const std::function<bool(const Breakpoint&)>& endpoint_closed,
    bool merge_even_contacts) {
    std::sort(bps.begin(), bps.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.approx < b.approx; });
    // Deduplicate near-identical breakpoints, preferring exact ones.
    std::vector<Breakpoint> uniq;
    for (auto& b : bps) {
        if (b.approx < domain.lo.value() + 1e-10 || b.approx > domain.hi.value() - 1e-10)
            continue;
        if (!uniq.empty() && std::abs(uniq.back().approx - b.approx) < 1e-10) {
            if (!uniq.back().exact && b.exact) uniq.back().exact = b.exact;
            uniq.back().from_inequality = uniq.back().from_inequality && b.from_inequality;
            uniq.back().pole = uniq.back().pole || b.pole;
            continue;
        }
        uniq.push_back(b);
    }
    // Cell sample points.
    double lo = domain.lo.value(), hi = domain.hi.value();
    std::vector<double> samples;
    size_t ncells = uniq.size() + 1;
    for (size_t i = 0; i < ncells; ++i) {
        double a = i == 0 ? lo : uniq[i - 1].approx;
        double b = i == uniq.size() ? hi : uniq[i].approx;
        double s;
        if (std::isinf(a) && std::isinf(b))
            s = 0.0;
        else if (std::isinf(a))
            s = b - 1.0;
        else if (std::isinf(b))
            s = a + 1.0;
        else
            s = (a + b) / 2.0;
        samples.push_back(s);
    }
    std::vector<bool> kept(ncells);
    for (size_t i = 0; i < ncells; ++i) kept[i] = keep(samples[i]);
    // Merge across even-contact inequality touch points.
    std::vector<bool> boundary_used(uniq.size(), true);
    if (merge_even_contacts)
        for (size_t i = 0; i < uniq.size(); ++i)
            if (uniq[i].from_inequality && !uniq[i].pole && kept[i] && kept[i + 1])
                boundary_used[i] = false;
    std::vector<ExtendedInterval> out;
    size_t i = 0;
    while (i < ncells) {
        if (!kept[i]) { ++i; continue; }
        size_t j = i;
        while (j + 1 < ncells && kept[j + 1] && !boundary_used[j]) ++j;
        ExtendedInterval iv;
        if (i == 0) {
            iv.lo = domain.lo;
            iv.lo_open = domain.lo_open;
        } else {
            iv.lo = breakpoint_endpoint(uniq[i - 1]);
            iv.lo_open = !endpoint_closed(uniq[i - 1]);
        }
        if (j == uniq.size()) {
            iv.hi = domain.hi;
            iv.hi_open = domain.hi_open;
        } else {
            iv.hi = breakpoint_endpoint(uniq[j]);
            iv.hi_open = !endpoint_closed(uniq[j]);
        }
        // Single points are not cuts.
        if (iv.hi.value() - iv.lo.value() > 1e-12) out.push_back(std::move(iv));
        i = j + 1;
    }
    return out;
}

RealExpr quotient_expr(RealExpr numerator, const UnivariatePoly& denom) {
    if (denom.degree() == 0) {
        Rat d = denom.coeff(0);
        if (d == 1) return numerator;
        return re_mul({re_const(Rat(1) / d), std::move(numerator)});
    }
    return re_div(std::move(numerator), re_from_poly(denom));
}

// sqrt of a polynomial radicand, recognizing perfect-square structure
// radicand = c0 * u(t)^2 (then sqrt = sqrt(c0)*|u|, emitted per sign branch
// as +-sqrt(c0)*u, which covers the same pair of branches).
struct SqrtForm {
    RealExpr expr;          // one branch of the square root (principal)
    bool perfect_square;    // true when radicand == c0 * u^2
    UnivariatePoly u;       // square part when perfect_square
    Rat c0;                 // constant when perfect_square (c0 > 0)
};

std::optional<SqrtForm> sqrt_of_poly(const UnivariatePoly& radicand) {
    if (radicand.is_zero())
        return SqrtForm{re_const(Rat(0)), true, {}, Rat(0)};
    if (radicand.degree() % 2 == 0) {
        // Try radicand = c0 * u^2; u is recovered from the gcd with the
        // derivative (exact when u is squarefree) and verified by squaring.
        UnivariatePoly u = radicand.degree() == 0
                               ? UnivariatePoly::constant(Rat(1))
                               : radicand.gcd(radicand.derivative());
        // u is monic; c0 = lead(radicand) / lead(u^2).
        UnivariatePoly u2 = u * u;
        if (u2.degree() == radicand.degree()) {
            Rat c0 = radicand.lead() / u2.lead();
            if ((u2.scaled(c0)) == radicand) {
                if (c0 < 0) return std::nullopt;  // nonpositive radicand
                RealExpr coeff = re_surd(c0);  // normalizes; rational when square
                RealExpr ex = u.degree() == 0 && u.coeff(0) == 1
                                  ? coeff
                                  : re_mul({coeff, re_from_poly(u)});
                return SqrtForm{ex, true, u, c0};
            }
        }
    }
    // Pull square factors out of the radicand: radicand = u^2 * w gives the
    // branch pair +-u*sqrt(w) (sign flips of u are absorbed by the pair).
    UnivariatePoly w = radicand;
    UnivariatePoly u = UnivariatePoly::constant(Rat(1));
    while (w.degree() >= 2) {
        UnivariatePoly g = w.gcd(w.derivative());
        if (g.degree() < 1) break;
        auto [quot, rem] = w.divrem(g * g);
        if (!rem.is_zero()) break;
        w = quot;
        u = u * g;
    }
    // Square part of the numeric content as well.
    UnivariatePoly prim = w.canonicalized();
    Rat r = w.lead() / prim.lead();
    Rat ar = r < 0 ? -r : r;
    auto [sn, kn] = extract_square(num(ar));
    auto [sd, kd] = extract_square(den(ar));
    u = u.scaled(Rat(sn, sd));
    w = prim.scaled(Rat(kn, kd) * (r < 0 ? Rat(-1) : Rat(1)));
    RealExpr root = re_sqrt(re_from_poly(w));
    RealExpr ex = u.degree() == 0 && u.coeff(0) == 1
                      ? root
                      : re_mul({re_from_poly(u), root});
    return SqrtForm{ex, false, {}, Rat(0)};
}

// Validity intervals where disc >= 0 and a != 0.
std::vector<ExtendedInterval> validity_regions(const UnivariatePoly& disc,
                                               const UnivariatePoly& lead) {
    std::vector<Breakpoint> bps;
    if (!disc.is_zero() && disc.degree() >= 1)
        for (auto& r : isolate_real_roots(disc))
            bps.push_back({r.approx, r.exact, false, false});
    if (lead.degree() >= 1)
        for (auto& r : isolate_real_roots(lead))
            bps.push_back({r.approx, r.exact, false, true});
    auto keep = [&](double t) {
        return disc.eval(t) >= 0.0 && std::abs(lead.eval(t)) > 1e-300;
    };
    auto closed = [&](const Breakpoint& b) {
        // disc == 0 endpoints are attained (the branch value is real there)
        // unless the leading coefficient also vanishes.
        return !b.pole;
    };
    if (disc.is_zero()) {
        // Degenerate: solutions exist everywhere a != 0 with d repeated.
        return sign_intervals(ExtendedInterval::whole(), bps,
                              [&](double t) { return std::abs(lead.eval(t)) > 1e-300; },
                              closed, false);
    }
    return sign_intervals(ExtendedInterval::whole(), bps, keep, closed, false);
}

struct FactorSolutions {
    std::vector<RadicalSolution> solutions;
    std::vector<Unsolved> unsolved;
};

void emit_linear(const BivariatePoly& factor, bool dep_x, FactorSolutions& out) {
    auto cs = factor.coeffs_in(dep_x);
    const UnivariatePoly& b = cs[1];
    UnivariatePoly c = cs.size() > 0 ? cs[0] : UnivariatePoly{};
    RealExpr expr = quotient_expr(re_from_poly(-c), b);
    std::vector<Breakpoint> bps;
    if (b.degree() >= 1)
        for (auto& r : isolate_real_roots(b)) bps.push_back({r.approx, r.exact, false, true});
    auto domains = sign_intervals(
        ExtendedInterval::whole(), bps,
        [&](double t) { return std::abs(b.eval(t)) > 1e-300; },
        [](const Breakpoint&) { return false; }, false);
    for (auto& d : domains) {
        RadicalSolution s;
        s.dependent_is_x = dep_x;
        s.expr = expr;
        s.validity = d;
        s.factor = factor;
        out.solutions.push_back(std::move(s));
    }
}

void emit_quadratic_in(const UnivariatePoly& a, const UnivariatePoly& b,
                       const UnivariatePoly& c, const BivariatePoly& factor,
                       bool dep_x, int outer_sqrt, FactorSolutions& out);

// Solutions d = +-sqrt(inner) for each inner solution of the quadratic in
// d^2 (used for biquadratic factors).
void emit_outer_sqrt(const RadicalSolution& inner, const UnivariatePoly& const_coeff,
                     const UnivariatePoly& disc, const UnivariatePoly& lead,
                     const BivariatePoly& factor, FactorSolutions& out) {
    // Breakpoints where the inner value can change sign: zeros of the product
    // of branches (const/lead), of the discriminant, and of the lead.
    std::vector<Breakpoint> bps;
    auto add_roots = [&](const UnivariatePoly& p, bool pole) {
        if (!p.is_zero() && p.degree() >= 1)
            for (auto& r : isolate_real_roots(p)) bps.push_back({r.approx, r.exact, false, pole});
    };
    add_roots(const_coeff, false);
    add_roots(disc, false);
    add_roots(lead, true);
    auto keep = [&](double t) {
        if (!inner.validity.contains(t)) return false;
        double v = re_eval(inner.expr, t);
        return std::isfinite(v) && v >= 0.0;
    };
    auto domains = sign_intervals(inner.validity, bps, keep,
                                  [](const Breakpoint& b) { return !b.pole; }, false);
    for (int sgn : {1, -1}) {
        for (auto& d : domains) {
            RadicalSolution s;
            s.dependent_is_x = inner.dependent_is_x;
            RealExpr root = re_sqrt(inner.expr);
            s.expr = sgn > 0 ? root : re_neg(root);
            s.validity = d;
            s.factor = factor;
            s.branch_index = inner.branch_index * 2 + (sgn > 0 ? 0 : 1);
            out.solutions.push_back(std::move(s));
        }
    }
}

void emit_quadratic_in(const UnivariatePoly& a, const UnivariatePoly& b,
                       const UnivariatePoly& c, const BivariatePoly& factor,
                       bool dep_x, int outer_sqrt, FactorSolutions& out) {
    UnivariatePoly disc = b * b - (a * c).scaled(Rat(4));
    auto sq = sqrt_of_poly(disc);
    if (!sq) return;  // disc <= 0 everywhere: at most isolated points, no curve
    auto domains = sq->perfect_square && sq->c0 >= 0
                       ? validity_regions({}, a)
                       : validity_regions(disc, a);
    int branch = 0;
    for (int sgn : {1, -1}) {
        RealExpr num;
        if (sgn > 0)
            num = re_add({re_from_poly(-b), sq->expr});
        else
            num = re_add({re_from_poly(-b), re_neg(sq->expr)});
        if (b.is_zero()) num = sgn > 0 ? sq->expr : re_neg(sq->expr);
        RealExpr expr = quotient_expr(num, a.scaled(Rat(2)));
        for (auto& d : domains) {
            RadicalSolution s;
            s.dependent_is_x = dep_x;
            s.expr = expr;
            s.validity = d;
            s.factor = factor;
            s.branch_index = branch;
            if (outer_sqrt)
                emit_outer_sqrt(s, c, disc, a, factor, out);
            else
                out.solutions.push_back(std::move(s));
        }
        ++branch;
        // A perfect-square zero discriminant has a single branch.
        if (sq->perfect_square && sq->c0 == 0) break;
    }
}

void emit_axis_lines(const BivariatePoly& factor, bool dep_x, FactorSolutions& out) {
    // Factor involves only the dependent coordinate: constant lines at its
    // exactly recognized real roots.
    auto cs = factor.coeffs_in(dep_x);
    std::vector<Rat> coeffs;
    for (auto& p : cs) coeffs.push_back(p.coeff(0));
    UnivariatePoly uni{std::move(coeffs)};
    if (uni.degree() < 1) return;
    for (auto& r : isolate_real_roots(uni)) {
        if (!r.exact) {
            out.unsolved.push_back({"isolated root not in closed form", factor});
            continue;
        }
        RealExpr expr;
        if (r.exact->q == 0)
            expr = re_const(r.exact->p);
        else {
            std::vector<RealExpr> terms;
            if (r.exact->p != 0) terms.push_back(re_const(r.exact->p));
            terms.push_back(re_mul({re_const(r.exact->q), re_surd(r.exact->k)}));
            expr = re_add(std::move(terms));
        }
        RadicalSolution s;
        s.dependent_is_x = dep_x;
        s.expr = expr;
        s.validity = ExtendedInterval::whole();
        s.factor = factor;
        out.solutions.push_back(std::move(s));
    }
}

bool only_even_degrees(const std::vector<UnivariatePoly>& cs) {
    for (size_t i = 1; i < cs.size(); i += 2)
        if (!cs[i].is_zero()) return false;
    return true;
}

enum class Method { None, Linear, Quadratic, Biquadratic };

Method method_for(const BivariatePoly& f, bool dep_x) {
    int d = dep_x ? f.degree_x() : f.degree_y();
    if (d == 1) return Method::Linear;
    if (d == 2) return Method::Quadratic;
    if (d == 4 && only_even_degrees(f.coeffs_in(dep_x))) return Method::Biquadratic;
    return Method::None;
}

// Whole-line validity (used to pick the preferred orientation).
bool full_validity(const BivariatePoly& f, bool dep_x) {
    auto cs = f.coeffs_in(dep_x);
    switch (method_for(f, dep_x)) {
        case Method::Linear:
            return cs[1].degree() == 0;
        case Method::Quadratic: {
            if (cs[2].degree() != 0) return false;
            UnivariatePoly disc = cs[1] * cs[1] - (cs[2] * cs[0]).scaled(Rat(4));
            if (disc.is_zero()) return true;
            if (disc.degree() == 0) return disc.coeff(0) > 0;
            auto roots = isolate_real_roots(disc);
            // Nonnegative everywhere: check samples around each root.
            auto check = [&](double t) { return disc.eval(t) >= -1e-12; };
            if (!check(0.0)) return false;
            for (auto& r : roots)
                if (!check(r.approx - 0.5) || !check(r.approx + 0.5)) return false;
            return true;
        }
        default:
            return false;
    }
}

void solve_factor(const BivariatePoly& factor, bool prefer_x, FactorSolutions& out) {
    int dx = factor.degree_x(), dy = factor.degree_y();
    if (dx == 0 && dy == 0) return;
    if (dy == 0) { emit_axis_lines(factor, true, out); return; }
    if (dx == 0) { emit_axis_lines(factor, false, out); return; }
    Method mx = method_for(factor, true);
    Method my = method_for(factor, false);
    bool can_x = mx != Method::None, can_y = my != Method::None;
    if (!can_x && !can_y) {
        std::ostringstream os;
        os << "degree " << dx << " in x and " << dy
           << " in y after factoring; solvable cap is 2 per variable";
        out.unsolved.push_back({os.str(), factor});
        return;
    }
    bool dep_x;
    if (can_x != can_y)
        dep_x = can_x;
    else {
        bool fx = full_validity(factor, true), fy = full_validity(factor, false);
        if (fx != fy)
            dep_x = fx;
        else
            dep_x = prefer_x;
    }
    Method m = dep_x ? mx : my;
    auto cs = factor.coeffs_in(dep_x);
    switch (m) {
        case Method::Linear:
            emit_linear(factor, dep_x, out);
            break;
        case Method::Quadratic:
            emit_quadratic_in(cs[2], cs[1], cs[0], factor, dep_x, 0, out);
            break;
        case Method::Biquadratic:
            emit_quadratic_in(cs[4], cs[2], cs[0], factor, dep_x, 1, out);
            break;
        default:
            break;
    }
}

}  // namespace

std::string RadicalSolution::str() const {
    std::ostringstream os;
    os << dependent() << " = " << re_str(expr, std::string(1, free_var()));
    return os.str();
}

SolveOutcome solve_for_variable(const BivariatePoly& p, bool prefer_x) {
    SolveOutcome out;
    BivariatePoly canon = p.canonicalized();
    if (canon.is_zero()) return out;
    auto [mx, my, core] = canon.extract_monomial();
    FactorSolutions fs;
    if (mx > 0) {
        RadicalSolution s;
        s.dependent_is_x = true;
        s.expr = re_const(Rat(0));
        s.validity = ExtendedInterval::whole();
        s.factor = BivariatePoly::x();
        fs.solutions.push_back(std::move(s));
    }
    if (my > 0) {
        RadicalSolution s;
        s.dependent_is_x = false;
        s.expr = re_const(Rat(0));
        s.validity = ExtendedInterval::whole();
        s.factor = BivariatePoly::y();
        fs.solutions.push_back(std::move(s));
    }
    solve_factor(core.canonicalized(), prefer_x, fs);
    out.solutions = std::move(fs.solutions);
    for (auto& u : fs.unsolved) out.unsolved.push_back(std::move(u));
    return out;
}

std::vector<ExtendedInterval> restrict_by_inequalities(
    const RadicalSolution& sol, const std::vector<PolyInequality>& ineqs) {
    std::vector<Breakpoint> bps;
    std::vector<const PolyInequality*> active;
    std::vector<bool> identically_zero(ineqs.size(), false);
    double probe_scale = 1.0;

    auto branch_value = [&](double t) { return sol.point(t); };

    for (size_t i = 0; i < ineqs.size(); ++i) {
        const auto& q = ineqs[i];
        UnivariatePoly res =
            bivariate_resultant(sol.factor, q.h, /*eliminate_x=*/sol.dependent_is_x);
        if (res.is_zero() || res.degree() < 1) {
            // Either h shares the defining factor (vanishes on the branch) or
            // the substituted condition has constant sign; decide by samples.
            double lo = sol.validity.lo.value(), hi = sol.validity.hi.value();
            double mid = std::isinf(lo) ? (std::isinf(hi) ? 0.0 : hi - 1.0)
                                        : (std::isinf(hi) ? lo + 1.0 : (lo + hi) / 2.0);
            auto [px, py] = branch_value(mid);
            double v = q.h.eval(px, py);
            if (std::abs(v) < 1e-9) {
                if (q.strict) return {};
                identically_zero[i] = true;
            }
            continue;
        }
        for (auto& r : isolate_real_roots(res)) {
            if (!sol.validity.contains(r.approx) &&
                std::abs(r.approx - sol.validity.lo.value()) > 1e-9 &&
                std::abs(r.approx - sol.validity.hi.value()) > 1e-9)
                continue;
            auto [px, py] = branch_value(r.approx);
            if (!std::isfinite(px) || !std::isfinite(py)) continue;
            double v = q.h.eval(px, py);
            double scale = 1.0 + std::abs(px) + std::abs(py);
            if (std::abs(v) < kOnBranchTol * scale * probe_scale)
                bps.push_back({r.approx, r.exact, true, false});
        }
    }
    (void)active;
    auto keep = [&](double t) {
        auto [px, py] = branch_value(t);
        if (!std::isfinite(px) || !std::isfinite(py)) return false;
        for (size_t i = 0; i < ineqs.size(); ++i) {
            if (identically_zero[i]) continue;
            double v = ineqs[i].h.eval(px, py);
            if (ineqs[i].strict ? !(v < -1e-12) : !(v <= 1e-12)) return false;
        }
        return true;
    };
    auto endpoint_closed = [&](const Breakpoint& b) {
        if (b.pole) return false;
        auto [px, py] = branch_value(b.approx);
        if (!std::isfinite(px) || !std::isfinite(py)) return false;
        for (const auto& q : ineqs) {
            double v = q.h.eval(px, py);
            double scale = 1.0 + std::abs(px) + std::abs(py);
            if (v > kOnBranchTol * scale) return false;
            if (q.strict && std::abs(v) <= kOnBranchTol * scale) return false;
        }
        return true;
    };
    return sign_intervals(sol.validity, std::move(bps), keep, endpoint_closed, true);
}

// ---- parametric solving --------------------------------------------------

namespace {

Expr ex_add(Expr a, Expr b) { return make_add({std::move(a), std::move(b)}); }
Expr ex_sub(Expr a, Expr b) { return make_sub(std::move(a), std::move(b)); }
Expr ex_mul(Expr a, Expr b) { return make_mul({std::move(a), std::move(b)}); }
Expr ex_div(Expr a, Expr b) { return make_div(std::move(a), std::move(b)); }
Expr ex_rat(long long n, long long d = 1) { return make_const(GaussRat(rat(n, d))); }
Expr ex_sqrt(Expr a) { return make_pow(std::move(a), Rat(1, 2)); }
Expr ex_cbrt(Expr a) { return make_pow(std::move(a), Rat(1, 3)); }
Expr ex_sq(Expr a) { return make_pow(std::move(a), Rat(2)); }
Expr ex_cube(Expr a) { return make_pow(std::move(a), Rat(3)); }

// Primitive cube roots of unity as exact-surd expression constants.
Expr omega(int k) {
    if (k % 3 == 0) return ex_rat(1);
    Expr half_sqrt3_i =
        ex_mul(make_const(GaussRat(Rat(0), Rat(1, 2))), ex_sqrt(ex_rat(3)));
    Expr neg_half = ex_rat(-1, 2);
    if (k % 3 == 1) return ex_add(neg_half, half_sqrt3_i);
    return ex_sub(neg_half, half_sqrt3_i);
}

bool expr_is_zero(const Expr& e) {
    return e->kind == ExprKind::Const && e->value.is_zero();
}

}  // namespace

ParamSolveOutcome solve_in_z_with_parameter(const std::vector<Expr>& coeffs,
                                            const std::string& param_var) {
    (void)param_var;
    ParamSolveOutcome out;
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg >= 0 && expr_is_zero(coeffs[static_cast<size_t>(deg)])) --deg;
    if (deg <= 0) {
        out.warning = "equation has no variable to solve for";
        return out;
    }
    if (deg > 4) {
        out.warning = "degree " + std::to_string(deg) +
                      " >= 5: no closed-form roots; the returned set may be incomplete";
        return out;
    }
    const auto& c = coeffs;
    switch (deg) {
        case 1:
            out.roots.push_back(ex_div(make_neg(c[0]), c[1]));
            break;
        case 2: {
            Expr disc = ex_sub(ex_sq(c[1]), ex_mul(ex_rat(4), ex_mul(c[2], c[0])));
            Expr sq = ex_sqrt(disc);
            Expr den = ex_mul(ex_rat(2), c[2]);
            out.roots.push_back(ex_div(ex_add(make_neg(c[1]), sq), den));
            out.roots.push_back(ex_div(ex_sub(make_neg(c[1]), sq), den));
            break;
        }
        case 3: {
            const Expr &a = c[3], &b = c[2], &cc = c[1], &d = c[0];
            Expr a2 = ex_sq(a), a3 = ex_cube(a), b2 = ex_sq(b), b3 = ex_cube(b);
            Expr p = ex_div(ex_sub(ex_mul(ex_rat(3), ex_mul(a, cc)), b2),
                            ex_mul(ex_rat(3), a2));
            Expr q = ex_div(
                ex_add(ex_sub(ex_mul(ex_rat(2), b3),
                              ex_mul(ex_rat(9), ex_mul(a, ex_mul(b, cc)))),
                       ex_mul(ex_rat(27), ex_mul(a2, d))),
                ex_mul(ex_rat(27), a3));
            Expr delta = ex_add(ex_div(ex_sq(q), ex_rat(4)),
                                ex_div(ex_cube(p), ex_rat(27)));
            Expr u = ex_cbrt(ex_add(ex_div(make_neg(q), ex_rat(2)), ex_sqrt(delta)));
            Expr shift = ex_div(b, ex_mul(ex_rat(3), a));
            for (int k = 0; k < 3; ++k) {
                Expr uk = ex_mul(omega(k), u);
                Expr t = ex_sub(uk, ex_div(p, ex_mul(ex_rat(3), uk)));
                out.roots.push_back(ex_sub(t, shift));
            }
            out.warning =
                "cubic closed form may degenerate at isolated parameter values";
            break;
        }
        case 4: {
            const Expr &a = c[4], &b = c[3], &cc = c[2], &d = c[1], &e = c[0];
            // Depressed quartic t^4 + p t^2 + q t + r, z = t - b/(4a).
            Expr ba = ex_div(b, a), ca = ex_div(cc, a), da = ex_div(d, a),
                 ea = ex_div(e, a);
            Expr ba2 = ex_sq(ba);
            Expr p = ex_sub(ca, ex_mul(ex_rat(3, 8), ba2));
            Expr q = ex_add(ex_sub(da, ex_div(ex_mul(ba, ca), ex_rat(2))),
                            ex_mul(ex_rat(1, 8), ex_cube(ba)));
            Expr r = ex_add(
                ex_sub(ea, ex_mul(ex_rat(1, 4), ex_mul(ba, da))),
                ex_sub(ex_mul(ex_rat(1, 16), ex_mul(ba2, ca)),
                       ex_mul(ex_rat(3, 256), ex_sq(ba2))));
            // Resolvent cubic m^3 + 2p m^2 + (p^2 - 4r) m - q^2 = 0.
            std::vector<Expr> resolvent = {
                make_neg(ex_sq(q)), ex_sub(ex_sq(p), ex_mul(ex_rat(4), r)),
                ex_mul(ex_rat(2), p), ex_rat(1)};
            ParamSolveOutcome cub = solve_in_z_with_parameter(resolvent, param_var);
            Expr m = cub.roots[0];
            Expr sm = ex_sqrt(m);
            Expr shift = ex_div(ba, ex_rat(4));
            for (int s1 : {1, -1}) {
                Expr s1sm = s1 > 0 ? sm : make_neg(sm);
                Expr inner = make_neg(ex_add(
                    ex_add(ex_mul(ex_rat(2), p), m),
                    ex_mul(ex_rat(2 * s1), ex_div(q, sm))));
                Expr si = ex_sqrt(inner);
                for (int s2 : {1, -1}) {
                    Expr t = ex_div(
                        s2 > 0 ? ex_add(s1sm, si) : ex_sub(s1sm, si), ex_rat(2));
                    out.roots.push_back(ex_sub(t, shift));
                }
            }
            out.warning =
                "quartic closed form may degenerate at isolated parameter values";
            break;
        }
    }
    for (auto& r : out.roots) r = fold_constants(r);
    return out;
}

}  // namespace bc
