#include "bc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "bc/realexpr.hpp"

namespace bc {

namespace {

using Point = std::pair<double, double>;

constexpr double kParamLimit = 50.0;  // sweep bound for unbounded parameters
constexpr int kMaxRefineDepth = 12;

LineStyle style_for(const CutClass& cl) {
    switch (cl.verdict) {
        case CutClass::True: return LineStyle::Solid;
        case CutClass::Spurious: return LineStyle::Dashed;
        default: return LineStyle::Dotted;
    }
}

LineStyle segment_style(const CutSegment& s) {
    if (!s.known) return LineStyle::Dotted;
    return s.is_true ? LineStyle::Solid : LineStyle::Dashed;
}

// t -> point on the cut, empty when not evaluable there.
std::function<std::optional<Point>(double)> tracer(
    const BranchCut& cut, const std::map<std::string, double>& params) {
    if (cut.form == BranchCut::RealCurve) {
        const RadicalSolution* c = &*cut.curve;
        return [c](double t) -> std::optional<Point> {
            double d = re_eval(c->expr, t);
            if (!std::isfinite(d)) return std::nullopt;
            auto [x, y] = c->point(t);
            return Point{x, y};
        };
    }
    if (cut.form == BranchCut::ParamCurve) {
        const ParametricCut* c = &*cut.parametric;
        return [c, params](double t) -> std::optional<Point> {
            auto bound = params;
            bound[c->param] = t;
            try {
                Complex z = eval_numeric(c->point, {0.0, 0.0}, bound);
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                    return std::nullopt;
                return Point{z.real(), z.imag()};
            } catch (const EvalError&) {
                return std::nullopt;
            }
        };
    }
    return nullptr;
}

// Sweep window for the cut parameter, clipped to the viewport when the
// parameter is a plane coordinate.
bool sweep_window(const BranchCut& cut, const Viewport& vp, double& lo,
                  double& hi) {
    const ExtendedInterval* range;
    double clip_lo, clip_hi;
    if (cut.form == BranchCut::RealCurve) {
        range = &cut.curve->validity;
        if (cut.curve->free_var() == 'x') {
            clip_lo = vp.x_min;
            clip_hi = vp.x_max;
        } else {
            clip_lo = vp.y_min;
            clip_hi = vp.y_max;
        }
    } else if (cut.form == BranchCut::ParamCurve) {
        range = &cut.parametric->range;
        clip_lo = -kParamLimit;
        clip_hi = kParamLimit;
    } else {
        return false;
    }
    lo = std::max(range->lo.value(), clip_lo);
    hi = std::min(range->hi.value(), clip_hi);
    return hi - lo > 1e-12;
}

struct Sampler {
    const Viewport& vp;
    std::function<std::optional<Point>(double)> at;
    double tol;  // max spacing between consecutive points
    std::vector<Polyline>& out;
    Polyline current;

    void close() {
        if (current.points.size() >= 2) out.push_back(current);
        current.points.clear();
    }
    void push(const Point& p) {
        if (!vp.contains(p.first, p.second)) {
            close();
            return;
        }
        current.points.push_back(p);
    }
    void refine(double t0, const Point& p0, double t1, const Point& p1, int depth) {
        double dist = std::hypot(p1.first - p0.first, p1.second - p0.second);
        bool inside = vp.contains(p0.first, p0.second) ||
                      vp.contains(p1.first, p1.second);
        if (dist <= tol || depth <= 0 || !inside) {
            push(p1);
            return;
        }
        double tm = 0.5 * (t0 + t1);
        auto pm = at(tm);
        if (!pm) {
            close();
            push(p1);
            return;
        }
        refine(t0, p0, tm, *pm, depth - 1);
        refine(tm, *pm, t1, p1, depth - 1);
    }
    void sweep(double lo, double hi, LineStyle style) {
        current.style = style;
        int n = static_cast<int>(std::ceil((hi - lo) * vp.resolution));
        n = std::clamp(n, 16, 4000);
        std::optional<Point> prev;
        double t_prev = lo;
        for (int i = 0; i <= n; ++i) {
            double t = lo + (hi - lo) * i / n;
            auto p = at(t);
            if (!p) {
                close();
                prev.reset();
                continue;
            }
            if (!prev)
                push(*p);
            else
                refine(t_prev, *prev, t, *p, kMaxRefineDepth);
            prev = p;
            t_prev = t;
        }
        close();
    }
};

}  // namespace

std::vector<Polyline> sample_cut(const BranchCut& cut, const Viewport& vp,
                                 const std::map<std::string, double>& params) {
    std::vector<Polyline> out;
    auto at = tracer(cut, params);
    if (!at) return out;  // semi-algebraic: nothing to sweep
    double lo, hi;
    if (!sweep_window(cut, vp, lo, hi)) return out;
    Sampler s{vp, at, 2.0 / vp.resolution, out, {}};
    const auto& cl = cut.classification;
    if (cl.verdict == CutClass::Mixed && !cl.segments.empty()) {
        for (const CutSegment& seg : cl.segments) {
            double a = std::max(lo, seg.t0), b = std::min(hi, seg.t1);
            if (b - a > 1e-12) s.sweep(a, b, segment_style(seg));
        }
    } else {
        s.sweep(lo, hi, style_for(cl));
    }
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* style_class(LineStyle s) {
    switch (s) {
        case LineStyle::Solid: return "true-cut";
        case LineStyle::Dashed: return "spurious-cut";
        default: return "unclassified-cut";
    }
}

}  // namespace

std::string emit_svg(const CutSet& cs, const Viewport& vp,
                     const std::map<std::string, double>& params) {
    constexpr double W = 640.0, H = 640.0, M = 24.0;
    double sx = (W - 2 * M) / (vp.x_max - vp.x_min);
    double sy = (H - 2 * M) / (vp.y_max - vp.y_min);
    auto X = [&](double x) { return M + (x - vp.x_min) * sx; };
    auto Y = [&](double y) { return H - M - (y - vp.y_min) * sy; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)W
        << "\" height=\"" << (int)H << "\" viewBox=\"0 0 " << (int)W << " "
        << (int)H << "\">\n"
        << "<style>\n"
        << ".frame{fill:none;stroke:#444;stroke-width:1}\n"
        << ".axis{stroke:#bbb;stroke-width:1}\n"
        << ".true-cut{fill:none;stroke:#000;stroke-width:2}\n"
        << ".spurious-cut{fill:none;stroke:#c02020;stroke-width:2;"
           "stroke-dasharray:8 4}\n"
        << ".unclassified-cut{fill:none;stroke:#606060;stroke-width:2;"
           "stroke-dasharray:2 4}\n"
        << "</style>\n";
    svg << "<rect class=\"frame\" x=\"" << fmt(M) << "\" y=\"" << fmt(M)
        << "\" width=\"" << fmt(W - 2 * M) << "\" height=\"" << fmt(H - 2 * M)
        << "\"/>\n";
    if (vp.x_min < 0 && vp.x_max > 0)
        svg << "<line class=\"axis\" x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(M)
            << "\" x2=\"" << fmt(X(0)) << "\" y2=\"" << fmt(H - M) << "\"/>\n";
    if (vp.y_min < 0 && vp.y_max > 0)
        svg << "<line class=\"axis\" x1=\"" << fmt(M) << "\" y1=\"" << fmt(Y(0))
            << "\" x2=\"" << fmt(W - M) << "\" y2=\"" << fmt(Y(0)) << "\"/>\n";
    for (const BranchCut& cut : cs.cuts) {
        for (const Polyline& pl : sample_cut(cut, vp, params)) {
            svg << "<path class=\"" << style_class(pl.style) << "\" d=\"";
            for (size_t i = 0; i < pl.points.size(); ++i) {
                svg << (i == 0 ? "M" : " L") << fmt(X(pl.points[i].first)) << " "
                    << fmt(Y(pl.points[i].second));
            }
            svg << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::vector<std::pair<double, double>> grid_discontinuity_scan(
    const Expr& e, const Viewport& vp,
    const std::map<std::string, double>& params) {
    int nx = std::max(2, (int)std::lround((vp.x_max - vp.x_min) * vp.resolution));
    int ny = std::max(2, (int)std::lround((vp.y_max - vp.y_min) * vp.resolution));
    auto xs = [&](int i) { return vp.x_min + (vp.x_max - vp.x_min) * i / nx; };
    auto ys = [&](int j) { return vp.y_min + (vp.y_max - vp.y_min) * j / ny; };

    std::vector<Complex> grid((nx + 1) * (ny + 1));
    std::vector<char> usable((nx + 1) * (ny + 1), 0);
    auto idx = [&](int i, int j) { return j * (nx + 1) + i; };
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            Complex v;
            try {
                v = eval_numeric(e, {xs(i), ys(j)}, params);
            } catch (const EvalError&) {
                continue;
            }
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
            if (std::abs(v) > 1e6) continue;  // pole neighborhood, not a cut
            grid[idx(i, j)] = v;
            usable[idx(i, j)] = 1;
        }

    std::vector<std::pair<double, double>> out;
    // Deltas along one grid line; an edge is marked when it dwarfs the
    // median delta of its 7-edge neighborhood.
    auto scan_line = [&](const std::vector<double>& deltas,
                         const std::vector<std::pair<double, double>>& mids) {
        int n = (int)deltas.size();
        for (int i = 0; i < n; ++i) {
            if (!(deltas[i] > 1e-3)) continue;
            int a = std::max(0, i - 3), b = std::min(n - 1, i + 3);
            std::vector<double> win;
            for (int k = a; k <= b; ++k)
                if (k != i && deltas[k] >= 0) win.push_back(deltas[k]);
            if (win.empty()) continue;
            std::nth_element(win.begin(), win.begin() + win.size() / 2, win.end());
            double med = win[win.size() / 2];
            if (deltas[i] > 10.0 * med) out.push_back(mids[i]);
        }
    };

    std::vector<double> deltas;
    std::vector<std::pair<double, double>> mids;
    for (int j = 0; j <= ny; ++j) {  // horizontal edges
        deltas.assign(nx, -1.0);
        mids.assign(nx, {});
        for (int i = 0; i < nx; ++i) {
            if (!usable[idx(i, j)] || !usable[idx(i + 1, j)]) continue;
            deltas[i] = std::abs(grid[idx(i + 1, j)] - grid[idx(i, j)]);
            mids[i] = {0.5 * (xs(i) + xs(i + 1)), ys(j)};
        }
        scan_line(deltas, mids);
    }
    for (int i = 0; i <= nx; ++i) {  // vertical edges
        deltas.assign(ny, -1.0);
        mids.assign(ny, {});
        for (int j = 0; j < ny; ++j) {
            if (!usable[idx(i, j)] || !usable[idx(i, j + 1)]) continue;
            deltas[j] = std::abs(grid[idx(i, j + 1)] - grid[idx(i, j)]);
            mids[j] = {xs(i), 0.5 * (ys(j) + ys(j + 1))};
        }
        scan_line(deltas, mids);
    }
    return out;
}

}  // namespace bc
