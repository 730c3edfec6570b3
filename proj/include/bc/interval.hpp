#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "bc/rational.hpp"

namespace bc {

// Interval endpoint. Exact endpoints are quadratic surds p + q*sqrt(k)
// (rational when q == 0); endpoints found only numerically carry an
// approximate double and are flagged as such.
struct Endpoint {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat p;           // rational part
    Rat q;           // surd coefficient
    Rat k;           // surd base, k >= 0, meaningful when q != 0
    bool approx = false;
    double approx_value = 0.0;

    static Endpoint neg_inf() { return {NegInf, 0, 0, 0}; }
    static Endpoint pos_inf() { return {PosInf, 0, 0, 0}; }
    static Endpoint exact(Rat r) { return {Finite, std::move(r), 0, 0}; }
    static Endpoint surd(Rat p_, Rat q_, Rat k_) {
        if (q_ == 0 || k_ == 0) return exact(p_ + q_ * 0);
        normalize_surd(q_, k_);
        if (k_ == 1) return exact(p_ + q_);
        return {Finite, std::move(p_), std::move(q_), std::move(k_)};
    }
    static Endpoint approximate(double v) {
        Endpoint e{Finite, 0, 0, 0};
        e.approx = true;
        e.approx_value = v;
        return e;
    }

    bool is_finite() const { return kind == Finite; }
    bool is_exact_rational() const { return kind == Finite && !approx && q == 0; }

    double value() const {
        switch (kind) {
            case NegInf: return -HUGE_VAL;
            case PosInf: return HUGE_VAL;
            default:
                if (approx) return approx_value;
                return to_double(p) + to_double(q) * std::sqrt(to_double(k));
        }
    }

    bool same_as(const Endpoint& o) const;
    std::string str() const;
};

struct ExtendedInterval {
    Endpoint lo = Endpoint::neg_inf();
    Endpoint hi = Endpoint::pos_inf();
    bool lo_open = true;
    bool hi_open = true;

    static ExtendedInterval whole() { return {}; }
    static ExtendedInterval open(Endpoint l, Endpoint h) { return {std::move(l), std::move(h), true, true}; }

    bool contains(double t) const {
        double l = lo.value(), h = hi.value();
        if (t < l || (lo_open && t == l)) return false;
        if (t > h || (hi_open && t == h)) return false;
        return true;
    }
    bool empty() const { return lo.value() > hi.value(); }
    bool same_as(const ExtendedInterval& o) const {
        return lo.same_as(o.lo) && hi.same_as(o.hi) && lo_open == o.lo_open &&
               hi_open == o.hi_open;
    }
    std::string str() const;
};

}  // namespace bc
