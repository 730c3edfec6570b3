#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bc/poly.hpp"

namespace bc {

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly UnivariatePoly::monomial(int deg, Rat v) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    c.back() = std::move(v);
    return UnivariatePoly(std::move(c));
}

const Rat& UnivariatePoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    return *this + (-o);
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v = -v;
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divrem(
    const UnivariatePoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    int dn = degree();
    if (dn < dd) return {{}, *this};
    std::vector<Rat> quot(static_cast<size_t>(dn - dd) + 1, Rat(0));
    for (int i = dn; i >= dd; --i) {
        Rat f = rem[static_cast<size_t>(i)] / d.lead();
        if (f == 0) continue;
        quot[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * d.coeff(j);
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long long>(i));
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return {};
    return scaled(Rat(1) / lead());
}

Rat UnivariatePoly::eval(const Rat& t) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

double UnivariatePoly::eval(double t) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + to_double(*it);
    return r;
}

std::pair<Rat, Rat> UnivariatePoly::eval_surd(const Rat& p, const Rat& q,
                                              const Rat& k) const {
    Rat u(0), v(0);  // value = u + v*sqrt(k)
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat nu = u * p + v * q * k + *it;
        Rat nv = u * q + v * p;
        u = std::move(nu);
        v = std::move(nv);
    }
    return {u, v};
}

UnivariatePoly UnivariatePoly::gcd(const UnivariatePoly& o) const {
    UnivariatePoly a = *this, b = o;
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UnivariatePoly UnivariatePoly::square_free_part() const {
    if (degree() <= 1) return *this;
    UnivariatePoly g = gcd(derivative());
    if (g.degree() == 0) return *this;
    return divrem(g).first;
}

UnivariatePoly UnivariatePoly::canonicalized() const {
    if (is_zero()) return {};
    Int l(1), g(0);
    for (const auto& v : c_) {
        l = lcm(l, den(v));
        g = boost::multiprecision::gcd(g, num(v));
    }
    Rat s = Rat(l, g == 0 ? Int(1) : g);
    UnivariatePoly r = scaled(s);
    if (r.lead() < 0) r = -r;
    return r;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = coeff(i);
        if (v == 0) continue;
        Rat a = v < 0 ? Rat(-v) : v;
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---- real root isolation -------------------------------------------------

namespace {

// Number of sign variations in the coefficient list.
int variations(const std::vector<Rat>& c) {
    int v = 0, last = 0;
    for (const auto& r : c) {
        int s = sign(r);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots of p in the open interval (a, b):
// variations of (1+t)^n * p((a + b t)/(1 + t)).
int descartes_bound(const UnivariatePoly& p, const Rat& a, const Rat& b) {
    int n = p.degree();
    // q(t) = sum_i c_i (a + b t)^i (1 + t)^(n-i)
    std::vector<Rat> acc(static_cast<size_t>(n) + 1, Rat(0));
    // Precompute powers.
    std::vector<std::vector<Rat>> powAB(static_cast<size_t>(n) + 1),
        pow1T(static_cast<size_t>(n) + 1);
    // (a + b t)^i coefficients
    powAB[0] = {Rat(1)};
    for (int i = 1; i <= n; ++i) {
        const auto& prev = powAB[static_cast<size_t>(i - 1)];
        std::vector<Rat> cur(prev.size() + 1, Rat(0));
        for (size_t j = 0; j < prev.size(); ++j) {
            cur[j] += prev[j] * a;
            cur[j + 1] += prev[j] * b;
        }
        powAB[static_cast<size_t>(i)] = std::move(cur);
    }
    pow1T[0] = {Rat(1)};
    for (int i = 1; i <= n; ++i) {
        const auto& prev = pow1T[static_cast<size_t>(i - 1)];
        std::vector<Rat> cur(prev.size() + 1, Rat(0));
        for (size_t j = 0; j < prev.size(); ++j) {
            cur[j] += prev[j];
            cur[j + 1] += prev[j];
        }
        pow1T[static_cast<size_t>(i)] = std::move(cur);
    }
    for (int i = 0; i <= n; ++i) {
        const Rat& ci = p.coeff(i);
        if (ci == 0) continue;
        const auto& u = powAB[static_cast<size_t>(i)];
        const auto& v = pow1T[static_cast<size_t>(n - i)];
        for (size_t j = 0; j < u.size(); ++j)
            for (size_t l = 0; l < v.size(); ++l) acc[j + l] += ci * u[j] * v[l];
    }
    return variations(acc);
}

void isolate_rec(const UnivariatePoly& p, const Rat& a, const Rat& b,
                 std::vector<std::pair<Rat, Rat>>& out, int depth) {
    if (depth > 128) {
        out.emplace_back(a, b);
        return;
    }
    int bound = descartes_bound(p, a, b);
    if (bound == 0) return;
    if (bound == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rat m = (a + b) / 2;
    if (p.eval(m) == 0) out.emplace_back(m, m);
    isolate_rec(p, a, m, out, depth + 1);
    isolate_rec(p, m, b, out, depth + 1);
}

// Try to recognize the root in interval as rational or p + q*sqrt(k).
std::optional<Endpoint> recognize_root(const UnivariatePoly& p, double approx) {
    if (auto r = rational_reconstruct(approx, 1000000, 1e-8)) {
        if (p.eval(*r) == 0) return Endpoint::exact(*r);
    }
    // +- sqrt(k)
    if (auto k = rational_reconstruct(approx * approx, 1000000, 1e-8)) {
        if (*k > 0) {
            Rat q(approx < 0 ? -1 : 1);
            auto [u, v] = p.eval_surd(Rat(0), q, *k);
            if (u == 0 && v == 0) {
                // Ensure sqrt(k) is not itself rational (handled above).
                return Endpoint::surd(Rat(0), q, *k);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

void refine_root(const UnivariatePoly& p, IsolatedRoot& r, const Rat& width) {
    if (r.lo == r.hi) return;
    // Isolation counts the open interior, so a zero at an endpoint belongs to
    // a neighbouring interval; step inside until both endpoint signs are
    // defined before bisecting on them.
    while (p.eval(r.lo) == 0 || p.eval(r.hi) == 0) {
        Rat m = (r.lo + r.hi) / 2;
        if (p.eval(m) == 0) {
            r.lo = r.hi = m;
            r.approx = to_double(m);
            return;
        }
        if (descartes_bound(p, r.lo, m) >= 1)
            r.hi = m;
        else
            r.lo = m;
    }
    int sa = sign(p.eval(r.lo));
    while (r.hi - r.lo > width) {
        Rat m = (r.lo + r.hi) / 2;
        int sm = sign(p.eval(m));
        if (sm == 0) {
            r.lo = r.hi = m;
            break;
        }
        if (sm == sa)
            r.lo = m;
        else
            r.hi = m;
    }
    r.approx = to_double((r.lo + r.hi) / 2);
}

std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isolated roots");
    UnivariatePoly sf = p.square_free_part().canonicalized();
    std::vector<IsolatedRoot> out;
    if (sf.degree() < 1) return out;
    // Cauchy bound.
    Rat bound(1);
    for (int i = 0; i < sf.degree(); ++i) {
        Rat t = sf.coeff(i) / sf.lead();
        if (t < 0) t = -t;
        if (t + 1 > bound) bound = t + 1;
    }
    std::vector<std::pair<Rat, Rat>> ivs;
    if (sf.eval(Rat(-bound)) == 0) ivs.emplace_back(-bound, -bound);
    if (sf.eval(bound) == 0) ivs.emplace_back(bound, bound);
    isolate_rec(sf, -bound, bound, ivs, 0);
    std::sort(ivs.begin(), ivs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [lo, hi] : ivs) {
        IsolatedRoot r;
        r.lo = lo;
        r.hi = hi;
        r.approx = to_double((lo + hi) / 2);
        refine_root(sf, r, Rat(1, 1000000000000LL));
        if (r.lo == r.hi)
            r.exact = Endpoint::exact(r.lo);
        else
            r.exact = recognize_root(sf, r.approx);
        if (r.exact) r.approx = r.exact->value();
        out.push_back(std::move(r));
    }
    // A shifted surd root u + q*sqrt(k) comes with its conjugate u - q*sqrt(k);
    // recover both exactly from the midpoint and half-distance of the pair.
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].exact) continue;
        for (size_t j = 0; j < out.size(); ++j) {
            if (i == j) continue;
            double mid = (out[i].approx + out[j].approx) / 2;
            double half = (out[i].approx - out[j].approx) / 2;
            auto u = rational_reconstruct(mid, 1000, 1e-9);
            auto k = rational_reconstruct(half * half, 1000000, 1e-9);
            if (!u || !k || !(*k > 0)) continue;
            Rat q(half < 0 ? -1 : 1);
            auto [re, im] = sf.eval_surd(*u, q, *k);
            if (re == 0 && im == 0) {
                out[i].exact = Endpoint::surd(*u, q, *k);
                out[i].approx = out[i].exact->value();
                break;
            }
        }
    }
    // Guard against duplicated exact endpoints from the pre-seeded bound checks.
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IsolatedRoot& a, const IsolatedRoot& b) {
                              return std::abs(a.approx - b.approx) < 1e-13;
                          }),
              out.end());
    return out;
}

Rat resultant(const UnivariatePoly& f, const UnivariatePoly& g) {
    int m = f.degree(), n = g.degree();
    if (f.is_zero() || g.is_zero()) return Rat(0);
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= f.coeff(0);
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= g.coeff(0);
        return r;
    }
    int size = m + n;
    std::vector<std::vector<Rat>> a(static_cast<size_t>(size),
                                    std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g.coeff(n - j);
    // Gaussian elimination over Q.
    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        Rat p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int r = col + 1; r < size; ++r) {
            Rat f2 = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (f2 == 0) continue;
            for (int cc = col; cc < size; ++cc)
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f2 * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    return det;
}

}  // namespace bc
