#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "bc/poly.hpp"

namespace bc {

void BivariatePoly::set(const Key& k, Rat v) {
    if (v == 0)
        terms_.erase(k);
    else
        terms_[k] = std::move(v);
}

BivariatePoly BivariatePoly::constant(Rat v) {
    BivariatePoly p;
    p.set({0, 0}, std::move(v));
    return p;
}

BivariatePoly BivariatePoly::monomial(int dx, int dy, Rat v) {
    BivariatePoly p;
    p.set({dx, dy}, std::move(v));
    return p;
}

int BivariatePoly::degree_x() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::degree_y() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}

int BivariatePoly::total_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, v] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = v;
        else {
            it->second += v;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + (-o);
}

BivariatePoly BivariatePoly::scaled(const Rat& s) const {
    if (s == 0) return {};
    BivariatePoly r = *this;
    for (auto& [k, v] : r.terms_) v *= s;
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_[k] = va * vb;
            else {
                it->second += va * vb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

BivariatePoly BivariatePoly::pow(int n) const {
    BivariatePoly r = constant(Rat(1));
    BivariatePoly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

double BivariatePoly::eval(double xv, double yv) const {
    double s = 0.0;
    for (const auto& [k, v] : terms_)
        s += to_double(v) * std::pow(xv, k.first) * std::pow(yv, k.second);
    return s;
}

Rat BivariatePoly::eval(const Rat& xv, const Rat& yv) const {
    Rat s(0);
    for (const auto& [k, v] : terms_) {
        Rat t = v;
        for (int i = 0; i < k.first; ++i) t *= xv;
        for (int i = 0; i < k.second; ++i) t *= yv;
        s += t;
    }
    return s;
}

std::vector<UnivariatePoly> BivariatePoly::coeffs_in(bool in_x) const {
    int d = in_x ? degree_x() : degree_y();
    std::vector<std::vector<Rat>> cs(static_cast<size_t>(d) + 1);
    for (const auto& [k, v] : terms_) {
        int main_deg = in_x ? k.first : k.second;
        int other_deg = in_x ? k.second : k.first;
        auto& vec = cs[static_cast<size_t>(main_deg)];
        if (static_cast<int>(vec.size()) <= other_deg)
            vec.resize(static_cast<size_t>(other_deg) + 1, Rat(0));
        vec[static_cast<size_t>(other_deg)] = v;
    }
    std::vector<UnivariatePoly> out;
    out.reserve(cs.size());
    for (auto& v : cs) out.emplace_back(std::move(v));
    return out;
}

BivariatePoly BivariatePoly::from_coeffs_in(bool in_x,
                                            const std::vector<UnivariatePoly>& cs) {
    BivariatePoly r;
    for (size_t i = 0; i < cs.size(); ++i)
        for (int j = 0; j <= cs[i].degree(); ++j) {
            if (cs[i].coeff(j) == 0) continue;
            Key k = in_x ? Key{static_cast<int>(i), j} : Key{j, static_cast<int>(i)};
            r.set(k, r.terms_.count(k) ? r.terms_[k] + cs[i].coeff(j) : cs[i].coeff(j));
        }
    return r;
}

UnivariatePoly BivariatePoly::substitute_x(const Rat& xv) const {
    std::vector<Rat> c(static_cast<size_t>(degree_y()) + 1, Rat(0));
    for (const auto& [k, v] : terms_) {
        Rat t = v;
        for (int i = 0; i < k.first; ++i) t *= xv;
        c[static_cast<size_t>(k.second)] += t;
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly BivariatePoly::substitute_y(const Rat& yv) const {
    std::vector<Rat> c(static_cast<size_t>(degree_x()) + 1, Rat(0));
    for (const auto& [k, v] : terms_) {
        Rat t = v;
        for (int i = 0; i < k.second; ++i) t *= yv;
        c[static_cast<size_t>(k.first)] += t;
    }
    return UnivariatePoly(std::move(c));
}

BivariatePoly BivariatePoly::canonicalized() const {
    if (is_zero()) return {};
    Int l(1), g(0);
    for (const auto& [k, v] : terms_) {
        l = lcm(l, den(v));
        g = boost::multiprecision::gcd(g, num(v));
    }
    BivariatePoly r = scaled(Rat(l, g == 0 ? Int(1) : g));
    // Graded-lex leading term, x > y.
    Key best{-1, -1};
    for (const auto& [k, v] : r.terms_) {
        auto rank = [](const Key& kk) {
            return std::tuple<int, int, int>(kk.first + kk.second, kk.first, kk.second);
        };
        if (best.first < 0 || rank(k) > rank(best)) best = k;
    }
    if (r.terms_[best] < 0) r = -r;
    return r;
}

std::tuple<int, int, BivariatePoly> BivariatePoly::extract_monomial() const {
    if (is_zero()) return {0, 0, {}};
    int mx = 1 << 30, my = 1 << 30;
    for (const auto& [k, v] : terms_) {
        mx = std::min(mx, k.first);
        my = std::min(my, k.second);
    }
    BivariatePoly r;
    for (const auto& [k, v] : terms_) r.set({k.first - mx, k.second - my}, v);
    return {mx, my, r};
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    // Graded-lex descending order for stable display.
    std::vector<std::pair<Key, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        auto rank = [](const Key& k) {
            return std::tuple<int, int>(k.first + k.second, k.first);
        };
        return rank(a.first) > rank(b.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : ts) {
        Rat a = v < 0 ? Rat(-v) : v;
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        bool coeff_shown = (a != 1) || (k.first == 0 && k.second == 0);
        if (coeff_shown) os << to_string(a);
        auto var = [&](const char* n, int d, bool lead_star) {
            if (d == 0) return;
            if (lead_star) os << "*";
            os << n;
            if (d > 1) os << "^" << d;
        };
        var("x", k.first, coeff_shown);
        var("y", k.second, coeff_shown || k.first > 0);
    }
    return os.str();
}

UnivariatePoly bivariate_resultant(const BivariatePoly& f, const BivariatePoly& g,
                                   bool eliminate_x) {
    auto fc = f.coeffs_in(eliminate_x);
    auto gc = g.coeffs_in(eliminate_x);
    int df = static_cast<int>(fc.size()) - 1;
    int dg = static_cast<int>(gc.size()) - 1;
    if (df < 0 || dg < 0) return {};
    if (df == 0) {
        UnivariatePoly r = UnivariatePoly::constant(Rat(1));
        for (int i = 0; i < dg; ++i) r = r * fc[0];
        return r;
    }
    if (dg == 0) {
        UnivariatePoly r = UnivariatePoly::constant(Rat(1));
        for (int i = 0; i < df; ++i) r = r * gc[0];
        return r;
    }
    int max_other = 0;
    for (const auto& p : fc) max_other = std::max(max_other, p.degree());
    int dfo = max_other;
    max_other = 0;
    for (const auto& p : gc) max_other = std::max(max_other, p.degree());
    int bound = df * max_other + dg * dfo;  // degree bound for the resultant
    // Interpolate at rational nodes where neither leading coefficient vanishes.
    std::vector<Rat> nodes, values;
    long long t = 0;
    while (static_cast<int>(nodes.size()) <= bound) {
        Rat tv(t);
        t = t >= 0 ? -(t + 1) : -t;  // 0, -1, 1, -2, 2, ...
        if (fc[static_cast<size_t>(df)].eval(tv) == 0) continue;
        if (gc[static_cast<size_t>(dg)].eval(tv) == 0) continue;
        std::vector<Rat> fv, gv;
        for (const auto& p : fc) fv.push_back(p.eval(tv));
        for (const auto& p : gc) gv.push_back(p.eval(tv));
        values.push_back(resultant(UnivariatePoly(std::move(fv)),
                                   UnivariatePoly(std::move(gv))));
        nodes.push_back(tv);
    }
    // Lagrange interpolation (Newton form).
    size_t n = nodes.size();
    std::vector<Rat> divided = values;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / (nodes[i] - nodes[i - j]);
            if (i == j) break;
        }
    UnivariatePoly result = UnivariatePoly::constant(divided[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        UnivariatePoly lin({-nodes[i], Rat(1)});
        result = result * lin + UnivariatePoly::constant(divided[i]);
    }
    return result;
}

}  // namespace bc
