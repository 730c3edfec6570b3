#include <doctest.h>

#include <random>

#include "bc/poly.hpp"

using namespace bc;

namespace {

// Independent oracle: number of distinct real roots by Sturm's theorem.
int sturm_root_count(const UnivariatePoly& p) {
    UnivariatePoly f = p.square_free_part();
    if (f.degree() <= 0) return 0;
    std::vector<UnivariatePoly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = chain[chain.size() - 2].divrem(chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    auto signs_at_inf = [&](int dir) {
        std::vector<int> s;
        for (const auto& g : chain) {
            if (g.is_zero()) continue;
            int lead = sign(g.lead());
            if (dir < 0 && g.degree() % 2 == 1) lead = -lead;
            s.push_back(lead);
        }
        return s;
    };
    auto variations = [](const std::vector<int>& s) {
        int v = 0;
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] != s[i - 1]) ++v;
        return v;
    };
    return variations(signs_at_inf(-1)) - variations(signs_at_inf(+1));
}

}  // namespace

TEST_CASE("univariate arithmetic basics") {
    UnivariatePoly p({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
    UnivariatePoly q({Rat(1), Rat(1)});           // t + 1
    auto [quot, rem] = p.divrem(q);
    CHECK(rem.is_zero());
    CHECK(quot == UnivariatePoly({Rat(-1), Rat(1)}));
    CHECK(p.gcd(q).monic() == q.monic());
    CHECK(p.derivative() == UnivariatePoly({Rat(0), Rat(2)}));
    CHECK(p.eval(Rat(3)) == Rat(8));

    // canonical form: primitive integer coefficients, positive lead
    UnivariatePoly s({Rat(1, 2), Rat(0), Rat(-1, 2)});
    CHECK(s.canonicalized() == UnivariatePoly({Rat(-1), Rat(0), Rat(1)}));
}

TEST_CASE("square-free part strips multiplicity") {
    UnivariatePoly lin({Rat(-2), Rat(1)});  // t - 2
    UnivariatePoly p = lin * lin * lin;
    CHECK(p.square_free_part().monic() == lin.monic());
}

TEST_CASE("surd-value endpoint evaluation") {
    // p(t) = t^2 - 2 at t = sqrt(2) is exactly zero
    UnivariatePoly p({Rat(-2), Rat(0), Rat(1)});
    auto [a, b] = p.eval_surd(Rat(0), Rat(1), Rat(2));
    CHECK(a == 0);
    CHECK(b == 0);
}

TEST_CASE("root isolation agrees with the Sturm oracle on random polynomials") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        int d = deg(rng);
        std::vector<Rat> cs(d + 1);
        for (auto& c : cs) c = Rat(coeff(rng));
        if (cs.back() == 0) cs.back() = Rat(1);
        UnivariatePoly p(cs);
        CAPTURE(p.str());
        auto roots = isolate_real_roots(p);
        CHECK((int)roots.size() == sturm_root_count(p));
        // every isolated root supports its interval
        UnivariatePoly sf = p.square_free_part();
        for (auto& r : roots) {
            if (r.lo == r.hi) {
                CHECK(sf.eval(r.lo) == 0);
            } else {
                CHECK(sign(sf.eval(r.lo)) * sign(sf.eval(r.hi)) < 0);
            }
            CHECK(std::abs(sf.eval(r.approx)) < 1e-6 * (1 + std::abs(r.approx)));
        }
    }
}

TEST_CASE("exact quadratic-surd roots are recognized") {
    // t^2 - 2t - 1 has roots 1 +- sqrt(2)
    UnivariatePoly p({Rat(-1), Rat(-2), Rat(1)});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    int exact = 0;
    for (auto& r : roots)
        if (r.exact) ++exact;
    CHECK(exact == 2);
}

TEST_CASE("resultant vanishes iff common root") {
    UnivariatePoly f({Rat(-1), Rat(0), Rat(1)});  // t^2-1
    UnivariatePoly g({Rat(-1), Rat(1)});          // t-1
    CHECK(resultant(f, g) == 0);
    UnivariatePoly h({Rat(-3), Rat(1)});  // t-3
    CHECK(resultant(f, h) != 0);
}

TEST_CASE("extract_square and surd normalization") {
    auto [s, k] = extract_square(Int(48));
    CHECK(s == 4);
    CHECK(k == 3);
    Rat q(1), kk(8);
    normalize_surd(q, kk);  // sqrt(8) = 2 sqrt(2)
    CHECK(q == 2);
    CHECK(kk == 2);
    Rat q2(3), k2(1, 4);  // 3 sqrt(1/4) = 3/2
    normalize_surd(q2, k2);
    CHECK(k2 == 1);
    CHECK(q2 == Rat(3, 2));
}

TEST_CASE("bivariate canonical form and monomial extraction") {
    BivariatePoly p = BivariatePoly::monomial(1, 1, Rat(-2));  // -2xy
    auto c = p.canonicalized();
    CHECK(c == BivariatePoly::monomial(1, 1, Rat(1)));
    auto [dx, dy, cof] = (BivariatePoly::x() * BivariatePoly::y() *
                          (BivariatePoly::x() + BivariatePoly::y()))
                             .extract_monomial();
    CHECK(dx == 1);
    CHECK(dy == 1);
    CHECK(cof == BivariatePoly::x() + BivariatePoly::y());
}

TEST_CASE("bivariate resultant eliminates a variable") {
    // f = x^2 + y^2 - 1, g = x - y: common zeros have y = +-1/sqrt(2)
    BivariatePoly f = BivariatePoly::x() * BivariatePoly::x() +
                      BivariatePoly::y() * BivariatePoly::y() -
                      BivariatePoly::constant(Rat(1));
    BivariatePoly g = BivariatePoly::x() - BivariatePoly::y();
    UnivariatePoly r = bivariate_resultant(f, g, true).canonicalized();
    // 2y^2 - 1 up to scale
    CHECK(r == UnivariatePoly({Rat(-1), Rat(0), Rat(2)}));
}
