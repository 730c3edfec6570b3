#include <doctest.h>

#include <cmath>
#include <random>

#include "bc/eval.hpp"
#include "bc/parser.hpp"
#include "bc/reim.hpp"

using namespace bc;

namespace {

double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / (1.0 + std::abs(b));
}

}  // namespace

TEST_CASE("re_im_parts matches numeric evaluation on rational functions") {
    const char* exprs[] = {
        "z^2 - 1",
        "2*z^3 + z - 5",
        "z*(1 + z)/(1 - z^3)",
        "3/(z + 2)^3",
        "(5*z + 12)/(3*(z + 4))",
        "(1/2 + i)*z^2 - i*z",
    };
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const char* s : exprs) {
        CAPTURE(s);
        Expr e = parse(s);
        ReImParts parts = re_im_parts(e);
        for (int i = 0; i < 40; ++i) {
            double x = u(rng), y = u(rng);
            double den = parts.den.eval(x, y);
            if (std::abs(den) < 1e-6) continue;  // near a pole
            Complex direct = eval_numeric(e, {x, y});
            Complex split{parts.re_num.eval(x, y) / den,
                          parts.im_num.eval(x, y) / den};
            CHECK(rel_err(split, direct) < 1e-9);
        }
    }
}

TEST_CASE("re_im_parts has real nonnegative denominator") {
    ReImParts p = re_im_parts(parse("z*(1 + z)/(1 - z^3)"));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) CHECK(p.den.eval(u(rng), u(rng)) >= 0.0);
    // polynomial input: denominator is one
    CHECK(re_im_parts(parse("z^2 - 1")).den == BivariatePoly::constant(Rat(1)));
}

TEST_CASE("re_im_parts rejects non-rational input") {
    CHECK_THROWS_AS(re_im_parts(parse("sqrt(z)")), NotRational);
    CHECK_THROWS_AS(re_im_parts(parse("log(z)")), NotRational);
}

TEST_CASE("principal-branch evaluation matches the standard library") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    struct Row {
        const char* text;
        Complex (*ref)(Complex);
    };
    const Row rows[] = {
        {"log(z)", [](Complex w) { return std::log(w); }},
        {"sqrt(z)", [](Complex w) { return std::sqrt(w); }},
        {"exp(z)", [](Complex w) { return std::exp(w); }},
        {"sin(z)", [](Complex w) { return std::sin(w); }},
        {"cos(z)", [](Complex w) { return std::cos(w); }},
        {"arcsin(z)", [](Complex w) { return std::asin(w); }},
        {"arccos(z)", [](Complex w) { return std::acos(w); }},
        {"arctan(z)", [](Complex w) { return std::atan(w); }},
        {"arcsinh(z)", [](Complex w) { return std::asinh(w); }},
        {"arccosh(z)", [](Complex w) { return std::acosh(w); }},
        {"arctanh(z)", [](Complex w) { return std::atanh(w); }},
    };
    for (const Row& r : rows) {
        CAPTURE(r.text);
        Expr e = parse(r.text);
        int checked = 0;
        for (int i = 0; i < 40 && checked < 20; ++i) {
            Complex w{u(rng), u(rng)};
            if (std::abs(w.imag()) < 1e-3) continue;  // stay off the axes
            Complex got = eval_numeric(e, w);
            Complex want = r.ref(w);
            CAPTURE(w.real());
            CAPTURE(w.imag());
            CHECK(rel_err(got, want) < 1e-12);
            ++checked;
        }
        CHECK(checked == 20);
    }
}

TEST_CASE("arccot follows the Maple convention arccot(z) = arctan(1/z) off axis") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(0.2, 2.5);
    Expr e = parse("arccot(z)");
    for (int i = 0; i < 20; ++i) {
        Complex w{u(rng), u(rng)};  // first quadrant: conventions agree
        CHECK(rel_err(eval_numeric(e, w), std::atan(1.0 / w)) < 1e-12);
    }
}

TEST_CASE("Bessel evaluation against the half-order closed form and std") {
    // J_{1/2}(w) = sqrt(2/(pi w)) sin w
    std::map<std::string, double> half{{"a", 0.5}};
    Expr e = parse("BesselJ(a, z)", {"z", {"a"}});
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        Complex w{u(rng), u(rng)};
        if (std::abs(w) < 0.2) continue;
        Complex want = std::sqrt(2.0 / (M_PI * w)) * std::sin(w);
        CHECK(rel_err(eval_numeric(e, w, half), want) < 1e-9);
    }
    // integer order on the real line vs std::cyl_bessel_j
    std::map<std::string, double> zero{{"a", 0.0}};
    for (double x : {0.3, 1.1, 2.7, 5.0})
        CHECK(rel_err(eval_numeric(e, {x, 0.0}, zero),
                      Complex{std::cyl_bessel_j(0.0, x), 0.0}) < 1e-9);
}

TEST_CASE("unbound parameters throw; poles do not") {
    Expr e = parse("BesselJ(a, z)", {"z", {"a"}});
    CHECK_THROWS_AS(eval_numeric(e, {1.0, 0.0}), EvalError);
    Complex v = eval_numeric(parse("1/z"), {0.0, 0.0});
    CHECK(!std::isfinite(std::abs(v)));
}
