#include <doctest.h>

#include <cmath>
#include <random>

#include "bc/eval.hpp"
#include "bc/solve.hpp"

using namespace bc;

namespace {

BivariatePoly X() { return BivariatePoly::x(); }
BivariatePoly Y() { return BivariatePoly::y(); }
BivariatePoly C(long long n, long long d = 1) {
    return BivariatePoly::constant(rat(n, d));
}

// Sample points of every solution branch satisfy the defining factor.
void check_sound(const BivariatePoly& p, int min_solutions) {
    SolveOutcome out = solve_for_variable(p);
    CHECK((int)out.solutions.size() >= min_solutions);
    for (const auto& sol : out.solutions) {
        double lo = std::max(sol.validity.lo.value(), -5.0);
        double hi = std::min(sol.validity.hi.value(), 5.0);
        if (hi <= lo) continue;
        int hits = 0;
        for (int i = 1; i < 40; ++i) {
            double t = lo + (hi - lo) * i / 40;
            auto [x, y] = sol.point(t);
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            double v = sol.factor.eval(x, y);
            double scale = 1.0 + std::abs(x) + std::abs(y);
            CHECK(std::abs(v) < 1e-6 * scale * scale * scale);
            ++hits;
        }
        CHECK(hits > 0);
    }
}

}  // namespace

TEST_CASE("linear and quadratic solving") {
    // 2xy = 0: the two axes
    SolveOutcome axes = solve_for_variable(X() * Y() * C(2));
    CHECK(axes.complete());
    CHECK(axes.solutions.size() == 2);

    // x^2 + y^2 - 1: circle, two branches in y
    check_sound(X() * X() + Y() * Y() - C(1), 2);

    // y^2 - x: parabola; solved for x as the single linear branch
    check_sound(Y() * Y() - X(), 1);
}

TEST_CASE("biquadratic factors solve via nested radicals") {
    // y^4 - 2y^2 + x^2: quadratic in y^2
    check_sound(Y().pow(4) - Y() * Y() * C(2) + X() * X(), 2);
}

TEST_CASE("high-degree factors are reported unsolved with a reason") {
    // x^3 y^3 + x + y resists both orientations
    BivariatePoly p = X().pow(3) * Y().pow(3) + X() + Y();
    SolveOutcome out = solve_for_variable(p);
    CHECK_FALSE(out.complete());
    REQUIRE(out.unsolved.size() == 1);
    CHECK_FALSE(out.unsolved[0].reason.empty());
}

TEST_CASE("random conic soundness") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int iter = 0; iter < 50; ++iter) {
        BivariatePoly p = X() * X() * C(c(rng)) + X() * Y() * C(c(rng)) +
                          Y() * Y() * C(c(rng)) + X() * C(c(rng)) +
                          Y() * C(c(rng)) + C(c(rng));
        if (p.is_zero() || p.total_degree() == 0) continue;
        CAPTURE(p.str());
        check_sound(p, 0);
    }
}

TEST_CASE("inequality restriction keeps exactly the feasible region") {
    // line y = 0 (factor y), restricted by x^2 - 1 < 0 -> (-1, 1)
    SolveOutcome out = solve_for_variable(Y());
    REQUIRE(out.solutions.size() == 1);
    PolyInequality ineq{X() * X() - C(1), true};
    auto kept = restrict_by_inequalities(out.solutions[0], {ineq});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].str() == "(-1, 1)");

    // non-strict with sign flip: -(x^2 - 1) <= 0 keeps |x| >= 1
    PolyInequality outside{C(1) - X() * X(), false};
    auto rays = restrict_by_inequalities(out.solutions[0], {outside});
    REQUIRE(rays.size() == 2);
    CHECK(rays[0].str() == "(-inf, -1]");
    CHECK(rays[1].str() == "[1, inf)");
}

TEST_CASE("restriction breakpoints may be surds") {
    // y = 0 restricted by x^2 - 2 < 0 -> (-sqrt(2), sqrt(2))
    SolveOutcome out = solve_for_variable(Y());
    PolyInequality ineq{X() * X() - C(2), true};
    auto kept = restrict_by_inequalities(out.solutions[0], {ineq});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].lo.value() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(kept[0].hi.value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("parametric roots satisfy the original equation numerically") {
    // z^2 - (t+1) = 0, roots +-sqrt(t+1)
    std::vector<Expr> coeffs = {
        make_add({make_neg(make_param("t")), make_int(-1)}),  // -(t+1)
        make_int(0),
        make_int(1),
    };
    ParamSolveOutcome out = solve_in_z_with_parameter(coeffs, "t");
    CHECK_FALSE(out.warning.has_value());
    REQUIRE(out.roots.size() == 2);
    for (double tv : {0.5, 1.0, 3.0}) {
        for (const auto& root : out.roots) {
            Complex z = eval_numeric(root, {0.0, 0.0}, {{"t", tv}});
            Complex residual = z * z - Complex{tv + 1.0, 0.0};
            CHECK(std::abs(residual) < 1e-9);
        }
    }
}

TEST_CASE("cubic parametric roots via Cardano") {
    // z^3 - t = 0
    std::vector<Expr> coeffs = {make_neg(make_param("t")), make_int(0),
                                make_int(0), make_int(1)};
    ParamSolveOutcome out = solve_in_z_with_parameter(coeffs, "t");
    REQUIRE(out.roots.size() == 3);
    for (double tv : {1.0, 8.0}) {
        for (const auto& root : out.roots) {
            Complex z = eval_numeric(root, {0.0, 0.0}, {{"t", tv}});
            CHECK(std::abs(z * z * z - Complex{tv, 0.0}) < 1e-8);
        }
    }
}

TEST_CASE("degree five has no closed form and warns") {
    std::vector<Expr> coeffs(6, make_int(1));
    ParamSolveOutcome out = solve_in_z_with_parameter(coeffs, "t");
    CHECK(out.roots.empty());
    REQUIRE(out.warning.has_value());
    CHECK(out.warning->find("closed-form") != std::string::npos);
}
