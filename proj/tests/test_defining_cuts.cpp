#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "bc/defining_cuts.hpp"
#include "bc/eval.hpp"

using namespace bc;

namespace {

// Midpoint of a cut range, pushed 1 unit inward from infinite ends.
double midpoint(const ExtendedInterval& r) {
    bool lo = r.lo.is_finite(), hi = r.hi.is_finite();
    if (lo && hi) return 0.5 * (r.lo.value() + r.hi.value());
    if (lo) return r.lo.value() + 1.0;
    if (hi) return r.hi.value() - 1.0;
    return 0.0;
}

Complex fn_eval(const CutTableEntry& e, Complex w) {
    std::vector<double> fp;
    if (e.fn.param_slots > 0) fp.assign(e.fn.param_slots, 0.5);
    return eval_function(e.fn.name, w, fp);
}

}  // namespace

TEST_CASE("table/eval consistency: jump on the cut, continuity off axis") {
    const double off = 1e-6;
    for (const auto& entry : DefiningCutTable::instance().entries()) {
        for (const auto& cut : entry.cuts) {
            CAPTURE(entry.fn.name);
            double m = midpoint(cut.range);
            Complex side{off, 0.0}, on;
            if (cut.axis == Axis::Real) {
                on = {m, 0.0};
                side = {0.0, off};
            } else {
                on = {0.0, m};
                side = {off, 0.0};
            }
            Complex a = fn_eval(entry, on + side);
            Complex b = fn_eval(entry, on - side);
            CHECK(std::abs(a - b) > 0.01);

            // one unit off-axis the function is continuous
            Complex shift = cut.axis == Axis::Real ? Complex{0.0, 1.0}
                                                   : Complex{1.0, 0.0};
            Complex c = fn_eval(entry, on + shift + side);
            Complex d = fn_eval(entry, on + shift - side);
            // smooth variation over the 2e-6 spacing, so well under any jump
            CHECK(std::abs(c - d) < 1e-5);
        }
    }
}

TEST_CASE("every registered symbol has a table verdict") {
    const auto& table = DefiningCutTable::instance();
    for (const auto& fn : FunctionRegistry::instance().all()) {
        CAPTURE(fn.name);
        Tri t = table.has_cuts(fn);
        CHECK((t == Tri::Yes || t == Tri::No || t == Tri::Conditional));
        CHECK(table.entry_for(fn.name) != nullptr);
    }
}

TEST_CASE("shipped data file matches the registered table") {
    std::ifstream f(std::string(BC_SOURCE_DIR) + "/data/defining_cuts.json");
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == DefiningCutTable::instance().to_json());
}

TEST_CASE("conditional cuts: BesselJ depends on the order being non-integer") {
    const auto& table = DefiningCutTable::instance();
    FunctionSymbol bj{"BesselJ", 1};
    CHECK(table.has_cuts(bj) == Tri::Conditional);

    auto unbound = table.lookup(bj, {});
    CHECK(unbound.cuts.size() == 1);
    REQUIRE(unbound.warning.has_value());
    CHECK(*unbound.warning ==
          "branch cuts computed which only occur if a is not an integer");

    auto half = table.lookup(bj, {{"a", 0.5}});
    CHECK(half.cuts.size() == 1);
    CHECK_FALSE(half.warning.has_value());

    auto integer = table.lookup(bj, {{"a", 2.0}});
    CHECK(integer.cuts.empty());
    CHECK_FALSE(integer.warning.has_value());
}

TEST_CASE("radical powers share the log convention") {
    auto cuts = radical_power_cuts();
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0].axis == Axis::Real);
    CHECK(cuts[0].range.str() == "(-inf, 0)");
}

TEST_CASE("axis-portion assumption holds for every entry") {
    for (const auto& entry : DefiningCutTable::instance().entries())
        for (const auto& cut : entry.cuts) {
            CHECK_FALSE(cut.range.empty());
            CHECK(cut.range.lo.value() < cut.range.hi.value());
        }
}

TEST_CASE("log-singularity endpoints are closed where required") {
    const auto& table = DefiningCutTable::instance();
    const auto* arctan = table.entry_for("arctan");
    REQUIRE(arctan != nullptr);
    REQUIRE(arctan->cuts.size() == 2);
    CHECK_FALSE(arctan->cuts[0].range.hi_open);  // (-inf, -1]
    CHECK_FALSE(arctan->cuts[1].range.lo_open);  // [1, inf)
    const auto* arcsin = table.entry_for("arcsin");
    REQUIRE(arcsin != nullptr);
    CHECK(arcsin->cuts[0].range.hi_open);  // algebraic branch point stays open
}
