#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bc/algorithms.hpp"
#include "bc/classify.hpp"
#include "bc/parser.hpp"

using namespace bc;

TEST_CASE("defining cuts of single functions classify true") {
    for (const char* s : {"log(z)", "arcsin(z)", "arctan(z)", "arccosh(z)"}) {
        CAPTURE(s);
        Expr e = parse(s);
        CutSet cs = classify_cutset(e, bc_c(e));
        REQUIRE(!cs.cuts.empty());
        for (const auto& c : cs.cuts)
            CHECK(c.classification.verdict == CutClass::True);
    }
}

TEST_CASE("difference of logs: formulation cut and mixed refinement at x = -1") {
    Expr e = parse("log(z + 1) - log(z - 1)");
    CutSet cs = classify_cutset(e, bc_c(e));
    REQUIRE(cs.cuts.size() == 2);

    const BranchCut* left = nullptr;   // {y=0, x<-1} from log(z+1)
    const BranchCut* right = nullptr;  // {y=0, x<1} from log(z-1)
    for (const auto& c : cs.cuts) {
        if (c.describe() == "{y = 0, x in (-inf, -1)}") left = &c;
        if (c.describe() == "{y = 0, x in (-inf, 1)}") right = &c;
    }
    REQUIRE(left != nullptr);
    REQUIRE(right != nullptr);

    CHECK(left->classification.verdict == CutClass::Spurious);
    REQUIRE(left->classification.spurious_kind.has_value());
    CHECK(*left->classification.spurious_kind == SpuriousKind::Formulation);

    CHECK(right->classification.verdict == CutClass::Mixed);
    REQUIRE(right->classification.segments.size() >= 2);
    // boundary lands at -1 within the bisection resolution
    const auto& segs = right->classification.segments;
    bool boundary_ok = false;
    for (size_t i = 0; i + 1 < segs.size(); ++i)
        if (!segs[i].is_true && segs[i + 1].is_true &&
            std::abs(segs[i].t1 + 1.0) < 2e-3)
            boundary_ok = true;
    CHECK(boundary_ok);
    CHECK(segs.back().is_true);  // (-1, 1) is the true stretch
}

TEST_CASE("probe jump across the true segment is 2 pi in the imaginary part") {
    Expr e = parse("log(z + 1) - log(z - 1)");
    CutSet cs = bc_c(e);
    for (const auto& c : cs.cuts) {
        if (c.describe() != "{y = 0, x in (-inf, 1)}") continue;
        ProbeReport rep = probe_cut(e, c);
        bool sampled = false;
        for (const auto& s : rep.samples) {
            if (s.px < -0.9 || s.px > 0.9) continue;
            // the raw one-sided difference carries the O(eps) smooth drift;
            // the extrapolated jump estimate cancels it
            CHECK(std::abs(std::abs(s.left.imag() - s.right.imag()) -
                           2 * std::numbers::pi) < 1e-4);
            CHECK(std::abs(s.jump - 2 * std::numbers::pi) < 1e-6);
            sampled = true;
        }
        CHECK(sampled);
    }
}

TEST_CASE("f_eps turns the formulation cut true for eps != 1") {
    for (const char* s : {"log(z + 1) - 9/10*log(z - 1)",
                          "log(z + 1) - 11/10*log(z - 1)"}) {
        CAPTURE(s);
        Expr e = parse(s);
        CutSet cs = classify_cutset(e, bc_c(e));
        REQUIRE(!cs.cuts.empty());
        for (const auto& c : cs.cuts) {
            CAPTURE(c.describe());
            CHECK(c.classification.verdict == CutClass::True);
        }
    }
}

TEST_CASE("de-nesting residue classifies spurious with the right kind") {
    AnalyzeOptions keep;
    keep.remove_denested_branches = false;
    Expr e = parse("log(2*sqrt(z))");
    CutSet cs = classify_cutset(e, bc_c(e, keep));
    bool found = false;
    for (const auto& c : cs.cuts) {
        if (c.describe() != "{y = 0, x in (0, inf)}") continue;
        found = true;
        CHECK(c.classification.verdict == CutClass::Spurious);
        REQUIRE(c.classification.spurious_kind.has_value());
        CHECK(*c.classification.spurious_kind == SpuriousKind::DeNesting);
    }
    CHECK(found);
}

TEST_CASE("unbound parameters leave the set unclassified with a warning") {
    ParseOptions po;
    po.parameters = {"a"};
    Expr e = parse("BesselJ(a, sqrt(z^3 - 1))", po);
    CutSet cs = classify_cutset(e, bc_c(e));
    REQUIRE(!cs.cuts.empty());
    for (const auto& c : cs.cuts)
        CHECK(c.classification.verdict == CutClass::Unclassified);
    bool warned = false;
    for (const auto& w : cs.warnings)
        if (w.find("not bound") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("classification is stable under probe refinement") {
    ClassifyOptions fine;
    fine.samples = 66;
    fine.eps = 5e-7;
    for (const char* s :
         {"log(z)", "log(z + 1) - log(z - 1)", "arcsin(2*z*sqrt(1 - z^2))"}) {
        CAPTURE(s);
        Expr e = parse(s);
        CutSet base = classify_cutset(e, bc_c(e));
        CutSet refined = classify_cutset(e, bc_c(e), {}, fine);
        REQUIRE(base.cuts.size() == refined.cuts.size());
        for (size_t i = 0; i < base.cuts.size(); ++i) {
            auto a = base.cuts[i].classification.verdict;
            auto b = refined.cuts[i].classification.verdict;
            // True and Spurious may never flip into each other
            if (a == CutClass::True) CHECK(b != CutClass::Spurious);
            if (a == CutClass::Spurious) CHECK(b != CutClass::True);
        }
    }
}

TEST_CASE("probe report invariants") {
    Expr e = parse("log(z)");
    CutSet cs = bc_c(e);
    REQUIRE(cs.cuts.size() == 1);
    ProbeReport rep = probe_cut(e, cs.cuts[0]);
    CHECK(rep.samples.size() == 33);
    for (const auto& s : rep.samples) {
        // normals are unit length, offsets symmetric by construction
        if (s.verdict == ProbeSample::Indeterminate) continue;
        CHECK(std::hypot(s.nx, s.ny) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(s.jump >= 0.0);
    }
    // parameter values are interior and increasing
    for (size_t i = 1; i < rep.samples.size(); ++i)
        CHECK(rep.samples[i].t > rep.samples[i - 1].t);
}

TEST_CASE("semi-algebraic cuts report as not probed") {
    AnalyzeOptions sa;
    sa.semialgebraic = true;
    Expr e = parse("arctan(z)");
    CutSet cs = classify_cutset(e, bc_c(e, sa));
    REQUIRE(!cs.cuts.empty());
    for (const auto& c : cs.cuts) {
        CHECK(c.classification.verdict == CutClass::Unclassified);
        CHECK(c.classification.note.find("semi-algebraic") != std::string::npos);
    }
}
