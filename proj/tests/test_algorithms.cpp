#include <doctest.h>

#include <algorithm>
#include <set>

#include "bc/algorithms.hpp"
#include "bc/parser.hpp"

using namespace bc;

namespace {

Expr parse_p(const std::string& s, std::set<std::string> params = {}) {
    ParseOptions po;
    po.parameters = std::move(params);
    return parse(s, po);
}

std::multiset<std::string> describe_all(const CutSet& cs) {
    std::multiset<std::string> out;
    for (const auto& c : cs.cuts) out.insert(c.describe());
    return out;
}

bool has_cut(const CutSet& cs, const std::string& text) {
    return std::any_of(cs.cuts.begin(), cs.cuts.end(), [&](const BranchCut& c) {
        return c.describe() == text;
    });
}

}  // namespace

TEST_CASE("log of a quadratic: segment plus imaginary axis") {
    CutSet cs = bc_f_rv1(parse_p("log(z^2 - 1)"), {});
    auto got = describe_all(cs);
    std::multiset<std::string> want{"{y = 0, x in (-1, 1)}",
                                    "{x = 0, y in (-inf, inf)}"};
    CHECK(got == want);
    CHECK(cs.warnings.empty());
}

TEST_CASE("radical argument: the four sets of arcsin(2z sqrt(1-z^2))") {
    CutSet cs = bc_c(parse_p("arcsin(2*z*sqrt(1 - z^2))"));
    auto got = describe_all(cs);
    std::multiset<std::string> want{
        "{y = 0, x in (-inf, -1)}",
        "{y = 0, x in (1, inf)}",
        "{x = 1/2*sqrt(4*y^2 + 2), y in (-inf, inf)}",
        "{x = -1/2*sqrt(4*y^2 + 2), y in (-inf, inf)}",
    };
    CHECK(got == want);
}

TEST_CASE("de-nesting certificate removes the positive ray") {
    CutSet cs = bc_c(parse_p("log(2*sqrt(z))"));
    CHECK(has_cut(cs, "{y = 0, x in (-inf, 0)}"));
    CHECK_FALSE(has_cut(cs, "{y = 0, x in (0, inf)}"));
    REQUIRE(cs.removed.size() == 1);
    CHECK(cs.removed[0].describe() == "{y = 0, x in (0, inf)}");
    CHECK(cs.removed[0].classification.verdict == CutClass::Spurious);
    REQUIRE(cs.removed[0].classification.spurious_kind.has_value());
    CHECK(*cs.removed[0].classification.spurious_kind == SpuriousKind::DeNesting);

    AnalyzeOptions keep;
    keep.remove_denested_branches = false;
    CutSet kept = bc_c(parse_p("log(2*sqrt(z))"), keep);
    CHECK(has_cut(kept, "{y = 0, x in (0, inf)}"));
    CHECK(kept.removed.empty());
    bool residue_warned =
        std::any_of(kept.warnings.begin(), kept.warnings.end(),
                    [](const std::string& w) {
                        return w.find("de-nesting residue") != std::string::npos;
                    });
    CHECK(residue_warned);
}

TEST_CASE("the certificate does not fire on shifted radicands") {
    // radicand z + 1 is not the bare variable, so the de-nested ray stays
    CutSet cs = bc_c(parse_p("log(2*sqrt(z + 1))"));
    CHECK(cs.removed.empty());
    CHECK(has_cut(cs, "{y = 0, x in (-1, inf)}"));
    CHECK(has_cut(cs, "{y = 0, x in (-inf, -1)}"));
}

TEST_CASE("Bessel of a radical: six cut sets plus the parameter warning") {
    AnalyzeOptions real;
    real.method = Method::Real;
    CutSet cs = bc_c(parse_p("BesselJ(a, sqrt(z^3 - 1))", {"a"}), real);
    auto got = describe_all(cs);
    std::multiset<std::string> want{
        "{y = 0, x in (1, inf)}",
        "{y = 0, x in (-inf, 1)}",
        "{x = 1/3*sqrt(3)*y, y in (-inf, -1/2*sqrt(3))}",
        "{x = 1/3*sqrt(3)*y, y in (-1/2*sqrt(3), inf)}",
        "{x = -1/3*sqrt(3)*y, y in (1/2*sqrt(3), inf)}",
        "{x = -1/3*sqrt(3)*y, y in (-inf, 1/2*sqrt(3))}",
    };
    CHECK(got == want);
    bool warned = std::any_of(cs.warnings.begin(), cs.warnings.end(),
                              [](const std::string& w) {
                                  return w == "branch cuts computed which only "
                                              "occur if a is not an integer";
                              });
    CHECK(warned);
}

TEST_CASE("semi-algebraic mode on the arctan addition identity") {
    AnalyzeOptions sa;
    sa.semialgebraic = true;
    CutSet cs =
        bc_c(parse_p("arctan(z) + arctan(z^2) - arctan(z*(1 + z)/(1 - z^3))"), sa);
    REQUIRE(cs.cuts.size() == 6);
    for (const auto& c : cs.cuts) CHECK(c.form == BranchCut::SemiAlg);
    auto got = describe_all(cs);
    // composed argument: equation f = x^5+2x^3y^2+xy^4+x^4-y^4-x^2+y^2-x
    // together with an Im-part bound, once per sign.
    bool has_f = std::any_of(got.begin(), got.end(), [](const std::string& s) {
        return s.find("x^5 + 2*x^3*y^2 + x*y^4 + x^4 - y^4 - x^2 + y^2 - x = 0") !=
               std::string::npos;
    });
    CHECK(has_f);
    std::multiset<std::string> simple{
        "{x = 0, y <= -1}",
        "{x = 0, -y <= -1}",
        "{x^2 - y^2 = 0, 2*x*y <= -1}",
        "{x^2 - y^2 = 0, -2*x*y <= -1}",
    };
    for (const auto& s : simple) CHECK(got.count(s) == 1);
}

TEST_CASE("parametric method on log(z^2 - 1)") {
    AnalyzeOptions par;
    par.method = Method::Parametric;
    CutSet cs = bc_c(parse_p("log(z^2 - 1)"), par);
    auto got = describe_all(cs);
    std::multiset<std::string> want{
        "{z = 1/2*sqrt(4*t + 4), t in (-inf, 0)}",
        "{z = -1/2*sqrt(4*t + 4), t in (-inf, 0)}",
    };
    CHECK(got == want);
}

TEST_CASE("nested arccosh-sqrt argument: teardrop boundary plus axis pieces") {
    CutSet cs = bc_c(parse_p("arccosh(2*(z + 3)*sqrt((z + 3)/(27*(z + 4))))"));
    auto got = describe_all(cs);
    CHECK(got.count("{y = ((2*x + 6)*sqrt(-4*x^2 - 28*x - 45))/(4*x + 10), x in "
                    "[-9/2, -3]}") == 1);
    CHECK(got.count("{y = (-(2*x + 6)*sqrt(-4*x^2 - 28*x - 45))/(4*x + 10), x in "
                    "[-9/2, -3]}") == 1);
    CHECK(got.count("{y = 0, x in (-inf, -4]}") == 1);
    CHECK(got.count("{y = 0, x in [-3, inf)}") == 1);
    CHECK(got.count("{y = 0, x in (-4, -3)}") == 1);
    CHECK(got.size() == 5);
}

TEST_CASE("bc_f_rv1 requires a rational argument") {
    Expr e = parse_p("log(sqrt(z))");
    auto node = cut_bearing_subterms(e)[0].subterm;
    CHECK_THROWS_AS(bc_f_rv1(node, {}), NotSupported);
}

TEST_CASE("per-subterm union covers formulation examples") {
    CutSet cs = bc_c(parse_p("log(z + 1) - log(z - 1)"));
    auto got = describe_all(cs);
    std::multiset<std::string> want{"{y = 0, x in (-inf, -1)}",
                                    "{y = 0, x in (-inf, 1)}"};
    CHECK(got == want);
    // provenance distinguishes the two subterms
    CHECK(cs.cuts[0].provenance.subterm_path != cs.cuts[1].provenance.subterm_path);
}

TEST_CASE("cut-free expressions produce no cuts") {
    CHECK(bc_c(parse_p("exp(z)")).cuts.empty());
    CHECK(bc_c(parse_p("z^3 + 2*z")).cuts.empty());
    CHECK(bc_c(parse_p("sin(z)*cos(z)")).cuts.empty());
}

TEST_CASE("arcsin squaring folds the two defining cuts into one system") {
    // arcsin has two defining cuts; after squaring a radical argument they
    // produce the same system and must be reported once per branch.
    CutSet cs = bc_c(parse_p("arcsin(sqrt(z))"));
    auto got = describe_all(cs);
    // squared system: cuts where z real with z<0 (subterm) and z>1 (arcsin)
    CHECK(got.count("{y = 0, x in (-inf, 0)}") == 1);
}
