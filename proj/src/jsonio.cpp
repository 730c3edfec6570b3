#include "bc/jsonio.hpp"

#include <json.hpp>

#include "bc/parser.hpp"
#include "bc/realexpr.hpp"
#include "bc/solve.hpp"

namespace bc {

namespace {

using json = nlohmann::json;

json endpoint_json(const Endpoint& e) {
    if (e.kind == Endpoint::NegInf) return "-inf";
    if (e.kind == Endpoint::PosInf) return "inf";
    if (e.approx) return e.approx_value;
    if (e.q == 0) return to_string(e.p);
    return json{{"p", to_string(e.p)}, {"q", to_string(e.q)}, {"k", to_string(e.k)}};
}

Endpoint endpoint_from(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "-inf") return Endpoint::neg_inf();
        if (s == "inf") return Endpoint::pos_inf();
        return Endpoint::exact(Rat(s));
    }
    if (j.is_number()) return Endpoint::approximate(j.get<double>());
    if (j.is_object())
        return Endpoint::surd(Rat(j.at("p").get<std::string>()),
                              Rat(j.at("q").get<std::string>()),
                              Rat(j.at("k").get<std::string>()));
    throw JsonError("bad endpoint encoding");
}

json range_json(const ExtendedInterval& iv) {
    return json{{"lo", endpoint_json(iv.lo)},
                {"hi", endpoint_json(iv.hi)},
                {"lo_open", iv.lo_open},
                {"hi_open", iv.hi_open}};
}

ExtendedInterval range_from(const json& j) {
    ExtendedInterval iv;
    iv.lo = endpoint_from(j.at("lo"));
    iv.hi = endpoint_from(j.at("hi"));
    iv.lo_open = j.at("lo_open").get<bool>();
    iv.hi_open = j.at("hi_open").get<bool>();
    return iv;
}

json poly_json(const BivariatePoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({key.first, key.second, to_string(c)});
    return terms;
}

BivariatePoly poly_from(const json& j) {
    BivariatePoly p;
    for (const auto& t : j)
        p = p + BivariatePoly::monomial(t.at(0).get<int>(), t.at(1).get<int>(),
                                        Rat(t.at(2).get<std::string>()));
    return p;
}

const char* method_name(CutMethod m) {
    switch (m) {
        case CutMethod::RealVariables: return "real-variables";
        case CutMethod::RealVariablesSquared: return "real-variables-squared";
        case CutMethod::Parametric: return "parametric";
        case CutMethod::SemiAlgebraic: return "semi-algebraic";
    }
    return "real-variables";
}

CutMethod method_from(const std::string& s) {
    if (s == "real-variables") return CutMethod::RealVariables;
    if (s == "real-variables-squared") return CutMethod::RealVariablesSquared;
    if (s == "parametric") return CutMethod::Parametric;
    if (s == "semi-algebraic") return CutMethod::SemiAlgebraic;
    throw JsonError("unknown cut method: " + s);
}

const char* verdict_tag(CutClass::Verdict v) {
    switch (v) {
        case CutClass::True: return "true";
        case CutClass::Spurious: return "spurious";
        case CutClass::Mixed: return "mixed";
        default: return "unclassified";
    }
}

CutClass::Verdict verdict_from(const std::string& s) {
    if (s == "true") return CutClass::True;
    if (s == "spurious") return CutClass::Spurious;
    if (s == "mixed") return CutClass::Mixed;
    if (s == "unclassified") return CutClass::Unclassified;
    throw JsonError("unknown verdict: " + s);
}

json classification_json(const CutClass& cl) {
    json j;
    j["numeric-verdict"] = verdict_tag(cl.verdict);
    if (cl.spurious_kind) j["spurious_kind"] = spurious_kind_name(*cl.spurious_kind);
    if (!cl.segments.empty()) {
        auto bound = [](double v) -> json {
            if (v == -HUGE_VAL) return "-inf";
            if (v == HUGE_VAL) return "inf";
            return v;
        };
        json segs = json::array();
        for (const auto& s : cl.segments)
            segs.push_back({bound(s.t0), bound(s.t1), s.is_true, s.known});
        j["segments"] = segs;
    }
    if (!cl.note.empty()) j["note"] = cl.note;
    return j;
}

CutClass classification_from(const json& j) {
    CutClass cl;
    cl.verdict = verdict_from(j.at("numeric-verdict").get<std::string>());
    if (j.contains("spurious_kind")) {
        std::string k = j["spurious_kind"].get<std::string>();
        if (k == "de-nesting")
            cl.spurious_kind = SpuriousKind::DeNesting;
        else if (k == "formulation")
            cl.spurious_kind = SpuriousKind::Formulation;
        else if (k == "de-nesting+formulation")
            cl.spurious_kind = SpuriousKind::Both;
        else
            throw JsonError("unknown spurious kind: " + k);
    }
    if (j.contains("segments")) {
        auto bound = [](const json& v) {
            if (v.is_string())
                return v.get<std::string>() == "-inf" ? -HUGE_VAL : HUGE_VAL;
            return v.get<double>();
        };
        for (const auto& s : j["segments"])
            cl.segments.push_back({bound(s.at(0)), bound(s.at(1)),
                                   s.at(2).get<bool>(), s.at(3).get<bool>()});
    }
    if (j.contains("note")) cl.note = j["note"].get<std::string>();
    return cl;
}

json cut_json(const BranchCut& cut) {
    json j;
    j["describe"] = cut.describe();
    j["provenance"] = {{"subterm_path", cut.provenance.subterm_path},
                       {"subterm_text", cut.provenance.subterm_text},
                       {"defining_cut_index", cut.provenance.defining_cut_index},
                       {"denested", cut.provenance.denested},
                       {"method", method_name(cut.provenance.method)}};
    j["classification"] = classification_json(cut.classification);
    switch (cut.form) {
        case BranchCut::RealCurve: {
            const auto& c = *cut.curve;
            j["form"] = "real-curve";
            j["dependent"] = std::string(1, c.dependent());
            j["solution"] = re_str(c.expr, std::string(1, c.free_var()));
            j["range"] = range_json(c.validity);
            j["factor"] = poly_json(c.factor);
            j["branch_index"] = c.branch_index;
            break;
        }
        case BranchCut::ParamCurve: {
            const auto& c = *cut.parametric;
            j["form"] = "param-curve";
            j["parameter"] = c.param;
            j["solution"] = unparse(c.point);
            j["range"] = range_json(c.range);
            j["axis"] = c.axis == Axis::Real ? "real" : "imag";
            break;
        }
        case BranchCut::SemiAlg: {
            const auto& c = *cut.system;
            j["form"] = "semi-algebraic";
            j["equation"] = poly_json(c.equation);
            json conds = json::array();
            for (const auto& q : c.conditions)
                conds.push_back({{"poly", poly_json(q.poly)},
                                 {"strict", q.strict},
                                 {"bound", to_string(q.bound)}});
            j["conditions"] = conds;
            break;
        }
    }
    return j;
}

BranchCut cut_from(const json& j, const std::vector<std::string>& parameters) {
    BranchCut cut;
    const json& p = j.at("provenance");
    cut.provenance.subterm_path = p.at("subterm_path").get<std::string>();
    cut.provenance.subterm_text = p.at("subterm_text").get<std::string>();
    cut.provenance.defining_cut_index = p.at("defining_cut_index").get<int>();
    cut.provenance.denested = p.at("denested").get<bool>();
    cut.provenance.method = method_from(p.at("method").get<std::string>());
    cut.classification = classification_from(j.at("classification"));

    std::string form = j.at("form").get<std::string>();
    if (form == "real-curve") {
        cut.form = BranchCut::RealCurve;
        BivariatePoly factor = poly_from(j.at("factor"));
        bool dep_x = j.at("dependent").get<std::string>() == "x";
        int branch = j.at("branch_index").get<int>();
        // The curve expression is regenerated by re-solving the stored
        // defining polynomial; the solver is deterministic.
        for (bool prefer_x : {dep_x, !dep_x}) {
            for (const auto& sol : solve_for_variable(factor, prefer_x).solutions) {
                if (sol.dependent_is_x == dep_x && sol.branch_index == branch) {
                    cut.curve = sol;
                    cut.curve->validity = range_from(j.at("range"));
                    return cut;
                }
            }
        }
        throw JsonError("stored real-curve branch cannot be reconstructed");
    }
    if (form == "param-curve") {
        cut.form = BranchCut::ParamCurve;
        ParametricCut c;
        c.param = j.at("parameter").get<std::string>();
        ParseOptions po;
        po.parameters.insert(parameters.begin(), parameters.end());
        po.parameters.insert(c.param);
        c.point = parse(j.at("solution").get<std::string>(), po);
        c.range = range_from(j.at("range"));
        c.axis = j.at("axis").get<std::string>() == "imag" ? Axis::Imag : Axis::Real;
        cut.parametric = std::move(c);
        return cut;
    }
    if (form == "semi-algebraic") {
        cut.form = BranchCut::SemiAlg;
        SemiAlgSystem sys;
        sys.equation = poly_from(j.at("equation"));
        for (const auto& q : j.at("conditions"))
            sys.conditions.push_back({poly_from(q.at("poly")),
                                      q.at("strict").get<bool>(),
                                      Rat(q.at("bound").get<std::string>())});
        cut.system = std::move(sys);
        return cut;
    }
    throw JsonError("unknown cut form: " + form);
}

}  // namespace

std::string cutset_to_json(const CutSet& cs, const CutSetMeta& meta) {
    json doc;
    doc["expression"] = meta.expression;
    doc["variable"] = meta.variable;
    doc["method"] = meta.method;
    doc["parameters"] = meta.parameters;
    doc["cuts"] = json::array();
    for (const auto& c : cs.cuts) doc["cuts"].push_back(cut_json(c));
    doc["warnings"] = cs.warnings;
    doc["removed"] = json::array();
    for (const auto& c : cs.removed) doc["removed"].push_back(cut_json(c));
    return doc.dump(2) + "\n";
}

CutSet cutset_from_json(const std::string& text, CutSetMeta* meta) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw JsonError(std::string("invalid JSON: ") + ex.what());
    }
    try {
        std::vector<std::string> parameters =
            doc.value("parameters", std::vector<std::string>{});
        if (meta) {
            meta->expression = doc.value("expression", "");
            meta->variable = doc.value("variable", "z");
            meta->method = doc.value("method", "auto");
            meta->parameters = parameters;
        }
        CutSet cs;
        for (const auto& c : doc.at("cuts")) cs.cuts.push_back(cut_from(c, parameters));
        cs.warnings = doc.value("warnings", std::vector<std::string>{});
        if (doc.contains("removed"))
            for (const auto& c : doc["removed"]) cs.removed.push_back(cut_from(c, parameters));
        return cs;
    } catch (const json::exception& ex) {
        throw JsonError(std::string("malformed cut document: ") + ex.what());
    }
}

}  // namespace bc
